// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ppslab/quantum.hpp"

namespace ppslab {

// Finite set of ontic states, identified by distinct labels. Order is
// significant: distributions, indicators and transition matrices index into
// it positionally.
class OnticSpace {
 public:
  explicit OnticSpace(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t index_of(const std::string& label) const;

  bool operator==(const OnticSpace& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
};

// Probability distribution mu over an ontic space; weights sum to one.
class Distribution {
 public:
  Distribution(OnticSpace space, Eigen::VectorXd weights);

  static Distribution uniform(const OnticSpace& space);
  static Distribution uniform_on(const OnticSpace& space,
                                 const std::vector<std::string>& support);
  static Distribution point(const OnticSpace& space, const std::string& label);

  const OnticSpace& space() const { return space_; }
  const Eigen::VectorXd& weights() const { return weights_; }
  double weight(std::size_t i) const { return weights_[static_cast<Eigen::Index>(i)]; }

 private:
  OnticSpace space_;
  Eigen::VectorXd weights_;
};

// Outcome-deterministic response function chi: every value exactly 0 or 1.
class IndicatorFunction {
 public:
  IndicatorFunction(OnticSpace space, std::vector<int> values);

  static IndicatorFunction on_subset(const OnticSpace& space,
                                     const std::vector<std::string>& subset);

  const OnticSpace& space() const { return space_; }
  int value(std::size_t i) const { return values_[i]; }
  const std::vector<int>& values() const { return values_; }

  bool operator==(const IndicatorFunction& other) const {
    return space_ == other.space_ && values_ == other.values_;
  }

 private:
  OnticSpace space_;
  std::vector<int> values_;
};

// Stochastic disturbance kernel. entries(target, source) is the probability
// of a transition from source to target; every source column sums to one.
class TransitionMatrix {
 public:
  TransitionMatrix(OnticSpace space, Eigen::MatrixXd entries);

  static TransitionMatrix identity(const OnticSpace& space);

  const OnticSpace& space() const { return space_; }
  const Eigen::MatrixXd& entries() const { return entries_; }
  double entry(std::size_t target, std::size_t source) const {
    return entries_(static_cast<Eigen::Index>(target), static_cast<Eigen::Index>(source));
  }

 private:
  OnticSpace space_;
  Eigen::MatrixXd entries_;
};

// The transformation aspect of one measurement outcome,
// Gamma(target, source) = D(target, source) * chi(source): Bayesian update
// composed with disturbance. Columns where chi = 0 are masked to zero, so
// sum_target Gamma(target, source) = chi(source) holds by construction and is
// checked on entry.
class OutcomeKernel {
 public:
  OutcomeKernel(IndicatorFunction indicator, TransitionMatrix disturbance);

  const OnticSpace& space() const { return indicator_.space(); }
  const IndicatorFunction& indicator() const { return indicator_; }
  const TransitionMatrix& disturbance() const { return disturbance_; }

  // Gamma as a dense (target, source) matrix.
  Eigen::MatrixXd gamma() const;

 private:
  IndicatorFunction indicator_;
  TransitionMatrix disturbance_;
};

// A measurement in a hidden-variable model: ordered outcome kernels over a
// shared space whose indicators partition the space (sum to the unit
// function). Outcomes may carry a quantum projector tag; the noncontextuality
// predicates require tags.
class HvtMeasurement {
 public:
  HvtMeasurement(std::string label, std::vector<std::string> outcome_labels,
                 std::vector<OutcomeKernel> kernels,
                 std::vector<std::optional<Projector>> tags = {});

  const std::string& label() const { return label_; }
  const OnticSpace& space() const { return kernels_.front().space(); }
  std::size_t size() const { return kernels_.size(); }
  const std::string& outcome_label(std::size_t j) const { return outcome_labels_[j]; }
  const OutcomeKernel& kernel(std::size_t j) const { return kernels_[j]; }
  const std::optional<Projector>& tag(std::size_t j) const { return tags_[j]; }
  std::size_t index_of(const std::string& outcome) const;

 private:
  std::string label_;
  std::vector<std::string> outcome_labels_;
  std::vector<OutcomeKernel> kernels_;
  std::vector<std::optional<Projector>> tags_;
};

// A pre- and post-selected frame over an ontic model: mu_pre is the
// distribution conditioned on successful pre-selection, chi_post the
// indicator of the post-selection event.
struct HvtScenario {
  HvtScenario(OnticSpace space, Distribution mu_pre, IndicatorFunction chi_post,
              std::vector<HvtMeasurement> measurements);

  OnticSpace space;
  Distribution mu_pre;
  IndicatorFunction chi_post;
  std::vector<HvtMeasurement> measurements;

  const HvtMeasurement& measurement(const std::string& label) const;
};

// p(X = j) = sum_lambda chi_j(lambda) mu(lambda).
double hvt_outcome_probability(const Distribution& mu, const HvtMeasurement& m,
                               const std::string& outcome);

// Posterior over ontic states after outcome j:
// mu'(target) = sum_source Gamma_j(target, source) mu(source), normalized.
Distribution hvt_update(const Distribution& mu, const HvtMeasurement& m,
                        const std::string& outcome);

// PPS probability rule for ontic models:
//
//   p = sum chi_post Gamma_k mu_pre / sum chi_post (Gamma_k + Gamma_notk) mu_pre
//
// with Gamma_notk the sum of the remaining outcome kernels.
double hvt_pps_probability(const HvtScenario& scenario, const HvtMeasurement& m,
                           const std::string& outcome);

// One outcome pair whose quantum tags agree but whose ontic representation
// differs. For indicator mismatches `witness_state` names an ontic state where
// the two chi differ; for kernel mismatches it names a (target, source) cell.
struct NoncontextViolation {
  std::string measurement_a;
  std::string outcome_a;
  std::string measurement_b;
  std::string outcome_b;
  std::string witness;
};

struct NoncontextReport {
  std::vector<NoncontextViolation> violations;
  bool noncontextual() const { return violations.empty(); }
};

// Outcomes tagged with equal projectors must share one indicator function.
// Throws ValidationError if any outcome is untagged.
NoncontextReport check_measurement_noncontextuality(
    const std::vector<HvtMeasurement>& measurements);

// Outcomes tagged with equal projectors (same Lueders map) must share one
// outcome kernel Gamma, compared entrywise at tol::kVanishing.
NoncontextReport check_transformation_noncontextuality(
    const std::vector<HvtMeasurement>& measurements);

// Trajectory sampling for the PPS rule: draw lambda from mu_pre, read the
// outcome off the indicators, draw the disturbed state from the outcome's
// transition column, accept when chi_post holds there.
struct PpsSampleStats {
  std::uint64_t trials = 0;
  std::uint64_t accepted = 0;                  // chi_post held
  std::vector<std::uint64_t> accepted_by_outcome;  // indexed like m's outcomes

  // Conditional estimate p(X = j | accepted) and its standard error.
  double estimate(std::size_t j) const;
  double standard_error(std::size_t j) const;
};

PpsSampleStats sample_pps(const HvtScenario& scenario, const HvtMeasurement& m,
                          std::uint64_t trials, std::uint64_t seed);

}  // namespace ppslab
