// SPDX-License-Identifier: Apache-2.0
#include "ppslab/hvt.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace ppslab {

OnticSpace::OnticSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw ValidationError("OnticSpace: must have at least one state");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) {
    throw ValidationError("OnticSpace: duplicate state labels");
  }
}

std::size_t OnticSpace::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw UnknownLabelError("OnticSpace: unknown state '" + label + "'");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

Distribution::Distribution(OnticSpace space, Eigen::VectorXd weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  if (static_cast<std::size_t>(weights_.size()) != space_.size()) {
    throw DimensionMismatchError("Distribution: weight count mismatch");
  }
  if (weights_.minCoeff() < 0.0) {
    throw ValidationError("Distribution: negative weight");
  }
  const double total = weights_.sum();
  if (std::abs(total - 1.0) > tol::kVanishing) {
    std::ostringstream msg;
    msg << "Distribution: weights sum to " << total << ", expected 1";
    throw ValidationError(msg.str());
  }
}

Distribution Distribution::uniform(const OnticSpace& space) {
  return Distribution(space, Eigen::VectorXd::Constant(
                                 static_cast<Eigen::Index>(space.size()),
                                 1.0 / static_cast<double>(space.size())));
}

Distribution Distribution::uniform_on(const OnticSpace& space,
                                      const std::vector<std::string>& support) {
  if (support.empty()) throw ValidationError("Distribution: empty support");
  Eigen::VectorXd w = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(space.size()));
  for (const std::string& label : support) {
    w[static_cast<Eigen::Index>(space.index_of(label))] =
        1.0 / static_cast<double>(support.size());
  }
  return Distribution(space, std::move(w));
}

Distribution Distribution::point(const OnticSpace& space, const std::string& label) {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(space.size()));
  w[static_cast<Eigen::Index>(space.index_of(label))] = 1.0;
  return Distribution(space, std::move(w));
}

IndicatorFunction::IndicatorFunction(OnticSpace space, std::vector<int> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.size()) {
    throw DimensionMismatchError("IndicatorFunction: value count mismatch");
  }
  for (int v : values_) {
    if (v != 0 && v != 1) {
      throw ValidationError("IndicatorFunction: values must be exactly 0 or 1");
    }
  }
}

IndicatorFunction IndicatorFunction::on_subset(const OnticSpace& space,
                                               const std::vector<std::string>& subset) {
  std::vector<int> values(space.size(), 0);
  for (const std::string& label : subset) {
    values[space.index_of(label)] = 1;
  }
  return IndicatorFunction(space, std::move(values));
}

TransitionMatrix::TransitionMatrix(OnticSpace space, Eigen::MatrixXd entries)
    : space_(std::move(space)), entries_(std::move(entries)) {
  const auto n = static_cast<Eigen::Index>(space_.size());
  if (entries_.rows() != n || entries_.cols() != n) {
    throw DimensionMismatchError("TransitionMatrix: shape mismatch");
  }
  if (entries_.minCoeff() < 0.0) {
    throw ValidationError("TransitionMatrix: negative entry");
  }
  for (Eigen::Index source = 0; source < n; ++source) {
    const double total = entries_.col(source).sum();
    if (std::abs(total - 1.0) > tol::kVanishing) {
      std::ostringstream msg;
      msg << "TransitionMatrix: column for source '" << space_.label(source)
          << "' sums to " << total << ", expected 1";
      throw ValidationError(msg.str());
    }
  }
}

TransitionMatrix TransitionMatrix::identity(const OnticSpace& space) {
  const auto n = static_cast<Eigen::Index>(space.size());
  return TransitionMatrix(space, Eigen::MatrixXd::Identity(n, n));
}

OutcomeKernel::OutcomeKernel(IndicatorFunction indicator, TransitionMatrix disturbance)
    : indicator_(std::move(indicator)), disturbance_(std::move(disturbance)) {
  if (!(indicator_.space() == disturbance_.space())) {
    throw DimensionMismatchError("OutcomeKernel: indicator and disturbance spaces differ");
  }
  // Marginal identity sum_target Gamma(target, source) = chi(source).
  const Eigen::MatrixXd g = gamma();
  for (Eigen::Index source = 0; source < g.cols(); ++source) {
    const double marginal = g.col(source).sum();
    const double chi = indicator_.value(static_cast<std::size_t>(source));
    if (std::abs(marginal - chi) > tol::kVanishing) {
      std::ostringstream msg;
      msg << "OutcomeKernel: kernel marginal " << marginal << " differs from chi = "
          << chi << " at source '" << space().label(source) << "'";
      throw ValidationError(msg.str());
    }
  }
}

Eigen::MatrixXd OutcomeKernel::gamma() const {
  Eigen::MatrixXd g = disturbance_.entries();
  for (Eigen::Index source = 0; source < g.cols(); ++source) {
    if (indicator_.value(static_cast<std::size_t>(source)) == 0) {
      g.col(source).setZero();
    }
  }
  return g;
}

HvtMeasurement::HvtMeasurement(std::string label, std::vector<std::string> outcome_labels,
                               std::vector<OutcomeKernel> kernels,
                               std::vector<std::optional<Projector>> tags)
    : label_(std::move(label)),
      outcome_labels_(std::move(outcome_labels)),
      kernels_(std::move(kernels)),
      tags_(std::move(tags)) {
  if (kernels_.empty()) throw ValidationError("HvtMeasurement: no outcomes");
  if (outcome_labels_.size() != kernels_.size()) {
    throw ValidationError("HvtMeasurement: outcome label count mismatch");
  }
  if (tags_.empty()) tags_.resize(kernels_.size());
  if (tags_.size() != kernels_.size()) {
    throw ValidationError("HvtMeasurement: tag count mismatch");
  }
  const OnticSpace& sp = kernels_.front().space();
  for (const OutcomeKernel& k : kernels_) {
    if (!(k.space() == sp)) {
      throw DimensionMismatchError("HvtMeasurement: kernels over different spaces");
    }
  }
  std::set<std::string> seen(outcome_labels_.begin(), outcome_labels_.end());
  if (seen.size() != outcome_labels_.size()) {
    throw ValidationError("HvtMeasurement: duplicate outcome labels");
  }
  // Indicators must partition the space.
  for (std::size_t i = 0; i < sp.size(); ++i) {
    int total = 0;
    for (const OutcomeKernel& k : kernels_) total += k.indicator().value(i);
    if (total != 1) {
      std::ostringstream msg;
      msg << "HvtMeasurement '" << label_ << "': indicators sum to " << total
          << " at state '" << sp.label(i) << "', expected 1";
      throw ValidationError(msg.str());
    }
  }
}

std::size_t HvtMeasurement::index_of(const std::string& outcome) const {
  const auto it = std::find(outcome_labels_.begin(), outcome_labels_.end(), outcome);
  if (it == outcome_labels_.end()) {
    throw UnknownLabelError("HvtMeasurement '" + label_ + "': unknown outcome '" +
                            outcome + "'");
  }
  return static_cast<std::size_t>(it - outcome_labels_.begin());
}

HvtScenario::HvtScenario(OnticSpace space_in, Distribution mu_pre_in,
                         IndicatorFunction chi_post_in,
                         std::vector<HvtMeasurement> measurements_in)
    : space(std::move(space_in)),
      mu_pre(std::move(mu_pre_in)),
      chi_post(std::move(chi_post_in)),
      measurements(std::move(measurements_in)) {
  if (!(mu_pre.space() == space) || !(chi_post.space() == space)) {
    throw DimensionMismatchError("HvtScenario: components over different spaces");
  }
  for (const HvtMeasurement& m : measurements) {
    if (!(m.space() == space)) {
      throw DimensionMismatchError("HvtScenario: measurement over different space");
    }
  }
}

const HvtMeasurement& HvtScenario::measurement(const std::string& label) const {
  for (const HvtMeasurement& m : measurements) {
    if (m.label() == label) return m;
  }
  throw UnknownLabelError("HvtScenario: unknown measurement '" + label + "'");
}

double hvt_outcome_probability(const Distribution& mu, const HvtMeasurement& m,
                               const std::string& outcome) {
  if (!(mu.space() == m.space())) {
    throw DimensionMismatchError("hvt_outcome_probability: space mismatch");
  }
  const OutcomeKernel& kernel = m.kernel(m.index_of(outcome));
  double p = 0.0;
  for (std::size_t i = 0; i < mu.space().size(); ++i) {
    p += kernel.indicator().value(i) * mu.weight(i);
  }
  return std::clamp(p, 0.0, 1.0);
}

Distribution hvt_update(const Distribution& mu, const HvtMeasurement& m,
                        const std::string& outcome) {
  const double p = hvt_outcome_probability(mu, m, outcome);
  if (p <= tol::kVanishing) {
    throw ZeroProbabilityError("hvt_update: zero-probability outcome '" + outcome + "'");
  }
  const OutcomeKernel& kernel = m.kernel(m.index_of(outcome));
  Eigen::VectorXd posterior = kernel.gamma() * mu.weights();
  posterior /= posterior.sum();
  return Distribution(mu.space(), std::move(posterior));
}

double hvt_pps_probability(const HvtScenario& scenario, const HvtMeasurement& m,
                           const std::string& outcome) {
  if (!(m.space() == scenario.space)) {
    throw DimensionMismatchError("hvt_pps_probability: space mismatch");
  }
  const std::size_t k = m.index_of(outcome);
  const auto n = static_cast<Eigen::Index>(scenario.space.size());

  Eigen::VectorXd post(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    post[i] = scenario.chi_post.value(static_cast<std::size_t>(i));
  }

  double numerator = 0.0;
  double denominator = 0.0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    const double w = post.dot(m.kernel(j).gamma() * scenario.mu_pre.weights());
    denominator += w;
    if (j == k) numerator = w;
  }
  if (denominator <= tol::kVanishing) {
    throw ImpossiblePostSelectionError(
        "hvt_pps_probability: post-selection unreachable for this measurement");
  }
  return std::clamp(numerator / denominator, 0.0, 1.0);
}

namespace {

struct TaggedOutcome {
  std::size_t measurement;
  std::size_t outcome;
};

// Outcomes grouped by equal projector tags (entrywise tol::kValidity).
std::vector<std::vector<TaggedOutcome>> group_by_tag(
    const std::vector<HvtMeasurement>& measurements) {
  std::vector<Projector> representatives;
  std::vector<std::vector<TaggedOutcome>> groups;
  for (std::size_t m = 0; m < measurements.size(); ++m) {
    for (std::size_t j = 0; j < measurements[m].size(); ++j) {
      const auto& tag = measurements[m].tag(j);
      if (!tag.has_value()) {
        throw ValidationError("noncontextuality check: outcome '" +
                              measurements[m].outcome_label(j) + "' of '" +
                              measurements[m].label() + "' has no projector tag");
      }
      bool placed = false;
      for (std::size_t g = 0; g < representatives.size(); ++g) {
        if (representatives[g].dim() == tag->dim() &&
            representatives[g].approx_equal(*tag)) {
          groups[g].push_back({m, j});
          placed = true;
          break;
        }
      }
      if (!placed) {
        representatives.push_back(*tag);
        groups.push_back({{m, j}});
      }
    }
  }
  return groups;
}

NoncontextViolation make_violation(const std::vector<HvtMeasurement>& ms,
                                   const TaggedOutcome& a, const TaggedOutcome& b,
                                   std::string witness) {
  return NoncontextViolation{ms[a.measurement].label(),
                             ms[a.measurement].outcome_label(a.outcome),
                             ms[b.measurement].label(),
                             ms[b.measurement].outcome_label(b.outcome),
                             std::move(witness)};
}

}  // namespace

NoncontextReport check_measurement_noncontextuality(
    const std::vector<HvtMeasurement>& measurements) {
  NoncontextReport report;
  for (const auto& group : group_by_tag(measurements)) {
    const auto& head = group.front();
    const IndicatorFunction& chi0 =
        measurements[head.measurement].kernel(head.outcome).indicator();
    for (std::size_t i = 1; i < group.size(); ++i) {
      const auto& other = group[i];
      const IndicatorFunction& chi =
          measurements[other.measurement].kernel(other.outcome).indicator();
      for (std::size_t s = 0; s < chi0.space().size(); ++s) {
        if (chi0.value(s) != chi.value(s)) {
          report.violations.push_back(
              make_violation(measurements, head, other, chi0.space().label(s)));
          break;
        }
      }
    }
  }
  return report;
}

NoncontextReport check_transformation_noncontextuality(
    const std::vector<HvtMeasurement>& measurements) {
  NoncontextReport report;
  for (const auto& group : group_by_tag(measurements)) {
    const auto& head = group.front();
    const Eigen::MatrixXd g0 = measurements[head.measurement].kernel(head.outcome).gamma();
    for (std::size_t i = 1; i < group.size(); ++i) {
      const auto& other = group[i];
      const Eigen::MatrixXd g = measurements[other.measurement].kernel(other.outcome).gamma();
      Eigen::Index target = 0, source = 0;
      const double diff = (g0 - g).cwiseAbs().maxCoeff(&target, &source);
      if (diff > tol::kVanishing) {
        const OnticSpace& sp = measurements[head.measurement].space();
        std::ostringstream witness;
        witness << sp.label(target) << "<-" << sp.label(source);
        report.violations.push_back(
            make_violation(measurements, head, other, witness.str()));
      }
    }
  }
  return report;
}

double PpsSampleStats::estimate(std::size_t j) const {
  if (accepted == 0) return 0.0;
  return static_cast<double>(accepted_by_outcome[j]) / static_cast<double>(accepted);
}

double PpsSampleStats::standard_error(std::size_t j) const {
  if (accepted == 0) return 0.0;
  const double p = estimate(j);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(accepted));
}

namespace {

// Uniform double in [0,1) from the top 53 bits; keeps sampling reproducible
// across standard library implementations.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t sample_index(const Eigen::VectorXd& weights, double total,
                         std::mt19937_64& rng) {
  const double u = uniform01(rng) * total;
  double cumulative = 0.0;
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    cumulative += weights[i];
    if (u < cumulative) return static_cast<std::size_t>(i);
  }
  return static_cast<std::size_t>(weights.size() - 1);
}

}  // namespace

PpsSampleStats sample_pps(const HvtScenario& scenario, const HvtMeasurement& m,
                          std::uint64_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PpsSampleStats stats;
  stats.trials = trials;
  stats.accepted_by_outcome.assign(m.size(), 0);

  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::size_t lambda = sample_index(scenario.mu_pre.weights(), 1.0, rng);
    // Outcome determinism: chi picks the outcome.
    std::size_t outcome = m.size();
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m.kernel(j).indicator().value(lambda) == 1) {
        outcome = j;
        break;
      }
    }
    const Eigen::VectorXd column =
        m.kernel(outcome).disturbance().entries().col(static_cast<Eigen::Index>(lambda));
    const std::size_t target = sample_index(column, column.sum(), rng);
    if (scenario.chi_post.value(target) == 1) {
      ++stats.accepted;
      ++stats.accepted_by_outcome[outcome];
    }
  }
  return stats;
}

}  // namespace ppslab
