// SPDX-License-Identifier: Apache-2.0
#include "ppslab/abl.hpp"

#include <algorithm>
#include <cmath>

namespace ppslab {

PpsScenario::PpsScenario(Projector pre_projector, Projector post_projector)
    : pre(std::move(pre_projector)), post(std::move(post_projector)) {
  if (pre.dim() != post.dim()) {
    throw DimensionMismatchError(
        "PpsScenario: pre and post projectors of different dimension");
  }
}

namespace {

// Tr(post P rho P) for one outcome projector.
double pps_weight(const CMatrix& post, const CMatrix& p, const CMatrix& pre) {
  return (post * p * pre * p).trace().real();
}

}  // namespace

double abl_probability(const PpsScenario& scenario, const Pvm& measurement,
                       const std::string& outcome) {
  if (measurement.dim() != scenario.dim()) {
    throw DimensionMismatchError("abl_probability: dimension mismatch");
  }
  const std::size_t k = measurement.index_of(outcome);

  const CMatrix& pre = scenario.pre.matrix();
  const CMatrix& post = scenario.post.matrix();

  double numerator = 0.0;
  double denominator = 0.0;
  for (std::size_t j = 0; j < measurement.size(); ++j) {
    const double w = pps_weight(post, measurement.projector(j).matrix(), pre);
    denominator += w;
    if (j == k) numerator = w;
  }
  if (denominator <= tol::kVanishing) {
    throw ImpossiblePostSelectionError(
        "abl_probability: post-selection unreachable for this measurement");
  }
  double p = numerator / denominator;
  if (std::abs(p) <= tol::kIdentity) p = 0.0;
  if (std::abs(p - 1.0) <= tol::kIdentity) p = 1.0;
  return std::clamp(p, 0.0, 1.0);
}

std::vector<AblEntry> abl_profile(const PpsScenario& scenario,
                                  const std::vector<Pvm>& measurements) {
  std::vector<AblEntry> entries;
  for (std::size_t m = 0; m < measurements.size(); ++m) {
    const Pvm& pvm = measurements[m];
    if (pvm.dim() != scenario.dim()) {
      throw DimensionMismatchError("abl_profile: dimension mismatch");
    }
    for (std::size_t j = 0; j < pvm.size(); ++j) {
      AblEntry entry{m, pvm.label(j), std::nullopt};
      try {
        entry.probability = abl_probability(scenario, pvm, pvm.label(j));
      } catch (const ImpossiblePostSelectionError&) {
        // recorded as impossible, not dropped
      }
      entries.push_back(std::move(entry));
    }
  }
  return entries;
}

bool is_logical_value(double p) {
  return std::abs(p) <= tol::kIdentity || std::abs(p - 1.0) <= tol::kIdentity;
}

}  // namespace ppslab
