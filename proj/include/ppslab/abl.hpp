// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ppslab/quantum.hpp"

namespace ppslab {

// A pre- and post-selected temporal frame: projectors for the conditioning
// events at t_pre and t_post. Whether post-selection is reachable depends on
// the intermediate measurement, so no overlap invariant is imposed here; each
// evaluation checks its own denominator.
struct PpsScenario {
  PpsScenario(Projector pre_projector, Projector post_projector);

  Eigen::Index dim() const { return pre.dim(); }

  Projector pre;
  Projector post;
};

// Probability that the intermediate measurement gave outcome `outcome`, given
// both selections (the Aharonov-Bergmann-Lebowitz rule with Lueders updates):
//
//   p = Tr(post P_k pre P_k) / sum_j Tr(post P_j pre P_j)
//
// The result is an exact ratio, clamped to {0,1} when within tol::kIdentity.
// Throws ImpossiblePostSelectionError when the denominator vanishes.
double abl_probability(const PpsScenario& scenario, const Pvm& measurement,
                       const std::string& outcome);

// One profile entry per (measurement, outcome). Entries whose post-selection
// is unreachable are recorded with an empty probability rather than dropped.
struct AblEntry {
  std::size_t measurement_index;
  std::string outcome;
  std::optional<double> probability;  // empty = impossible post-selection

  bool impossible() const { return !probability.has_value(); }
};

std::vector<AblEntry> abl_profile(const PpsScenario& scenario,
                                  const std::vector<Pvm>& measurements);

// True when p is within tol::kIdentity of 0 or 1.
bool is_logical_value(double p);

}  // namespace ppslab
