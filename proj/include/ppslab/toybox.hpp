// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "ppslab/hvt.hpp"

namespace ppslab {

// The ball-in-box model: four ontic states (front/back x left/right) and four
// verification procedures. Checking a half randomizes the transverse position
// of the ball when it is found there and leaves everything untouched when it
// is not. Pre-selection: found in front; post-selection: found in back.
namespace toybox {

inline constexpr std::array<const char*, 4> kStates = {"FL", "FR", "BL", "BR"};

enum class BoxHalf { Front, Back, Left, Right };

const char* half_name(BoxHalf half);
BoxHalf half_from_name(const std::string& name);

// The check-<half> procedure as an HVT measurement with outcomes
// "found"/"notfound". Tags are the natural diagonal projectors on C^4 (one
// axis per half), under which the model is measurement-noncontextual.
HvtMeasurement box_procedure(BoxHalf half);

// The full PPS scenario: mu_pre uniform on {FL, FR} (finding the ball in
// front randomizes left-right), chi_post the found-in-back indicator, and all
// four procedures as available intermediate measurements.
HvtScenario build_box_model();

// Conditional probability of `outcome` for the given intermediate check,
// given both selections. Delegates to hvt_pps_probability.
double box_pps_probability(BoxHalf intermediate, const std::string& outcome);

// Joint probabilities p(pre-found AND outcome AND post-found) for every
// (procedure, outcome) pair, chained exactly from the uniform prior over the
// four states.
std::map<std::pair<std::string, std::string>, double> box_joint_statistics();

// Full-chain Monte Carlo from the uniform prior; estimates the same joint
// probabilities as box_joint_statistics.
struct BoxTrajectoryStats {
  std::uint64_t trials = 0;
  // (procedure, outcome) -> count of trials with pre-found, that outcome, and
  // post-found. Trials split evenly across the four procedures.
  std::map<std::pair<std::string, std::string>, std::uint64_t> joint_counts;
  std::map<std::pair<std::string, std::string>, std::uint64_t> trials_by_procedure;

  double joint_estimate(const std::string& procedure, const std::string& outcome) const;
  double joint_standard_error(const std::string& procedure,
                              const std::string& outcome) const;
};

BoxTrajectoryStats box_monte_carlo(std::uint64_t trials_per_procedure,
                                   std::uint64_t seed);

}  // namespace toybox
}  // namespace ppslab
