// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ppslab/errors.hpp"
#include "ppslab/tolerances.hpp"

namespace ppslab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Largest entrywise magnitude; the norm all validity tolerances refer to.
double max_abs(const CMatrix& m);

bool is_hermitian(const CMatrix& m, double tolerance = tol::kValidity);

// A hermitian idempotent matrix. Construction validates; instances are
// immutable afterwards.
class Projector {
 public:
  static Projector from_matrix(CMatrix p);

  // Orthonormalizes the spanning vectors (modified Gram-Schmidt) and returns
  // the projector onto their span. Rejects rank-deficient spans.
  static Projector from_span(const std::vector<CVector>& span);

  static Projector identity(Eigen::Index dim);
  static Projector zero(Eigen::Index dim);

  const CMatrix& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

  // Rank read off the trace (exact up to rounding for a valid projector).
  int rank() const;

  Projector complement() const;  // I - P

  bool approx_equal(const Projector& other, double tolerance = tol::kValidity) const;
  bool commutes_with(const Projector& other, double tolerance = tol::kValidity) const;

 private:
  explicit Projector(CMatrix p) : mat_(std::move(p)) {}
  CMatrix mat_;
};

// A projector-valued measure: mutually orthogonal projectors summing to the
// identity, with distinct outcome labels.
class Pvm {
 public:
  Pvm(std::vector<Projector> projectors, std::vector<std::string> labels);

  std::size_t size() const { return projectors_.size(); }
  Eigen::Index dim() const { return projectors_.front().dim(); }
  const Projector& projector(std::size_t j) const { return projectors_[j]; }
  const std::string& label(std::size_t j) const { return labels_[j]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::size_t index_of(const std::string& label) const;

 private:
  std::vector<Projector> projectors_;
  std::vector<std::string> labels_;
};

class DensityOperator {
 public:
  // Validates hermiticity, positive semidefiniteness and unit trace.
  static DensityOperator from_matrix(CMatrix rho);

  static DensityOperator maximally_mixed(Eigen::Index dim);
  static DensityOperator pure(const CVector& state);

  const CMatrix& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  explicit DensityOperator(CMatrix rho) : mat_(std::move(rho)) {}
  CMatrix mat_;
};

// Tr(P rho), clamped exactly to [0,1] when within tolerance of the boundary.
double born_probability(const DensityOperator& rho, const Projector& p);

// Lueders update: P rho P / Tr(P rho P). Throws ZeroProbabilityError when the
// outcome probability vanishes.
DensityOperator luders_update(const DensityOperator& rho, const Projector& p);

// Sum of the per-outcome Lueders maps over a subset of outcomes,
// sum_{j in subset} P_j op P_j, applied to a (possibly unnormalized) positive
// operator. Trace-nonincreasing; the empty subset yields the zero operator.
CMatrix cp_map_apply(const CMatrix& op, const Pvm& pvm,
                     const std::vector<std::string>& outcome_subset);

}  // namespace ppslab
