// SPDX-License-Identifier: Apache-2.0
#include "ppslab/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace ppslab {

double max_abs(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix& m, double tolerance) {
  return max_abs(m - m.adjoint()) <= tolerance;
}

namespace {

void require_square(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    std::ostringstream msg;
    msg << what << ": matrix must be square with dim >= 1, got " << m.rows()
        << "x" << m.cols();
    throw ValidationError(msg.str());
  }
}

}  // namespace

Projector Projector::from_matrix(CMatrix p) {
  require_square(p, "Projector");
  const double herm = max_abs(p - p.adjoint());
  if (herm > tol::kValidity) {
    std::ostringstream msg;
    msg << "Projector: not hermitian, ||P - P^dag||_max = " << herm;
    throw ValidationError(msg.str());
  }
  const double idem = max_abs(p * p - p);
  if (idem > tol::kValidity) {
    std::ostringstream msg;
    msg << "Projector: not idempotent, ||P^2 - P||_max = " << idem;
    throw ValidationError(msg.str());
  }
  return Projector(std::move(p));
}

Projector Projector::from_span(const std::vector<CVector>& span) {
  if (span.empty()) throw ValidationError("Projector: empty span");
  const Eigen::Index dim = span.front().size();
  if (dim < 1) throw ValidationError("Projector: zero-dimensional span vector");

  // Modified Gram-Schmidt with a second orthogonalization pass.
  std::vector<CVector> basis;
  basis.reserve(span.size());
  for (const CVector& raw : span) {
    if (raw.size() != dim) {
      throw DimensionMismatchError("Projector: span vectors of mixed dimension");
    }
    CVector v = raw;
    for (int pass = 0; pass < 2; ++pass) {
      for (const CVector& b : basis) {
        v -= b.dot(v) * b;
      }
    }
    const double pivot = v.norm();
    if (pivot < tol::kSpanPivot) {
      std::ostringstream msg;
      msg << "Projector: rank-deficient span, pivot " << pivot << " below "
          << tol::kSpanPivot;
      throw ValidationError(msg.str());
    }
    basis.push_back(v / pivot);
  }

  CMatrix p = CMatrix::Zero(dim, dim);
  for (const CVector& b : basis) {
    p += b * b.adjoint();
  }
  // Symmetrize away rounding before validation.
  p = ((p + p.adjoint()) / 2.0).eval();
  return from_matrix(std::move(p));
}

Projector Projector::identity(Eigen::Index dim) {
  return Projector(CMatrix::Identity(dim, dim));
}

Projector Projector::zero(Eigen::Index dim) {
  return Projector(CMatrix::Zero(dim, dim));
}

int Projector::rank() const {
  return static_cast<int>(std::lround(mat_.trace().real()));
}

Projector Projector::complement() const {
  return Projector(CMatrix::Identity(dim(), dim()) - mat_);
}

bool Projector::approx_equal(const Projector& other, double tolerance) const {
  return dim() == other.dim() && max_abs(mat_ - other.mat_) <= tolerance;
}

bool Projector::commutes_with(const Projector& other, double tolerance) const {
  if (dim() != other.dim()) {
    throw DimensionMismatchError("Projector: commutator of mismatched dimensions");
  }
  return max_abs(mat_ * other.mat_ - other.mat_ * mat_) <= tolerance;
}

Pvm::Pvm(std::vector<Projector> projectors, std::vector<std::string> labels)
    : projectors_(std::move(projectors)), labels_(std::move(labels)) {
  if (projectors_.empty()) throw ValidationError("Pvm: no projectors");
  if (labels_.size() != projectors_.size()) {
    throw ValidationError("Pvm: label count does not match projector count");
  }
  const Eigen::Index d = projectors_.front().dim();
  CMatrix sum = CMatrix::Zero(d, d);
  for (const Projector& p : projectors_) {
    if (p.dim() != d) throw DimensionMismatchError("Pvm: mixed dimensions");
    sum += p.matrix();
  }
  const double completeness = max_abs(sum - CMatrix::Identity(d, d));
  if (completeness > tol::kValidity) {
    std::ostringstream msg;
    msg << "Pvm: projectors do not sum to identity, residual " << completeness;
    throw ValidationError(msg.str());
  }
  // Orthogonality is implied by completeness + idempotency but checked
  // independently.
  for (std::size_t i = 0; i < projectors_.size(); ++i) {
    for (std::size_t j = i + 1; j < projectors_.size(); ++j) {
      const double cross = max_abs(projectors_[i].matrix() * projectors_[j].matrix());
      if (cross > tol::kValidity) {
        std::ostringstream msg;
        msg << "Pvm: outcomes " << labels_[i] << " and " << labels_[j]
            << " are not orthogonal, ||P_i P_j||_max = " << cross;
        throw ValidationError(msg.str());
      }
    }
  }
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) {
    throw ValidationError("Pvm: duplicate outcome labels");
  }
}

std::size_t Pvm::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw UnknownLabelError("Pvm: unknown outcome label '" + label + "'");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

DensityOperator DensityOperator::from_matrix(CMatrix rho) {
  require_square(rho, "DensityOperator");
  if (!is_hermitian(rho)) {
    throw ValidationError("DensityOperator: not hermitian");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -tol::kValidity) {
    std::ostringstream msg;
    msg << "DensityOperator: not positive semidefinite, min eigenvalue " << min_eig;
    throw ValidationError(msg.str());
  }
  const double trace = rho.trace().real();
  if (std::abs(trace - 1.0) > tol::kValidity) {
    std::ostringstream msg;
    msg << "DensityOperator: trace " << trace << " differs from 1";
    throw ValidationError(msg.str());
  }
  return DensityOperator(std::move(rho));
}

DensityOperator DensityOperator::maximally_mixed(Eigen::Index dim) {
  if (dim < 1) throw ValidationError("DensityOperator: dim must be >= 1");
  return DensityOperator(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityOperator DensityOperator::pure(const CVector& state) {
  const double norm = state.norm();
  if (norm < tol::kSpanPivot) {
    throw ValidationError("DensityOperator: near-zero state vector");
  }
  const CVector unit = state / norm;
  return DensityOperator(unit * unit.adjoint());
}

double born_probability(const DensityOperator& rho, const Projector& p) {
  if (rho.dim() != p.dim()) {
    throw DimensionMismatchError("born_probability: dimension mismatch");
  }
  const double value = (p.matrix() * rho.matrix()).trace().real();
  if (value < -tol::kValidity || value > 1.0 + tol::kValidity) {
    std::ostringstream msg;
    msg << "born_probability: value " << value << " outside [0,1]";
    throw ValidationError(msg.str());
  }
  return std::clamp(value, 0.0, 1.0);
}

DensityOperator luders_update(const DensityOperator& rho, const Projector& p) {
  if (rho.dim() != p.dim()) {
    throw DimensionMismatchError("luders_update: dimension mismatch");
  }
  CMatrix updated = p.matrix() * rho.matrix() * p.matrix();
  const double weight = updated.trace().real();
  if (weight <= tol::kVanishing) {
    throw ZeroProbabilityError("luders_update: zero-probability outcome");
  }
  updated /= weight;
  updated = ((updated + updated.adjoint()) / 2.0).eval();
  return DensityOperator::from_matrix(std::move(updated));
}

CMatrix cp_map_apply(const CMatrix& op, const Pvm& pvm,
                     const std::vector<std::string>& outcome_subset) {
  if (op.rows() != pvm.dim() || op.cols() != pvm.dim()) {
    throw DimensionMismatchError("cp_map_apply: dimension mismatch");
  }
  CMatrix result = CMatrix::Zero(pvm.dim(), pvm.dim());
  std::set<std::size_t> indices;
  for (const std::string& label : outcome_subset) {
    indices.insert(pvm.index_of(label));
  }
  for (std::size_t j : indices) {
    const CMatrix& pj = pvm.projector(j).matrix();
    result += pj * op * pj;
  }
  return result;
}

}  // namespace ppslab
