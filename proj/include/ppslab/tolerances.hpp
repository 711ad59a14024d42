// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace ppslab::tol {

// Construction-time validity checks on quantum objects (hermiticity,
// idempotency, PVM completeness) and projector identity unification.
inline constexpr double kValidity = 1e-10;

// Derived identities, equality checks in the algebraic conditions, and the
// 0/1 classification of ABL probabilities.
inline constexpr double kIdentity = 1e-9;

// Denominators and event probabilities treated as exactly zero; also the
// exact-sum checks on ontic-model data (distributions, transition columns,
// kernel marginals).
inline constexpr double kVanishing = 1e-12;

// Rank-deficiency rejection in the span orthonormalizer.
inline constexpr double kSpanPivot = 1e-8;

}  // namespace ppslab::tol
