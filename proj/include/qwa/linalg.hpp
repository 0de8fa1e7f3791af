#pragma once

// Fraction-free linear algebra over R[t], an integral domain in which we
// can only divide exactly.

#include "qwa/matrix.hpp"
#include "qwa/polynomial.hpp"

namespace qwa {

using PolyMatrix = Matrix<Polynomial>;

/// Determinant by Bareiss elimination with row pivoting.
Polynomial bareiss_determinant(PolyMatrix a);

/// X with A X = B, for square A whose determinant is a unit of R.
/// Throws UnitInversionError otherwise.
PolyMatrix solve_unimodular(const PolyMatrix& a, const PolyMatrix& b);

/// Inverse of a unit constant polynomial, or nullopt.
std::optional<CycInt> unit_constant_inverse(const Polynomial& f);

} // namespace qwa
