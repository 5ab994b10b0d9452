#pragma once

// Exact integer and rational linear algebra over Eigen dense matrices.

#include <vector>

#include "cutkit/types.hpp"

namespace cutkit {

template <typename Derived>
BigMatrix to_big(const Eigen::MatrixBase<Derived>& m) {
  BigMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = BigInt(m(i, j));
  return out;
}

template <typename Derived>
RationalMatrix to_rational(const Eigen::MatrixBase<Derived>& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

/// Checked narrowing of an exact integer matrix back to machine integers.
IntMatrix to_int(const BigMatrix& m);

/// Rank by fraction-free elimination.
Eigen::Index rank(const BigMatrix& m);

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rank(to_big(m));
}

/// Determinant of a square matrix (Bareiss).
BigInt determinant(BigMatrix m);

/// Row-style Hermite normal form: returns the nonzero rows of H where
/// H = U * m for unimodular U; pivots positive, entries above each pivot
/// reduced into [0, pivot).
BigMatrix hermite_normal_form(const BigMatrix& m);

/// Pivot column of every row of a matrix in row echelon form.
std::vector<Eigen::Index> pivot_columns(const BigMatrix& echelon);

/// Lattice basis (as columns) of the integer kernel { x in Z^n : m x = 0 }.
/// Vectors are primitive and pairwise size-reduced.
BigMatrix integer_kernel(const BigMatrix& m);

/// Reduced row echelon form over Q together with the pivot columns.
RationalMatrix rref(RationalMatrix m, std::vector<Eigen::Index>* pivots = nullptr);

/// Basis (as columns) of the rational null space.
RationalMatrix rational_kernel(const RationalMatrix& m);

/// gcd of the entries, nonnegative; zero for the zero vector.
BigInt content(const BigVector& v);

}  // namespace cutkit
