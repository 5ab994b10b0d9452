#pragma once

// Binomial Buchberger, lattice saturation and related ideal operations.

#include <cstddef>
#include <vector>

#include "cutkit/binomial.hpp"
#include "cutkit/cut_model.hpp"

namespace cutkit {

struct GroebnerOptions {
  /// Stop after this many S-pairs (0 = unlimited); the result is then
  /// flagged incomplete.
  std::size_t max_pairs = 0;
  /// Worker threads for S-pair reduction; does not affect the result.
  int threads = 1;
};

/// Marked binomials: `plus` is the leading term of every element.
struct GroebnerBasis {
  TermOrder order;
  std::vector<Binomial> elements;
  bool reduced = false;
  bool complete = true;
  std::size_t pairs_processed = 0;

  std::size_t size() const { return elements.size(); }
};

/// Reduced Gröbner basis of the ideal generated by `gens`. Variables listed
/// in `saturated` may be cancelled from both terms of a binomial, which is
/// only sound when the ideal is already saturated with respect to them.
GroebnerBasis buchberger(const std::vector<Binomial>& gens, const TermOrder& order,
                         const GroebnerOptions& opts = {},
                         const std::vector<bool>& saturated = {});

/// Integer kernel basis of A as vectors over its columns.
std::vector<std::vector<std::int64_t>> lattice_kernel(const IntMatrix& a);
inline std::vector<std::vector<std::int64_t>> lattice_kernel(const ExponentMatrix& a) {
  return lattice_kernel(a.entries);
}

/// Reduced Gröbner basis of the toric ideal of A: the lattice ideal of
/// ker(A) saturated variable by variable. A must be nonnegative with no zero
/// column.
GroebnerBasis toric_groebner(const IntMatrix& a, const TermOrder& order, const GroebnerOptions& opts = {});
inline GroebnerBasis toric_groebner(const ExponentMatrix& a, const TermOrder& order,
                                    const GroebnerOptions& opts = {}) {
  return toric_groebner(a.entries, order, opts);
}

Monomial normal_form(const Monomial& m, const GroebnerBasis& gb);
/// NF(plus) - NF(minus); zero (plus == minus) iff b lies in the ideal.
Binomial normal_form(const Binomial& b, const GroebnerBasis& gb);
bool reduces_to_zero(const Binomial& b, const GroebnerBasis& gb);
bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b);

/// Minimal generators of the initial ideal.
std::vector<Monomial> initial_ideal(const GroebnerBasis& gb);
bool is_squarefree(const std::vector<Monomial>& monomials);

/// True iff every S-pair of the marked set reduces to zero.
bool is_groebner(const std::vector<Binomial>& marked, const TermOrder& order);

}  // namespace cutkit
