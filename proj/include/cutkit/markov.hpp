#pragma once

#include <map>
#include <vector>

#include "cutkit/groebner.hpp"

namespace cutkit {

/// Minimal Markov basis with its graded generator counts.
struct MarkovBasis {
  std::vector<Binomial> elements;
  std::map<int, int> degree_histogram;
  /// The Gröbner basis the fibers were read off from.
  GroebnerBasis groebner;
  bool complete = true;

  /// Largest degree of a minimal generator, 0 for the zero ideal.
  int mu() const { return degree_histogram.empty() ? 0 : degree_histogram.rbegin()->first; }
};

/// All u >= 0 with A u = b. Throws BudgetExceeded past `limit` elements.
std::vector<Monomial> fiber(const IntMatrix& a, const IntVector& b, std::size_t limit = 1u << 22);

/// Connected components of a fiber when two monomials are adjacent iff they
/// share a variable; returns a component id per element.
std::vector<int> fiber_components(const std::vector<Monomial>& fiber, int* count = nullptr);

/// Minimal generators: for each multidegree b of a Gröbner basis element,
/// (#components of the fiber of b) - 1 moves joining the components.
MarkovBasis markov_basis(const IntMatrix& a, const GroebnerOptions& opts = {});
inline MarkovBasis markov_basis(const ExponentMatrix& a, const GroebnerOptions& opts = {}) {
  return markov_basis(a.entries, opts);
}

/// Minimal generator counts in degrees 1..max_degree without a Gröbner
/// basis: within each fiber of degree d, components under all moves of lower
/// degree, minus one. Exact in every degree it covers but says nothing about
/// higher degrees. Needs equal column sums, at most 255 columns and
/// max_degree <= 8.
std::map<int, int> markov_degrees_upto(const IntMatrix& a, int max_degree);

}  // namespace cutkit
