#pragma once

// Brute-force oracles shared by the unit tests and the acceptance run.

#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "cutkit/linalg.hpp"
#include "cutkit/markov.hpp"
#include "cutkit/polytope.hpp"

namespace cutkit::oracle {

// All monomials of total degree d in k variables.
inline std::vector<Monomial> monomials(int k, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(k, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == k - 1) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (int x = left; x >= 0; --x) {
      e[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, d);
  return out;
}

// Minimal generator counts per degree up to `max_degree`, straight from the
// definition: within each fiber of degree d, join monomials related by a
// move x -> y whose two sides lie in one fiber of smaller degree, then count
// components - 1. Requires constant column sums.
inline std::map<int, int> brute_force_markov(const IntMatrix& a, int max_degree) {
  const int k = static_cast<int>(a.cols());
  using Key = std::vector<std::int64_t>;
  auto image = [&](const Monomial& m) {
    Key v(a.rows(), 0);
    for (int j = 0; j < k; ++j)
      for (Eigen::Index i = 0; i < a.rows(); ++i) v[i] += a(i, j) * m[j];
    return v;
  };
  std::vector<std::pair<Monomial, Monomial>> moves;  // lower-degree fiber pairs
  std::map<int, int> out;
  for (int d = 1; d <= max_degree; ++d) {
    std::map<Key, std::vector<Monomial>> fibers;
    for (auto& m : monomials(k, d)) fibers[image(m)].push_back(m);
    for (auto& [b, f] : fibers) {
      std::vector<int> parent(f.size());
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
      std::map<Monomial, int> where;
      for (std::size_t i = 0; i < f.size(); ++i) where[f[i]] = static_cast<int>(i);
      for (std::size_t i = 0; i < f.size(); ++i)
        for (auto& [x, y] : moves)
          if (x.divides(f[i])) parent[find(static_cast<int>(i))] = find(where.at(f[i] / x * y));
      int comps = 0;
      for (std::size_t i = 0; i < f.size(); ++i) comps += find(static_cast<int>(i)) == static_cast<int>(i);
      if (comps > 1) out[d] += comps - 1;
    }
    for (auto& [b, f] : fibers)
      for (auto& x : f)
        for (auto& y : f)
          if (!(x == y)) moves.emplace_back(x, y);
  }
  return out;
}

// x lies in the lattice spanned by the rows of a Hermite form.
inline bool in_row_lattice(const BigMatrix& h, BigVector x) {
  const auto pivots = pivot_columns(h);
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    const BigInt& p = h(i, pivots[i]);
    if (x(pivots[i]) % p != 0) return false;
    const BigInt c = x(pivots[i]) / p;
    for (Eigen::Index j = 0; j < x.size(); ++j) x(j) -= c * h(i, j);
  }
  return x.isZero();
}

// Normalized volume from the Ehrhart polynomial of a 0/1 polytope: count
// points of tP in the affine lattice for t = 0..d (box [0,t]^m, facet
// inequalities, lattice membership), then take the d-th finite difference.
inline BigInt ehrhart_volume(const VPolytope& p) {
  const LatticeChart chart = lattice_chart(p);
  const HPolytope h = facets(p);
  const int d = static_cast<int>(chart.dim());
  const int m = static_cast<int>(p.ambient_dim());
  const IntVector v0 = p.vertices.col(0);

  std::vector<Rational> counts;
  for (int t = 0; t <= d; ++t) {
    std::int64_t count = 0;
    IntVector x = IntVector::Zero(m);
    while (true) {
      bool inside = true;
      for (const auto& f : h.facets)
        if (f.normal.dot(x) > f.offset * t) {
          inside = false;
          break;
        }
      if (inside && in_row_lattice(chart.basis, to_big(IntVector(x - v0 * t)))) ++count;
      int i = 0;
      while (i < m && x(i) == t) x(i) = 0, ++i;
      if (i == m) break;
      ++x(i);
    }
    counts.emplace_back(count);
  }
  for (int k = 1; k <= d; ++k)
    for (int t = d; t >= k; --t) counts[t] -= counts[t - 1];
  const Rational lead = counts[d];
  if (denominator(lead) != 1) throw std::logic_error("non-integral leading coefficient");
  return numerator(lead);
}

inline VPolytope random_01_polytope(std::mt19937_64& rng, int dim, int count) {
  std::set<std::uint64_t> picks;
  while (static_cast<int>(picks.size()) < count) picks.insert(rng() % (1u << dim));
  VPolytope p;
  p.vertices.resize(dim, count);
  int c = 0;
  for (auto m : picks) {
    for (int i = 0; i < dim; ++i) p.vertices(i, c) = (m >> i) & 1;
    ++c;
  }
  return p;
}

}  // namespace cutkit::oracle
