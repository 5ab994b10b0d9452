#include "cutkit/markov.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

namespace cutkit {

std::vector<Monomial> fiber(const IntMatrix& a, const IntVector& b, std::size_t limit) {
  const Eigen::Index rows = a.rows(), n = a.cols();
  // reach(i, j): some column >= j has a positive entry in row i.
  std::vector<std::vector<char>> reach(n + 1, std::vector<char>(rows, 0));
  for (Eigen::Index j = n; j-- > 0;)
    for (Eigen::Index i = 0; i < rows; ++i) reach[j][i] = reach[j + 1][i] || a(i, j) > 0;

  std::vector<Monomial> out;
  std::vector<int> e(n, 0);
  IntVector r = b;
  auto dfs = [&](auto&& self, Eigen::Index j) -> void {
    if (j == n) {
      if (r.isZero()) {
        if (out.size() >= limit) throw BudgetExceeded("fiber larger than the enumeration budget");
        out.emplace_back(e);
      }
      return;
    }
    for (Eigen::Index i = 0; i < rows; ++i)
      if (r[i] > 0 && !reach[j][i]) return;
    std::int64_t most = std::numeric_limits<std::int64_t>::max();
    for (Eigen::Index i = 0; i < rows; ++i)
      if (a(i, j) > 0) most = std::min(most, r[i] / a(i, j));
    if (most == std::numeric_limits<std::int64_t>::max()) most = 0;
    for (std::int64_t k = most; k >= 0; --k) {
      e[j] = static_cast<int>(k);
      r -= a.col(j) * k;
      self(self, j + 1);
      r += a.col(j) * k;
    }
    e[j] = 0;
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> fiber_components(const std::vector<Monomial>& fib, int* count) {
  std::vector<int> parent(fib.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  if (!fib.empty()) {
    const std::size_t n = fib[0].size();
    for (std::size_t v = 0; v < n; ++v) {
      int first = -1;
      for (std::size_t k = 0; k < fib.size(); ++k) {
        if (!fib[k][v]) continue;
        if (first < 0) {
          first = static_cast<int>(k);
        } else {
          int ra = find(first), rb = find(static_cast<int>(k));
          if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
        }
      }
    }
  }
  // Relabel by first occurrence so ids are deterministic.
  std::vector<int> id(fib.size(), -1), out(fib.size());
  int next = 0;
  for (std::size_t k = 0; k < fib.size(); ++k) {
    int root = find(static_cast<int>(k));
    if (id[root] < 0) id[root] = next++;
    out[k] = id[root];
  }
  if (count) *count = next;
  return out;
}

MarkovBasis markov_basis(const IntMatrix& a, const GroebnerOptions& opts) {
  MarkovBasis mb;
  mb.groebner = toric_groebner(a, TermOrder::degrevlex(), opts);
  mb.complete = mb.groebner.complete;

  auto image = [&](const Monomial& m) {
    IntVector v = IntVector::Zero(a.rows());
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (m[j]) v += a.col(j) * static_cast<std::int64_t>(m[j]);
    return std::vector<std::int64_t>(v.data(), v.data() + v.size());
  };
  std::set<std::pair<int, std::vector<std::int64_t>>> degrees;
  for (const auto& g : mb.groebner.elements) degrees.emplace(g.plus.degree(), image(g.plus));

  for (const auto& [deg, b] : degrees) {
    const auto fib = fiber(a, Eigen::Map<const IntVector>(b.data(), static_cast<Eigen::Index>(b.size())));
    int count = 0;
    const auto comp = fiber_components(fib, &count);
    if (count < 2) continue;
    // Fiber is sorted, so the first member seen of each component is its
    // smallest; join component 0's representative to each other one.
    std::vector<int> rep(count, -1);
    for (std::size_t k = 0; k < fib.size(); ++k)
      if (rep[comp[k]] < 0) rep[comp[k]] = static_cast<int>(k);
    for (int c = 1; c < count; ++c) mb.elements.emplace_back(fib[rep[0]], fib[rep[c]]);
    mb.degree_histogram[deg] += count - 1;
  }
  return mb;
}

namespace {

// A multiset of at most 8 column indices, sorted, one byte each (index + 1).
using Packed = std::uint64_t;

Packed pack(const int* v, int len) {
  Packed p = 0;
  for (int i = 0; i < len; ++i) p |= static_cast<Packed>(v[i] + 1) << (8 * i);
  return p;
}

int unpack(Packed p, int* v) {
  int len = 0;
  while (len < 8 && (p >> (8 * len) & 0xFF)) {
    v[len] = static_cast<int>((p >> (8 * len)) & 0xFF) - 1;
    ++len;
  }
  return len;
}

Packed merge(const int* a, int la, const int* b, int lb) {
  int out[8], i = 0, j = 0, k = 0;
  while (i < la || j < lb) out[k++] = (j == lb || (i < la && a[i] <= b[j])) ? a[i++] : b[j++];
  return pack(out, k);
}

}  // namespace

std::map<int, int> markov_degrees_upto(const IntMatrix& a, int max_degree) {
  const int k = static_cast<int>(a.cols());
  const Eigen::Index rows = a.rows();
  if (max_degree < 1 || max_degree > 8) throw InvalidInput("degree bound must lie in 1..8");
  if (k > 255) throw InvalidInput("too many columns for the fiber count");
  if (k == 0) return {};
  for (int j = 1; j < k; ++j)
    if (a.col(j).sum() != a.col(0).sum()) throw InvalidInput("columns must have equal sums");
  if (a.minCoeff() < 0 || a.maxCoeff() * max_degree > 255)
    throw InvalidInput("entries must be small and nonnegative");

  std::map<int, int> out;
  // rep[j]: degree-j monomial -> the first monomial of its fiber
  std::vector<std::unordered_map<Packed, Packed>> rep(max_degree + 1);
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<Packed> monos;
    std::vector<int> fiber_of;
    std::unordered_map<std::string, int> fiber_id;
    std::vector<Packed> first;
    std::vector<int> v(d);
    std::vector<IntVector> image(d + 1, IntVector::Zero(rows));
    auto enumerate = [&](auto&& self, int pos, int from) -> void {
      if (pos == d) {
        std::string key(static_cast<std::size_t>(rows), '\0');
        for (Eigen::Index i = 0; i < rows; ++i) key[i] = static_cast<char>(image[d](i));
        auto [it, fresh] = fiber_id.try_emplace(std::move(key), static_cast<int>(first.size()));
        const Packed p = pack(v.data(), d);
        if (fresh) first.push_back(p);
        monos.push_back(p);
        fiber_of.push_back(it->second);
        return;
      }
      for (int c = from; c < k; ++c) {
        v[pos] = c;
        image[pos + 1] = image[pos] + a.col(c);
        self(self, pos + 1, c);
      }
    };
    enumerate(enumerate, 0, 0);

    std::unordered_map<Packed, int> index;
    index.reserve(monos.size());
    for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], static_cast<int>(i));
    std::vector<int> parent(monos.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };

    int m[8], x[8], w[8];
    for (std::size_t i = 0; i < monos.size(); ++i) {
      unpack(monos[i], m);
      for (unsigned sub = 1; sub + 1 < (1u << d); ++sub) {
        int lx = 0, lw = 0;
        for (int t = 0; t < d; ++t) (sub >> t & 1 ? x[lx++] : w[lw++]) = m[t];
        const Packed px = pack(x, lx);
        const Packed r = rep[lx].at(px);
        if (r == px) continue;
        int y[8];
        unpack(r, y);
        const int target = index.at(merge(y, lx, w, lw));
        const int ra = find(static_cast<int>(i)), rb = find(target);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    }

    std::vector<int> components(first.size(), 0);
    for (std::size_t i = 0; i < monos.size(); ++i)
      if (find(static_cast<int>(i)) == static_cast<int>(i)) ++components[fiber_of[i]];
    int count = 0;
    for (int c : components) count += c - 1;
    if (count > 0) out[d] = count;

    if (d < max_degree) {
      rep[d].reserve(monos.size());
      for (std::size_t i = 0; i < monos.size(); ++i) rep[d].emplace(monos[i], first[fiber_of[i]]);
    }
  }
  return out;
}

}  // namespace cutkit
