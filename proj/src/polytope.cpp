#include "cutkit/polytope.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <boost/dynamic_bitset.hpp>

#include "cutkit/cut_model.hpp"
#include "cutkit/linalg.hpp"

namespace cutkit {

namespace {

using Bits = boost::dynamic_bitset<>;
using Index = Eigen::Index;

std::int64_t narrow(__int128 x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("polytope arithmetic overflow");
  return static_cast<std::int64_t>(x);
}

std::int64_t gcd_all(const std::vector<std::int64_t>& v, std::size_t from = 0) {
  std::int64_t g = 0;
  for (std::size_t i = from; i < v.size(); ++i) g = std::gcd(g, v[i] < 0 ? -v[i] : v[i]);
  return g;
}

void make_primitive(std::vector<std::int64_t>& v) {
  const std::int64_t g = gcd_all(v);
  if (g > 1)
    for (auto& x : v) x /= g;
}

// Facet of the cone over the chart polytope: y . (1, c) >= 0, tight on `on`.
struct ConeFacet {
  std::vector<std::int64_t> y;
  Bits on;
};

std::int64_t eval(const std::vector<std::int64_t>& y, const IntMatrix& c, Index v) {
  __int128 s = y[0];
  for (Index i = 0; i < c.rows(); ++i) s += static_cast<__int128>(y[i + 1]) * c(i, v);
  return narrow(s);
}

// Double description: facets of cone{(1, c_v)} for a full-dimensional chart.
std::vector<ConeFacet> cone_facets(const IntMatrix& c) {
  const Index k = c.rows(), m = c.cols();
  if (k == 0) return {};

  // Initial simplex from affinely independent vertices.
  std::vector<Index> basis;
  RationalMatrix rows(0, k + 1);
  for (Index v = 0; v < m && static_cast<Index>(basis.size()) < k + 1; ++v) {
    RationalMatrix trial(rows.rows() + 1, k + 1);
    trial.topRows(rows.rows()) = rows;
    trial(rows.rows(), 0) = 1;
    for (Index i = 0; i < k; ++i) trial(rows.rows(), i + 1) = c(i, v);
    if (rank(trial) == trial.rows()) {
      rows = trial;
      basis.push_back(v);
    }
  }
  if (static_cast<Index>(basis.size()) != k + 1) throw InvalidInput("chart polytope is not full-dimensional");

  // Rows of the inverse of the simplex matrix are its facet normals.
  RationalMatrix sq = rows.transpose();  // columns are generators
  RationalMatrix aug(k + 1, 2 * (k + 1));
  aug.leftCols(k + 1) = sq.transpose();
  aug.rightCols(k + 1) = RationalMatrix::Identity(k + 1, k + 1);
  // Solve sq^T X = I  =>  X = sq^{-T}; column j of X is the normal for generator j.
  RationalMatrix red = rref(aug);
  RationalMatrix inv_t = red.rightCols(k + 1);

  std::vector<ConeFacet> facets;
  for (Index j = 0; j < k + 1; ++j) {
    std::vector<Rational> col(k + 1);
    BigInt den = 1;
    for (Index i = 0; i < k + 1; ++i) {
      col[i] = inv_t(i, j);
      den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(col[i]));
    }
    ConeFacet f;
    f.y.resize(k + 1);
    for (Index i = 0; i < k + 1; ++i) {
      BigInt val = boost::multiprecision::numerator(Rational(col[i] * den));
      f.y[i] = static_cast<std::int64_t>(val);
    }
    make_primitive(f.y);
    f.on = Bits(m);
    for (Index b = 0; b < k + 1; ++b)
      if (b != j) f.on.set(basis[b]);
    // Orient so the opposite generator is on the positive side.
    if (eval(f.y, c, basis[j]) < 0)
      for (auto& x : f.y) x = -x;
    facets.push_back(std::move(f));
  }

  Bits done(m);
  for (Index b : basis) done.set(b);
  for (Index v = 0; v < m; ++v) {
    if (done.test(v)) continue;
    std::vector<std::int64_t> val(facets.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      val[f] = eval(facets[f].y, c, v);
      if (val[f] > 0) pos.push_back(f);
      if (val[f] < 0) neg.push_back(f);
    }
    std::vector<ConeFacet> next;
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        Bits common = facets[p].on & facets[q].on;
        if (static_cast<Index>(common.count()) < k - 1) continue;
        bool adjacent = true;
        for (std::size_t f = 0; f < facets.size() && adjacent; ++f)
          if (f != p && f != q && common.is_subset_of(facets[f].on)) adjacent = false;
        if (!adjacent) continue;
        ConeFacet nf;
        nf.y.resize(k + 1);
        for (Index i = 0; i < k + 1; ++i)
          nf.y[i] = narrow(static_cast<__int128>(val[p]) * facets[q].y[i] -
                           static_cast<__int128>(val[q]) * facets[p].y[i]);
        make_primitive(nf.y);
        nf.on = common;
        nf.on.set(v);
        next.push_back(std::move(nf));
      }
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (val[f] < 0) continue;
      if (val[f] == 0) facets[f].on.set(v);
      next.push_back(std::move(facets[f]));
    }
    facets = std::move(next);
    done.set(v);
  }
  return facets;
}

struct Prepared {
  LatticeChart chart;
  std::vector<ConeFacet> facets;
};

Prepared prepare(const VPolytope& p, Index max_dim = 12) {
  Prepared out;
  out.chart = lattice_chart(p);
  if (out.chart.dim() > max_dim) throw BudgetExceeded("polytope dimension exceeds the facet budget");
  out.facets = cone_facets(out.chart.coords);
  return out;
}

BigInt simplex_volume(const IntMatrix& c, const std::vector<int>& s) {
  const Index k = c.rows();
  BigMatrix m(k, k);
  for (Index j = 0; j < k; ++j)
    for (Index i = 0; i < k; ++i) m(i, j) = BigInt(c(i, s[j + 1]) - c(i, s[0]));
  BigInt d = determinant(m);
  return d < 0 ? BigInt(-d) : d;
}

}  // namespace

VPolytope cut_polytope(const Graph& g) {
  if (g.edge_count() < 1) throw InvalidInput("cut polytope needs at least one edge");
  if (g.vertex_count() > 12) throw InvalidInput("cut polytope limited to 12 vertices");
  const std::size_t count = std::size_t{1} << (g.vertex_count() - 1);
  VPolytope p;
  p.vertices = IntMatrix::Zero(g.edge_count(), static_cast<Index>(count));
  for (std::size_t k = 0; k < count; ++k) {
    auto x = cut_vector(g, Partition(g.vertex_count(), k));
    for (int e = 0; e < g.edge_count(); ++e) p.vertices(e, static_cast<Index>(k)) = x[e];
  }
  return p;
}

LatticeChart lattice_chart(const VPolytope& p) {
  if (p.size() == 0) throw InvalidInput("empty polytope");
  const Index d = p.ambient_dim(), m = p.size();
  BigMatrix diff(std::max<Index>(m - 1, 0), d);
  for (Index v = 1; v < m; ++v)
    for (Index i = 0; i < d; ++i) diff(v - 1, i) = BigInt(p.vertices(i, v) - p.vertices(i, 0));
  LatticeChart ch;
  ch.basis = m > 1 ? hermite_normal_form(diff) : BigMatrix(0, d);
  const auto piv = pivot_columns(ch.basis);
  const Index k = ch.basis.rows();
  ch.coords = IntMatrix::Zero(k, m);
  for (Index v = 0; v < m; ++v) {
    std::vector<BigInt> c(k);
    for (Index i = 0; i < k; ++i) {
      BigInt x = BigInt(p.vertices(piv[i], v) - p.vertices(piv[i], 0));
      for (Index j = 0; j < i; ++j) x -= c[j] * ch.basis(j, piv[i]);
      if (x % ch.basis(i, piv[i]) != 0) throw std::logic_error("vertex outside its difference lattice");
      c[i] = x / ch.basis(i, piv[i]);
    }
    for (Index i = 0; i < k; ++i) ch.coords(i, v) = static_cast<std::int64_t>(c[i]);
  }
  return ch;
}

Index dimension(const VPolytope& p) { return lattice_chart(p).dim(); }

HPolytope facets(const VPolytope& p) {
  Prepared pr = prepare(p, 10);
  const LatticeChart& ch = pr.chart;
  const Index k = ch.dim(), d = p.ambient_dim();
  const auto piv = pivot_columns(ch.basis);
  // x_P - v0_P = T^T c with T(i, j) = basis(i, piv[j]).
  RationalMatrix t(k, k);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) t(i, j) = Rational(ch.basis(i, piv[j]));
  HPolytope h;
  for (const auto& f : pr.facets) {
    // y0 + yc.c >= 0 and c = T^{-T}(x_P - v0_P), so z = T^{-1} yc is the
    // ambient normal on the pivot coordinates.
    RationalMatrix aug(k, k + 1);
    aug.leftCols(k) = t;
    for (Index i = 0; i < k; ++i) aug(i, k) = Rational(f.y[i + 1]);
    RationalMatrix red = rref(aug);
    BigInt den = 1;
    for (Index i = 0; i < k; ++i) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(red(i, k)));
    std::vector<std::int64_t> normal(d, 0);
    for (Index i = 0; i < k; ++i)
      normal[piv[i]] = -static_cast<std::int64_t>(BigInt(boost::multiprecision::numerator(Rational(red(i, k) * den))));
    make_primitive(normal);
    Facet out;
    out.normal = Eigen::Map<IntVector>(normal.data(), d);
    out.offset = std::numeric_limits<std::int64_t>::min();
    for (Index v = 0; v < p.size(); ++v) out.offset = std::max<std::int64_t>(out.offset, out.normal.dot(p.vertices.col(v)));
    std::vector<char> tight(p.size());
    for (Index v = 0; v < p.size(); ++v) tight[v] = f.on.test(v);
    h.facets.push_back(std::move(out));
    h.tight.push_back(std::move(tight));
  }
  return h;
}

Triangulation pulling_triangulation(const VPolytope& p, std::vector<int> order) {
  Prepared pr = prepare(p);
  const Index m = p.size(), k = pr.chart.dim();
  if (order.empty()) {
    order.resize(m);
    std::iota(order.begin(), order.end(), 0);
  }
  if (static_cast<Index>(order.size()) != m) throw InvalidInput("pulling order must list every vertex once");
  {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (Index i = 0; i < m; ++i)
      if (sorted[i] != i) throw InvalidInput("pulling order must list every vertex once");
  }

  std::vector<Bits> facet_sets;
  for (const auto& f : pr.facets) facet_sets.push_back(f.on);

  std::map<Bits, std::vector<std::vector<int>>> memo;
  auto pull = [&](auto&& self, const Bits& face, Index dim) -> const std::vector<std::vector<int>>& {
    if (auto it = memo.find(face); it != memo.end()) return it->second;
    std::vector<std::vector<int>> out;
    if (static_cast<Index>(face.count()) == dim + 1) {
      std::vector<int> s;
      for (auto v = face.find_first(); v != Bits::npos; v = face.find_next(v)) s.push_back(static_cast<int>(v));
      out.push_back(std::move(s));
    } else {
      int apex = -1;
      for (int v : order)
        if (face.test(v)) {
          apex = v;
          break;
        }
      std::vector<Bits> cand;
      for (const auto& t : facet_sets) {
        Bits g = face & t;
        if (g == face || g.none()) continue;
        cand.push_back(std::move(g));
      }
      std::sort(cand.begin(), cand.end());
      cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
      for (std::size_t i = 0; i < cand.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < cand.size() && maximal; ++j)
          if (i != j && cand[i].is_proper_subset_of(cand[j])) maximal = false;
        if (!maximal || cand[i].test(apex)) continue;
        for (auto s : self(self, cand[i], dim - 1)) {
          s.push_back(apex);
          std::sort(s.begin(), s.end());
          out.push_back(std::move(s));
        }
      }
    }
    return memo.emplace(face, std::move(out)).first->second;
  };

  Bits all(m);
  all.set();
  Triangulation t;
  t.order = order;
  t.simplices = pull(pull, all, k);
  std::sort(t.simplices.begin(), t.simplices.end());
  for (const auto& s : t.simplices) t.volumes.push_back(k == 0 ? BigInt(1) : simplex_volume(pr.chart.coords, s));
  return t;
}

bool is_unimodular(const Triangulation& t) {
  return std::all_of(t.volumes.begin(), t.volumes.end(), [](const BigInt& v) { return v == 1; });
}

BigInt normalized_volume(const VPolytope& p) {
  const Triangulation t = pulling_triangulation(p);
  return std::accumulate(t.volumes.begin(), t.volumes.end(), BigInt(0));
}

bool is_compressed(const VPolytope& p) {
  Prepared pr = prepare(p);
  for (const auto& f : pr.facets) {
    const std::int64_t g = gcd_all(f.y, 1);
    for (Index v = 0; v < p.size(); ++v)
      if (eval(f.y, pr.chart.coords, v) > g) return false;
  }
  return true;
}

namespace {

bool simple_and_smooth(const VPolytope& p, bool check_smooth) {
  Prepared pr = prepare(p);
  const Index m = p.size(), k = pr.chart.dim();
  const auto& c = pr.chart.coords;
  for (Index v = 0; v < m; ++v) {
    std::vector<std::size_t> on;
    for (std::size_t f = 0; f < pr.facets.size(); ++f)
      if (pr.facets[f].on.test(v)) on.push_back(f);
    if (static_cast<Index>(on.size()) != k) return false;
    if (!check_smooth) continue;
    std::vector<std::vector<std::int64_t>> dirs;
    for (Index w = 0; w < m; ++w) {
      if (w == v) continue;
      Bits face(m);
      face.set();
      for (std::size_t f : on)
        if (pr.facets[f].on.test(w)) face &= pr.facets[f].on;
      if (face.count() != 2 || !face.test(v) || !face.test(w)) continue;
      std::vector<std::int64_t> d(k);
      for (Index i = 0; i < k; ++i) d[i] = c(i, w) - c(i, v);
      make_primitive(d);
      dirs.push_back(std::move(d));
    }
    if (static_cast<Index>(dirs.size()) != k) return false;
    BigMatrix mat(k, k);
    for (Index i = 0; i < k; ++i)
      for (Index j = 0; j < k; ++j) mat(i, j) = BigInt(dirs[j][i]);
    BigInt det = determinant(mat);
    if (det != 1 && det != -1) return false;
  }
  return true;
}

struct VecHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
    return h;
  }
};

// Membership of (height, c) in the semigroup generated by (1, c_v).
class SemigroupOracle {
 public:
  SemigroupOracle(const IntMatrix& c, const std::vector<ConeFacet>& facets) : c_(c), facets_(facets) {}

  bool in_cone(const std::vector<std::int64_t>& pt) const {
    for (const auto& f : facets_) {
      __int128 s = 0;
      for (std::size_t i = 0; i < pt.size(); ++i) s += static_cast<__int128>(f.y[i]) * pt[i];
      if (s < 0) return false;
    }
    return true;
  }

  bool contains(const std::vector<std::int64_t>& pt) {
    if (pt[0] == 0) return std::all_of(pt.begin(), pt.end(), [](auto x) { return x == 0; });
    if (auto it = memo_.find(pt); it != memo_.end()) return it->second;
    bool found = false;
    std::vector<std::int64_t> q(pt.size());
    for (Index v = 0; v < c_.cols() && !found; ++v) {
      q[0] = pt[0] - 1;
      for (Index i = 0; i < c_.rows(); ++i) q[i + 1] = pt[i + 1] - c_(i, v);
      if (in_cone(q) && contains(q)) found = true;
    }
    memo_.emplace(pt, found);
    return found;
  }

 private:
  const IntMatrix& c_;
  const std::vector<ConeFacet>& facets_;
  std::unordered_map<std::vector<std::int64_t>, bool, VecHash> memo_;
};

// Points of Z^n / M Z^n as representatives in the half-open parallelepiped
// spanned by the columns of M.
std::vector<std::vector<std::int64_t>> parallelepiped_points(const BigMatrix& m) {
  const Index n = m.rows();
  BigInt det = determinant(m);
  // adj = det * M^{-1}, computed over Q.
  RationalMatrix aug(n, 2 * n);
  aug.leftCols(n) = m.cast<Rational>();
  aug.rightCols(n) = RationalMatrix::Identity(n, n);
  RationalMatrix inv = rref(aug).rightCols(n);
  auto reduce = [&](std::vector<BigInt> x) {
    std::vector<BigInt> lam_floor(n);
    for (Index i = 0; i < n; ++i) {
      Rational s = 0;
      for (Index j = 0; j < n; ++j) s += inv(i, j) * x[j];
      BigInt num = boost::multiprecision::numerator(s), den = boost::multiprecision::denominator(s);
      BigInt q = num / den;
      if (num % den != 0 && num < 0) q -= 1;
      lam_floor[i] = q;
    }
    for (Index r = 0; r < n; ++r)
      for (Index i = 0; i < n; ++i) x[r] -= m(r, i) * lam_floor[i];
    return x;
  };
  std::set<std::vector<BigInt>> seen;
  std::vector<std::vector<BigInt>> queue{std::vector<BigInt>(n, BigInt(0))};
  seen.insert(queue[0]);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Index j = 0; j < n; ++j) {
      std::vector<BigInt> next = queue[head];
      next[j] += 1;
      next = reduce(std::move(next));
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  if (BigInt(queue.size()) != (det < 0 ? BigInt(-det) : det)) throw std::logic_error("parallelepiped enumeration mismatch");
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& x : queue) {
    std::vector<std::int64_t> v(n);
    for (Index i = 0; i < n; ++i) v[i] = static_cast<std::int64_t>(x[i]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

bool is_simple(const VPolytope& p) { return simple_and_smooth(p, false); }
bool is_smooth(const VPolytope& p) { return simple_and_smooth(p, true); }

NormalityReport normality_gaps(const VPolytope& p, int max_height) {
  if (max_height < 2) throw InvalidInput("normality search needs max height >= 2");
  Prepared pr = prepare(p);
  const Triangulation t = pulling_triangulation(p);
  const auto& c = pr.chart.coords;
  const Index k = pr.chart.dim();
  SemigroupOracle oracle(c, pr.facets);

  std::set<std::vector<std::int64_t>> gaps;
  for (const auto& s : t.simplices) {
    BigMatrix m(k + 1, k + 1);
    for (Index j = 0; j < k + 1; ++j) {
      m(0, j) = 1;
      for (Index i = 0; i < k; ++i) m(i + 1, j) = c(i, s[j]);
    }
    for (const auto& base : parallelepiped_points(m)) {
      if (base[0] == 0 || base[0] > max_height || oracle.contains(base)) continue;
      // Translates of a member stay members, so only walk from non-members.
      std::set<std::vector<std::int64_t>> visited{base};
      std::vector<std::vector<std::int64_t>> queue{base};
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto q = queue[head];
        if (oracle.contains(q)) continue;
        gaps.insert(q);
        if (q[0] == max_height) continue;
        for (Index j = 0; j < k + 1; ++j) {
          auto r = q;
          for (Index i = 0; i < k + 1; ++i) r[i] += static_cast<std::int64_t>(m(i, j));
          if (visited.insert(r).second) queue.push_back(std::move(r));
        }
      }
    }
  }
  NormalityReport rep;
  rep.max_height = max_height;
  for (const auto& g : gaps) {
    GapPoint gp;
    gp.height = static_cast<int>(g[0]);
    gp.chart.assign(g.begin() + 1, g.end());
    for (Index i = 0; i < p.ambient_dim(); ++i) {
      BigInt x = BigInt(gp.height) * p.vertices(i, 0);
      for (Index j = 0; j < k; ++j) x += BigInt(gp.chart[j]) * pr.chart.basis(j, i);
      gp.ambient.push_back(static_cast<std::int64_t>(x));
    }
    ++rep.per_height[gp.height];
    rep.gaps.push_back(std::move(gp));
  }
  return rep;
}

// --- faces from minors -------------------------------------------------------

FaceCertificate face_restriction_contract(const Graph& g, Edge e) {
  if (e.first > e.second) std::swap(e.first, e.second);
  if (!g.has_edge(e.first, e.second)) throw InvalidInput("face_restriction: not an edge");
  const Graph h = contract_edge(g, e);
  const int n = g.vertex_count();
  // Label of each vertex of g in the contracted graph.
  std::vector<int> label(n + 1);
  for (int v = 1, next = 1; v <= n; ++v) {
    if (v == e.second) {
      label[v] = label[e.first];
      continue;
    }
    label[v] = next++;
  }
  FaceCertificate cert;
  cert.zero_edges = {e};
  const std::size_t count = std::size_t{1} << (h.vertex_count() - 1);
  for (std::size_t key = 0; key < count; ++key) {
    VertexMask block = 0;
    for (int v = 1; v <= n; ++v)
      if (key & vertex_bit(label[v])) block |= vertex_bit(v);
    cert.vertex_map.push_back(Partition(n, block).key());
  }
  return cert;
}

FaceCertificate face_restriction_induced(const Graph& g, VertexMask keep) {
  const int n = g.vertex_count();
  keep &= g.all_vertices();
  if (!keep) throw InvalidInput("face_restriction: empty vertex set");
  FaceCertificate cert;
  for (auto [i, j] : g.edges())
    if (!(keep & vertex_bit(i)) && !(keep & vertex_bit(j))) cert.zero_edges.emplace_back(i, j);
  // Each component of g - keep follows the vertex it is first attached to.
  std::vector<int> anchor(n + 1, 0);
  VertexMask rest = g.all_vertices() & ~keep;
  while (rest) {
    const int start = std::countr_zero(rest) + 1;
    VertexMask comp = vertex_bit(start), frontier = comp;
    while (frontier) {
      VertexMask grow = 0;
      for (int v : vertices_of(frontier)) grow |= g.neighbors(v) & ~keep;
      frontier = grow & ~comp;
      comp |= grow;
    }
    rest &= ~comp;
    Edge link{0, 0};
    for (auto [i, j] : g.edges()) {
      const bool ic = comp & vertex_bit(i), jc = comp & vertex_bit(j);
      const bool ik = keep & vertex_bit(i), jk = keep & vertex_bit(j);
      if ((ic && jk) || (jc && ik)) {
        link = {i, j};
        break;
      }
    }
    if (!link.first) throw InvalidInput("face_restriction: a component outside the subgraph is not attached to it");
    cert.zero_edges.push_back(link);
    const int a = (keep & vertex_bit(link.first)) ? link.first : link.second;
    for (int v : vertices_of(comp)) anchor[v] = a;
  }
  std::sort(cert.zero_edges.begin(), cert.zero_edges.end());

  const std::vector<int> kept = vertices_of(keep);
  const std::size_t count = std::size_t{1} << (kept.size() - 1);
  for (std::size_t key = 0; key < count; ++key) {
    VertexMask block = 0;
    for (std::size_t i = 0; i < kept.size(); ++i)
      if (key & (std::uint64_t{1} << i)) block |= vertex_bit(kept[i]);
    for (int v = 1; v <= n; ++v)
      if (anchor[v] && (block & vertex_bit(anchor[v]))) block |= vertex_bit(v);
    cert.vertex_map.push_back(Partition(n, block).key());
  }
  return cert;
}

FaceCertificate face_restriction(const Graph& g, const Graph& h, MinorKind kind) {
  if (kind == MinorKind::Contraction) {
    if (g == h) return {{}, [&] {
                          std::vector<std::uint64_t> id(std::size_t{1} << (g.vertex_count() - 1));
                          std::iota(id.begin(), id.end(), 0);
                          return id;
                        }()};
    for (const auto& e : g.edges())
      if (contract_edge(g, e) == h) return face_restriction_contract(g, e);
    throw InvalidInput("face_restriction: h is not a single-edge contraction of g");
  }
  const int n = g.vertex_count(), k = h.vertex_count();
  if (k < 1 || k > n) throw InvalidInput("face_restriction: size mismatch");
  for (VertexMask s = 1; s < (VertexMask{1} << n); ++s) {
    if (popcount(s) != k) continue;
    if (induced_subgraph(g, s) == h) return face_restriction_induced(g, s);
  }
  throw InvalidInput("face_restriction: h is not an induced subgraph of g");
}

std::string vertices_csv(const VPolytope& p) {
  std::ostringstream os;
  for (Index v = 0; v < p.size(); ++v) {
    for (Index i = 0; i < p.ambient_dim(); ++i) os << (i ? "," : "") << p.vertices(i, v);
    os << "\n";
  }
  return os.str();
}

std::string facets_text(const HPolytope& h) {
  std::ostringstream os;
  for (const auto& f : h.facets) {
    for (Index i = 0; i < f.normal.size(); ++i) os << (i ? " " : "") << f.normal[i];
    os << " <= " << f.offset << "\n";
  }
  return os.str();
}

}  // namespace cutkit
