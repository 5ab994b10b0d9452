#include "cutkit/clique_sum.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace cutkit {

namespace {

VertexMask embed(VertexMask block, const std::vector<int>& map) {
  VertexMask out = 0;
  for (int v : vertices_of(block)) out |= vertex_bit(map[v]);
  return out;
}

VertexMask mask_in(const std::vector<int>& labels) {
  VertexMask m = 0;
  for (int v : labels) m |= vertex_bit(v);
  return m;
}

std::vector<VertexMask> subsets(VertexMask m) {
  std::vector<VertexMask> out;
  VertexMask s = 0;
  do {
    out.push_back(s);
    s = (s - m) & m;
  } while (s != 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> parse_labels(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (tok.find_first_not_of(" \t", used) != std::string::npos) throw InvalidInput("");
    } catch (const std::exception&) {
      throw InvalidInput("bad separator label '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

VertexMask SumContext::separator() const { return mask_in(sep1); }

VertexMask SumContext::private_vertices(int side) const {
  VertexMask m = 0;
  const Graph& piece_graph = piece(side);
  const auto& map = embedding(side);
  for (int v = 1; v <= piece_graph.vertex_count(); ++v) m |= vertex_bit(map[v]);
  return m & ~separator();
}

SumContext make_sum(const Graph& g1, const Graph& g2, std::vector<int> sep1, std::vector<int> sep2) {
  if (sep2.empty()) sep2 = sep1;
  if (sep1.size() != sep2.size()) throw InvalidInput("separator label lists differ in length");
  if (sep1.empty() || sep1.size() > 3) throw InvalidInput("separator must have 1 to 3 vertices");
  for (int v : sep1)
    if (v < 1 || v > g1.vertex_count()) throw InvalidInput("separator label outside the first graph");
  for (int v : sep2)
    if (v < 1 || v > g2.vertex_count()) throw InvalidInput("separator label outside the second graph");
  const VertexMask s1 = mask_in(sep1), s2 = mask_in(sep2);
  if (popcount(s1) != static_cast<int>(sep1.size()) || popcount(s2) != static_cast<int>(sep2.size()))
    throw InvalidInput("repeated separator label");
  if (!is_clique(g1, s1) || !is_clique(g2, s2)) throw InvalidInput("separator is not a clique in both graphs");

  SumContext ctx;
  ctx.g1 = g1;
  ctx.g2 = g2;
  ctx.sep1 = sep1;
  ctx.sep2 = sep2;
  const int n1 = g1.vertex_count();
  ctx.map1.resize(n1 + 1);
  for (int v = 0; v <= n1; ++v) ctx.map1[v] = v;
  ctx.map2.assign(g2.vertex_count() + 1, 0);
  for (std::size_t i = 0; i < sep2.size(); ++i) ctx.map2[sep2[i]] = sep1[i];
  int next = n1;
  for (int v = 1; v <= g2.vertex_count(); ++v)
    if (!ctx.map2[v]) ctx.map2[v] = ++next;

  std::set<Edge> edges(g1.edges().begin(), g1.edges().end());
  for (auto [i, j] : g2.edges()) {
    int a = ctx.map2[i], b = ctx.map2[j];
    edges.insert({std::min(a, b), std::max(a, b)});
  }
  ctx.g = Graph(next, {edges.begin(), edges.end()});
  return ctx;
}

SumContext make_sum(const Graph& g1, const Graph& g2, const std::string& separator) {
  const auto eq = separator.find('=');
  if (eq == std::string::npos) return make_sum(g1, g2, parse_labels(separator));
  return make_sum(g1, g2, parse_labels(separator.substr(0, eq)), parse_labels(separator.substr(eq + 1)));
}

AlignedBinomial align(const Binomial& f, const SumContext& ctx, int side) {
  const Graph& piece = ctx.piece(side);
  const int n = piece.vertex_count();
  if (f.nvars() != (std::size_t{1} << (n - 1))) throw InvalidInput("binomial does not match the piece");
  const auto& sep = side == 1 ? ctx.sep1 : ctx.sep2;
  const VertexMask smask = mask_in(sep), pivot = vertex_bit(sep.back()), all = piece.all_vertices();

  auto factors = [&](const Monomial& m) {
    std::vector<VertexMask> out;
    for (std::size_t k = 0; k < m.size(); ++k) {
      VertexMask a = Partition(n, k).block_a();
      if (a & pivot) a = all & ~a;
      for (int r = 0; r < m[k]; ++r) out.push_back(a);
    }
    std::sort(out.begin(), out.end(), [&](VertexMask x, VertexMask y) {
      return std::make_pair(x & smask, x) < std::make_pair(y & smask, y);
    });
    return out;
  };
  AlignedBinomial out{factors(f.plus), factors(f.minus)};
  if (out.plus.size() != out.minus.size()) throw InvalidInput("cannot align a non-homogeneous binomial");
  for (std::size_t i = 0; i < out.plus.size(); ++i)
    if ((out.plus[i] & smask) != (out.minus[i] & smask))
      throw InvalidInput("cannot align: the two sides restrict differently to the separator");
  return out;
}

Binomial lift(const AlignedBinomial& f, const std::vector<VertexMask>& e, const SumContext& ctx, int side) {
  if (e.size() != f.plus.size()) throw InvalidInput("lift: one subset per factor required");
  const VertexMask other = ctx.private_vertices(side == 1 ? 2 : 1);
  const int n = ctx.g.vertex_count();
  const auto& map = ctx.embedding(side);
  std::vector<int> p(std::size_t{1} << (n - 1), 0), m(p.size(), 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] & ~other) throw InvalidInput("lift: subset outside the other side's private vertices");
    ++p[Partition(n, embed(f.plus[i], map) | e[i]).key()];
    ++m[Partition(n, embed(f.minus[i], map) | e[i]).key()];
  }
  return {Monomial(p), Monomial(m)};
}

std::vector<ComposedElement> lift_all(const std::vector<Binomial>& f, const SumContext& ctx, int side,
                                      std::size_t budget) {
  const auto subs = subsets(ctx.private_vertices(side == 1 ? 2 : 1));
  const int bits = std::countr_zero(subs.size());
  std::size_t total = 0;
  std::vector<AlignedBinomial> aligned;
  for (const auto& b : f) {
    aligned.push_back(align(b, ctx, side));
    const std::size_t d = aligned.back().plus.size();
    if (bits * d >= 63 || (total += std::size_t{1} << (bits * d)) > budget)
      throw BudgetExceeded("lift_all: too many lifted binomials");
  }
  std::set<Binomial> seen;
  std::vector<ComposedElement> out;
  for (const auto& af : aligned) {
    const std::size_t d = af.plus.size();
    std::vector<std::size_t> idx(d, 0);
    while (true) {
      std::vector<VertexMask> e(d);
      for (std::size_t i = 0; i < d; ++i) e[i] = subs[idx[i]];
      Binomial b = lift(af, e, ctx, side);
      if (seen.insert(b.canonical()).second) out.push_back({std::move(b), side, std::move(e)});
      std::size_t pos = 0;
      while (pos < d && ++idx[pos] == subs.size()) idx[pos++] = 0;
      if (pos == d) break;
    }
  }
  return out;
}

std::vector<ComposedElement> quad_set(const SumContext& ctx) {
  const int n = ctx.g.vertex_count();
  const std::size_t nv = std::size_t{1} << (n - 1);
  const VertexMask free_sep = ctx.separator() & ~vertex_bit(ctx.sep1.back());
  const auto rows = subsets(ctx.private_vertices(2));
  const auto cols = subsets(ctx.private_vertices(1));
  std::vector<ComposedElement> out;
  for (VertexMask a : subsets(free_sep)) {
    auto q = [&](std::size_t r, std::size_t c) { return Partition(n, a | rows[r] | cols[c]).key(); };
    for (std::size_t r1 = 0; r1 < rows.size(); ++r1)
      for (std::size_t r2 = r1 + 1; r2 < rows.size(); ++r2)
        for (std::size_t c1 = 0; c1 < cols.size(); ++c1)
          for (std::size_t c2 = c1 + 1; c2 < cols.size(); ++c2) {
            std::vector<int> p(nv, 0), m(nv, 0);
            ++p[q(r1, c1)];
            ++p[q(r2, c2)];
            ++m[q(r1, c2)];
            ++m[q(r2, c1)];
            out.push_back({Binomial(Monomial(p), Monomial(m)), 0, {}});
          }
  }
  return out;
}

std::vector<ComposedElement> compose_generating_set(const SumContext& ctx, const std::vector<Binomial>& f1,
                                                    const std::vector<Binomial>& f2) {
  std::vector<ComposedElement> all = lift_all(f1, ctx, 1);
  for (auto& e : lift_all(f2, ctx, 2)) all.push_back(std::move(e));
  for (auto& e : quad_set(ctx)) all.push_back(std::move(e));
  const ExponentMatrix a = exponent_matrix(ctx.g);
  std::set<Binomial> seen;
  std::vector<ComposedElement> out;
  for (auto& e : all) {
    if (!a.in_kernel(e.binomial)) throw std::logic_error("composed binomial outside the cut ideal");
    if (seen.insert(e.binomial.canonical()).second) out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::int64_t> orienting_weight(const std::vector<Binomial>& marked) {
  if (marked.empty()) return {};
  std::vector<std::vector<std::int64_t>> diffs;
  for (const auto& b : marked) {
    if (b.is_zero()) throw InvalidInput("orienting_weight: zero binomial");
    diffs.push_back(b.to_vector());
  }
  // Perceptron updates; terminates because a strictly orienting weight exists
  // whenever the marking comes from a term order.
  std::vector<std::int64_t> w(diffs[0].size(), 0);
  for (std::size_t round = 0; round < 1000000; ++round) {
    bool clean = true;
    for (const auto& d : diffs) {
      __int128 s = 0;
      for (std::size_t i = 0; i < d.size(); ++i) s += static_cast<__int128>(w[i]) * d[i];
      if (s > 0) continue;
      clean = false;
      for (std::size_t i = 0; i < d.size(); ++i) w[i] += d[i];
    }
    if (clean) return w;
  }
  throw BudgetExceeded("orienting_weight: no separating weight found");
}

GroebnerBasis compose_groebner(const SumContext& ctx, const GroebnerBasis& gb1, const GroebnerBasis& gb2) {
  const int n = ctx.g.vertex_count(), n1 = ctx.g1.vertex_count(), n2 = ctx.g2.vertex_count();
  const std::size_t nv = std::size_t{1} << (n - 1);
  auto w1 = orienting_weight(gb1.elements), w2 = orienting_weight(gb2.elements);
  w1.resize(std::size_t{1} << (n1 - 1), 0);
  w2.resize(std::size_t{1} << (n2 - 1), 0);

  auto restrict = [&](VertexMask block, const std::vector<int>& map, int nk) {
    VertexMask m = 0;
    for (int v = 1; v <= nk; ++v)
      if (block & vertex_bit(map[v])) m |= vertex_bit(v);
    return Partition(nk, m).key();
  };
  const VertexMask sep = ctx.separator(), pivot = vertex_bit(ctx.sep1.back());
  const VertexMask p1 = ctx.private_vertices(1), p2 = ctx.private_vertices(2);
  std::vector<std::int64_t> w(nv);
  std::vector<std::tuple<VertexMask, VertexMask, VertexMask, int>> keys;
  for (std::size_t k = 0; k < nv; ++k) {
    VertexMask a = Partition(n, k).block_a();
    w[k] = w1[restrict(a, ctx.map1, n1)] + w2[restrict(a, ctx.map2, n2)];
    if (a & pivot) a = ctx.g.all_vertices() & ~a;
    keys.emplace_back(a & sep, a & p1, a & p2, static_cast<int>(k));
  }
  const std::int64_t lo = *std::min_element(w.begin(), w.end());
  for (auto& x : w) x += 1 - lo;
  std::sort(keys.begin(), keys.end());
  std::vector<int> varorder;
  for (const auto& t : keys) varorder.push_back(std::get<3>(t));
  const TermOrder order = TermOrder::weighted(w, TermOrder::Kind::DegRevLex, varorder);

  GroebnerBasis gb;
  gb.order = order;
  gb.reduced = false;
  for (const auto& e : compose_generating_set(ctx, gb1.elements, gb2.elements)) {
    if (e.side != 0 && order.compare(e.binomial.plus, e.binomial.minus) <= 0)
      throw std::logic_error("lifted leading term is not leading under the composed order");
    gb.elements.push_back(order.orient(e.binomial));
  }
  if (!is_groebner(gb.elements, order)) throw std::logic_error("composed set fails the S-pair test");
  return gb;
}

bool verify_generates(const std::vector<Binomial>& m, const Graph& g, const GroebnerOptions& opts) {
  const ExponentMatrix a = exponent_matrix(g);
  for (const auto& b : m)
    if (b.nvars() != static_cast<std::size_t>(a.cols()) || !a.in_kernel(b))
      throw InvalidInput("verify_generates: binomial outside the cut ideal");
  const GroebnerBasis gm = buchberger(m, TermOrder::degrevlex(), opts);
  const GroebnerBasis gt = toric_groebner(a, TermOrder::degrevlex(), opts);
  return ideal_equal(gm, gt);
}

ChainResult compose_chain(const Graph& start, const std::vector<SumStep>& steps) {
  ChainResult r{start, toric_groebner(exponent_matrix(start), TermOrder::degrevlex())};
  for (const auto& s : steps) {
    const SumContext ctx = make_sum(r.graph, s.piece, s.sep_current, s.sep_piece);
    const GroebnerBasis gp = toric_groebner(exponent_matrix(s.piece), TermOrder::degrevlex());
    r.groebner = compose_groebner(ctx, r.groebner, gp);
    r.graph = ctx.g;
  }
  return r;
}

std::vector<std::vector<SumStep>> polygon_triangulations(int n) {
  if (n < 3) throw InvalidInput("polygon needs at least 3 sides");
  struct State {
    int vertices;
    std::set<Edge> edges, boundary;
    std::vector<SumStep> steps;
  };
  const Graph triangle = complete_graph(3);
  std::vector<State> level{{3, {{1, 2}, {1, 3}, {2, 3}}, {{1, 2}, {1, 3}, {2, 3}}, {}}};
  for (int k = 3; k < n; ++k) {
    std::vector<State> next;
    for (const auto& s : level)
      for (const auto& b : s.boundary) {
        State t = s;
        const int v = ++t.vertices;
        t.boundary.erase(b);
        t.boundary.insert({b.first, v});
        t.boundary.insert({b.second, v});
        t.edges.insert({b.first, v});
        t.edges.insert({b.second, v});
        t.steps.push_back({triangle, {b.first, b.second}, {1, 2}});
        next.push_back(std::move(t));
      }
    level = std::move(next);
  }
  std::set<std::set<Edge>> seen;
  std::vector<std::vector<SumStep>> out;
  for (auto& s : level)
    if (seen.insert(s.edges).second) out.push_back(std::move(s.steps));
  return out;
}

}  // namespace cutkit
