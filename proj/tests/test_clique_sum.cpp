#include <doctest.h>

#include <algorithm>
#include <set>

#include "cutkit/clique_sum.hpp"
#include "cutkit/markov.hpp"
#include "cutkit/polytope.hpp"

using namespace cutkit;

namespace {

std::vector<Binomial> binomials_of(const std::vector<ComposedElement>& m) {
  std::vector<Binomial> out;
  for (const auto& e : m) out.push_back(e.binomial);
  return out;
}

bool contains(const std::vector<ComposedElement>& m, const Binomial& b) {
  return std::any_of(m.begin(), m.end(), [&](const ComposedElement& e) {
    return e.binomial.canonical() == b.canonical();
  });
}

}  // namespace

TEST_CASE("gluing two complete graphs along a triangle") {
  const Graph k4 = complete_graph(4);
  const auto ctx = make_sum(k4, k4, "2,3,4");
  CHECK(ctx.g == make_named("delete(K5, 1-5)"));
  CHECK(ctx.separator() == mask_of({2, 3, 4}));
  CHECK(ctx.private_vertices(1) == mask_of({1}));
  CHECK(ctx.private_vertices(2) == mask_of({5}));
  const VariableSet vars(ctx.g);

  const auto quads = quad_set(ctx);
  std::set<std::string> printed;
  for (const auto& q : quads) printed.insert(print_binomial(display_form(q.binomial), vars));
  const std::set<std::string> expected = {
      "q[|12345]*q[15|234] - q[1|2345]*q[5|1234]",
      "q[2|1345]*q[34|125] - q[12|345]*q[25|134]",
      "q[3|1245]*q[24|135] - q[13|245]*q[35|124]",
      "q[23|145]*q[4|1235] - q[45|123]*q[14|235]"};
  CHECK(printed == expected);

  const auto gb = toric_groebner(exponent_matrix(k4), TermOrder::degrevlex());
  const auto lift1 = lift_all(gb.elements, ctx, 1);
  const auto lift2 = lift_all(gb.elements, ctx, 2);
  CHECK(lift1.size() == 16);
  CHECK(lift2.size() == 16);

  const Binomial f1 = parse_binomial(
      "q[|12345]*q[34|125]*q[24|135]*q[23|145] - q[1|2345]*q[25|134]*q[35|124]*q[45|123]", vars);
  const Binomial f2 = parse_binomial(
      "q[5|1234]*q[12|345]*q[13|245]*q[14|235] - q[15|234]*q[2|1345]*q[3|1245]*q[4|1235]", vars);
  const Binomial f3 = parse_binomial(
      "q[1|2345]*q[25|134]*q[35|124]*q[45|123] - q[15|234]*q[2|1345]*q[3|1245]*q[4|1235]", vars);
  const Binomial f4 = parse_binomial(
      "q[|12345]*q[34|125]*q[24|135]*q[23|145] - q[5|1234]*q[12|345]*q[13|245]*q[14|235]", vars);
  CHECK(contains(lift1, f1));
  CHECK(contains(lift1, f2));
  CHECK(contains(lift2, f3));
  CHECK(contains(lift2, f4));
  CHECK(Polynomial::from({{1, f1}, {-1, f2}, {1, f3}, {-1, f4}}).is_zero());

  const auto m = compose_generating_set(ctx, gb.elements, gb.elements);
  CHECK(m.size() == 36);
  const auto all = binomials_of(m);
  CHECK(verify_generates(all, ctx.g));

  for (const Binomial& f : {f1, f2, f3, f4}) {
    std::vector<Binomial> fewer;
    for (const auto& b : all)
      if (b.canonical() != f.canonical()) fewer.push_back(b);
    CHECK(fewer.size() == 35);
    CHECK(verify_generates(fewer, ctx.g));
  }
  for (const auto& q : quads) {
    std::vector<Binomial> fewer;
    for (const auto& b : all)
      if (b.canonical() != q.binomial.canonical()) fewer.push_back(b);
    CHECK_FALSE(verify_generates(fewer, ctx.g));
  }

  const auto mb = markov_basis(exponent_matrix(ctx.g));
  CHECK(mb.degree_histogram == std::map<int, int>{{2, 4}, {4, 31}});
  CHECK(normalized_volume(cut_polytope(ctx.g)) == 80);

  const auto composed = compose_groebner(ctx, gb, gb);
  CHECK(is_groebner(composed.elements, composed.order));
  CHECK(ideal_equal(composed, toric_groebner(exponent_matrix(ctx.g), TermOrder::degrevlex())));
}

TEST_CASE("gluing edges at a vertex") {
  const Graph k2 = complete_graph(2);
  const auto ctx = make_sum(k2, k2, "2=1");
  CHECK(ctx.g == path_graph(3));
  const auto m = compose_generating_set(ctx, {}, {});
  REQUIRE(m.size() == 1);
  CHECK(m[0].binomial.degree() == 2);
  CHECK(m[0].side == 0);
  CHECK(verify_generates(binomials_of(m), ctx.g));
}

TEST_CASE("trees as repeated vertex sums") {
  const auto ctx = make_sum(path_graph(3), complete_graph(2), "3=1");
  CHECK(ctx.g == path_graph(4));
  const auto m = compose_generating_set(ctx, markov_basis(exponent_matrix(path_graph(3))).elements, {});
  for (const auto& e : m) CHECK(e.binomial.degree() == 2);
  CHECK(verify_generates(binomials_of(m), ctx.g));
  CHECK_THROWS_AS(make_sum(path_graph(3), complete_graph(2), std::vector<int>{}), InvalidInput);
}

TEST_CASE("separator validation") {
  CHECK_THROWS_AS(make_sum(cycle_graph(4), complete_graph(3), "1,3"), InvalidInput);
  CHECK_THROWS_AS(make_sum(complete_graph(5), complete_graph(5), "1,2,3,4"), InvalidInput);
  CHECK_THROWS_AS(make_sum(complete_graph(3), complete_graph(3), "1,2=1"), InvalidInput);
  CHECK_THROWS_AS(make_sum(complete_graph(3), complete_graph(3), "1,x"), InvalidInput);
}

TEST_CASE("composed Groebner bases over non-quadratic pieces") {
  const auto c4 = cycle_graph(4);
  const auto ctx = make_sum(c4, complete_graph(3), "1,2");
  const auto g1 = toric_groebner(exponent_matrix(c4), TermOrder::degrevlex());
  const auto g2 = toric_groebner(exponent_matrix(complete_graph(3)), TermOrder::degrevlex());
  const auto composed = compose_groebner(ctx, g1, g2);
  CHECK(is_groebner(composed.elements, composed.order));
  CHECK(ideal_equal(composed, toric_groebner(exponent_matrix(ctx.g), TermOrder::degrevlex())));
  const auto orient = orienting_weight(composed.elements);
  for (const auto& b : composed.elements) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < b.nvars(); ++i) s += orient[i] * (b.plus[i] - b.minus[i]);
    CHECK(s > 0);
  }
}

TEST_CASE("triangulated polygons have quadratic Groebner bases") {
  const std::vector<std::size_t> counts = {1, 3, 12, 60};
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    const auto all = polygon_triangulations(n);
    CHECK(all.size() == counts[n - 3]);
    for (const auto& steps : all) {
      const auto r = compose_chain(complete_graph(3), steps);
      CHECK(r.graph.vertex_count() == n);
      CHECK(r.graph.edge_count() == 2 * n - 3);
      CHECK(is_groebner(r.groebner.elements, r.groebner.order));
      for (const auto& b : r.groebner.elements) CHECK(b.degree() == 2);
    }
  }
}
