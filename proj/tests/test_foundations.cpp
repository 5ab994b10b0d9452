#include <doctest.h>

#include <bit>
#include <random>
#include <sstream>

#include "cutkit/graph.hpp"
#include "cutkit/linalg.hpp"

using namespace cutkit;

TEST_CASE("exact linear algebra") {
  IntMatrix a(3, 4);
  a << 2, 4, 6, 8,
       1, 3, 5, 7,
       0, 0, 0, 0;
  CHECK(rank(a) == 2);

  BigMatrix k = integer_kernel(to_big(a));
  CHECK(k.cols() == 2);
  CHECK((to_big(a) * k).isZero());

  IntMatrix u(3, 3);
  u << 2, 0, 1,
       1, 3, 2,
       1, 1, 2;
  CHECK(determinant(to_big(u)) == BigInt(6));

  BigMatrix h = hermite_normal_form(to_big(a));
  CHECK(h.rows() == 2);
  CHECK(h(0, 0) == 1);
  CHECK(pivot_columns(h) == std::vector<Eigen::Index>{0, 1});

  RationalMatrix r = rational_kernel(to_rational(a));
  CHECK(r.cols() == 2);
  CHECK((to_rational(a) * r).isZero());

  BigVector v(3);
  v << BigInt(6), BigInt(-9), BigInt(15);
  CHECK(content(v) == 3);
}

TEST_CASE("kernel of random matrices is saturated") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int rows = 1 + rng() % 4, cols = rows + 1 + rng() % 4;
    IntMatrix a(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) a(i, j) = static_cast<int>(rng() % 7) - 3;
    const BigMatrix k = integer_kernel(to_big(a));
    CHECK(k.cols() == cols - rank(a));
    CHECK((to_big(a) * k).isZero());
    // saturated: the maximal minors of the basis are coprime
    if (k.cols() > 0) {
      BigInt g = 0;
      const int d = static_cast<int>(k.cols());
      for (unsigned rows_mask = 0; rows_mask < (1u << cols); ++rows_mask) {
        if (std::popcount(rows_mask) != d) continue;
        BigMatrix minor(d, d);
        for (int i = 0, r = 0; i < cols; ++i)
          if (rows_mask >> i & 1) minor.row(r++) = k.row(i);
        g = boost::multiprecision::gcd(g, determinant(minor));
      }
      CHECK(g == 1);
    }
  }
}

TEST_CASE("graph construction") {
  const Graph g(4, {{2, 1}, {3, 4}, {1, 3}});
  CHECK(g.edges() == std::vector<Edge>{{1, 2}, {1, 3}, {3, 4}});
  CHECK(g.edge_index(4, 3) == 2);
  CHECK(g.degree(1) == 2);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), InvalidInput);
  CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), InvalidInput);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), InvalidInput);

  CHECK(make_named("K4").edge_count() == 6);
  CHECK(make_named("C5").edge_count() == 5);
  CHECK(make_named("K2,3").edge_count() == 6);
  CHECK(make_named("K2,2,2").edge_count() == 12);
  CHECK(make_named("suspend(C4)") == suspend(cycle_graph(4)));
  CHECK(make_named("delete(K5, 1-5)").edge_count() == 9);
  CHECK(make_named("prism").edge_count() == 9);
  CHECK(make_named("path4") == path_graph(4));
  CHECK_THROWS_AS(make_named("Q7"), InvalidInput);

  std::istringstream in("# a square\nn 4\n1 2\n2 3\n3 4\n1 4\n");
  const Graph c = read_graph(in);
  CHECK(c == cycle_graph(4));
  std::istringstream again(write_graph(c));
  CHECK(read_graph(again) == c);
}

TEST_CASE("partitions") {
  const Partition p = parse_partition("34|12", 4);
  CHECK(p.block_a() == mask_of({1, 2}));
  CHECK(format_partition(p) == "12|34");
  CHECK(format_partition(parse_partition("123|4", 4)) == "4|123");
  CHECK(format_partition(Partition(4, 0)) == "|1234");
  CHECK(format_partition(parse_partition("2,3|1,4", 4)) == "14|23");
  CHECK(p.separates(1, 3));
  CHECK_FALSE(p.separates(1, 2));
  CHECK_THROWS_AS(parse_partition("12|3", 4), InvalidInput);
  CHECK_THROWS_AS(parse_partition("12|23", 3), InvalidInput);
  for (VertexMask a = 0; a < 16; ++a) {
    const Partition q(5, a);
    CHECK(parse_partition(format_partition(q), 5) == q);
  }
}

TEST_CASE("minors") {
  const Graph k4 = complete_graph(4);
  CHECK(has_minor(complete_graph(5), k4));
  CHECK_FALSE(has_minor(cycle_graph(6), k4));
  CHECK(has_minor(make_named("prism"), k4));
  CHECK(has_minor(make_named("K3,3"), k4));
  CHECK(has_minor(cycle_graph(6), cycle_graph(4)));
  CHECK_FALSE(has_minor(make_named("K1,3"), cycle_graph(3)));
  CHECK(contract_edge(cycle_graph(5), {1, 2}) == cycle_graph(4));
  CHECK(delete_vertex(complete_graph(5), 3) == complete_graph(4));
  CHECK(induced_subgraph(cycle_graph(5), mask_of({1, 2, 3})) == path_graph(3));
}

TEST_CASE("series-parallel recognition agrees with K4-minor search") {
  int tested = 0;
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : all_graphs(n)) {
      if (n == 6 && (tested % 7) != 0) {
        ++tested;
        continue;
      }
      CAPTURE(write_graph(g));
      CHECK(is_series_parallel(g) == !has_minor(g, complete_graph(4)));
      ++tested;
    }
  CHECK(tested >= 200);
}

TEST_CASE("induced cycles") {
  CHECK(max_induced_cycle(path_graph(5)) == 0);
  CHECK(max_induced_cycle(complete_graph(5)) == 3);
  CHECK(max_induced_cycle(cycle_graph(7)) == 7);
  CHECK(max_induced_cycle(make_named("K3,3")) == 4);
  CHECK(max_induced_cycle(make_named("prism")) == 4);
}

TEST_CASE("clique-sum decomposition") {
  const Graph g = make_named("delete(K5, 1-5)");
  const auto d = clique_sum_decompose(g);
  CHECK(d.pieces.size() == 2);
  CHECK(recombine(d, g.vertex_count()) == g);
  for (const auto& p : d.pieces) CHECK(p.graph == complete_graph(4));

  const Graph cyc = cycle_graph(5);
  const auto c = clique_sum_decompose(cyc);
  CHECK(c.pieces.size() == 1);

  // a triangulated hexagon falls apart into triangles
  const Graph fan(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {1, 3}, {1, 4}, {1, 5}});
  const auto f = clique_sum_decompose(fan);
  CHECK(f.pieces.size() == 4);
  CHECK(recombine(f, 6) == fan);

  std::mt19937_64 rng(1);
  const auto five = all_graphs(5);
  for (int i = 0; i < 100; ++i) {
    const Graph& h = five[rng() % five.size()];
    const auto dh = clique_sum_decompose(h);
    CHECK(recombine(dh, 5) == h);
    for (VertexMask s : dh.separators) CHECK(is_clique(h, s));
  }
}
