#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "cutkit/linalg.hpp"
#include "cutkit/markov.hpp"
#include "cutkit/stat_models.hpp"
#include "oracles.hpp"

using namespace cutkit;
using oracle::brute_force_markov;

namespace {

std::map<int, int> histogram(const Graph& g) { return markov_basis(exponent_matrix(g)).degree_histogram; }

// q[A|B] -> q[A xor S | B xor S]: the switching symmetry of the cut map.
Binomial switch_by(const Binomial& b, int n, VertexMask s) {
  Monomial plus(b.nvars()), minus(b.nvars());
  for (std::size_t c = 0; c < b.nvars(); ++c) {
    const auto to = static_cast<std::size_t>(Partition(n, static_cast<VertexMask>(c) ^ s).key());
    plus.set(to, b.plus[c]);
    minus.set(to, b.minus[c]);
  }
  return {plus, minus};
}

}  // namespace

TEST_CASE("cut map of the complete graph on four vertices") {
  const Graph k4 = complete_graph(4);
  const auto m = exponent_matrix(k4);
  CHECK(m.rows() == 12);
  CHECK(m.cols() == 8);
  CHECK(m.row_labels[0] == "s12");
  CHECK(m.row_labels[1] == "t12");
  const VariableSet vars(k4);
  CHECK(vars.names()[0] == "q[|1234]");
  CHECK(vars.names()[7] == "q[4|123]");
  // q[12|34] -> t12 s13 s14 s23 s24 t34
  const auto mono = cut_monomial(k4, parse_partition("12|34", 4));
  CHECK(mono == std::vector<int>{0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1});
  CHECK(cut_vector(k4, parse_partition("1|234", 4)) == std::vector<int>{1, 1, 1, 0, 0, 0});
  CHECK(cut_edges(k4, parse_partition("12|34", 4)).size() == 4);
  CHECK(rank(m.entries) == k4.edge_count() + 1);
  CHECK_THROWS_AS(VariableSet(complete_graph(21)), InvalidInput);
}

TEST_CASE("rank is |E| + 1") {
  for (const char* name : {"K2", "K3", "C4", "K4", "C5", "K2,3", "suspend(C4)", "K5", "path4", "prism"}) {
    const Graph g = make_named(name);
    CHECK(rank(exponent_matrix(g).entries) == g.edge_count() + 1);
  }
}

TEST_CASE("binomial text round trip") {
  const VariableSet vars(complete_graph(4));
  const std::string quartic = "q[|1234]*q[12|34]*q[13|24]*q[14|23] - q[1|234]*q[2|134]*q[3|124]*q[4|123]";
  const Binomial b = parse_binomial(quartic, vars);
  CHECK(print_binomial(b, vars) == quartic);
  CHECK(parse_binomial("q[1234|]*q[34|12]*q[24|13]*q[23|14] - q[234|1]*q[134|2]*q[124|3]*q[123|4]", vars) == b);
  CHECK(display_form(b.negated()) == b);
  CHECK(exponent_matrix(complete_graph(4)).in_kernel(b));
  CHECK_THROWS_AS(parse_binomial("q[12|34] - ", vars), InvalidInput);
  CHECK_THROWS_AS(parse_binomial("q[12|3] - q[1|234]", vars), InvalidInput);
  CHECK_THROWS_AS(print_binomial(Binomial(b.plus, b.plus), vars), InvalidInput);

  const Binomial sq = parse_binomial("q[1|234]^2 - q[12|34]*q[13|24]", vars);
  CHECK(print_binomial(sq, vars) == "q[1|234]^2 - q[12|34]*q[13|24]");
  CHECK(binomial_from_json(binomial_to_json(sq, vars.names()), vars.names()) == sq);
}

TEST_CASE("term orders") {
  const Monomial a(std::vector<int>{2, 0, 1}), b(std::vector<int>{1, 2, 0});
  CHECK(TermOrder::lex().greater(a, b));
  CHECK(TermOrder::degrevlex().greater(b, a));
  CHECK(TermOrder::degrevlex({0, 2, 1}).greater(a, b));
  const auto w = TermOrder::parse("weight:1,5,1");
  CHECK(w.greater(b, a));
  CHECK(TermOrder::parse("lex").kind() == TermOrder::Kind::Lex);
  CHECK_THROWS_AS(TermOrder::parse("grevlex"), InvalidInput);
}

TEST_CASE("Groebner engine on a twisted cubic") {
  IntMatrix a(2, 4);
  a << 3, 2, 1, 0,
       0, 1, 2, 3;
  const auto gb = toric_groebner(a, TermOrder::degrevlex());
  CHECK(gb.complete);
  CHECK(gb.size() == 3);
  for (const auto& b : gb.elements) CHECK(b.degree() == 2);
  const auto lex = toric_groebner(a, TermOrder::lex());
  CHECK(ideal_equal(gb, lex));
  CHECK(is_groebner(lex.elements, lex.order));
  CHECK(markov_basis(a).degree_histogram == std::map<int, int>{{2, 3}});
  CHECK_THROWS_AS(toric_groebner(IntMatrix::Zero(2, 3), TermOrder::degrevlex()), InvalidInput);
}

TEST_CASE("small cut ideals") {
  CHECK(histogram(complete_graph(3)).empty());
  CHECK(histogram(path_graph(3)) == std::map<int, int>{{2, 1}});
  CHECK(histogram(complete_graph(4)) == std::map<int, int>{{4, 1}});
  CHECK(histogram(cycle_graph(4)) == std::map<int, int>{{2, 3}});
  CHECK(histogram(cycle_graph(5)) == std::map<int, int>{{2, 30}});
  CHECK(histogram(make_named("K2,3")) == std::map<int, int>{{2, 19}});
  CHECK(histogram(make_named("suspend(C4)")) == std::map<int, int>{{2, 8}, {4, 8}});
  CHECK(histogram(make_named("delete(K5, 1-5)")) == std::map<int, int>{{2, 4}, {4, 31}});
}

TEST_CASE("emitted binomials lie in the kernel") {
  for (const char* name : {"C4", "K4", "C5", "K2,3", "suspend(C4)", "K5"}) {
    CAPTURE(name);
    const auto m = exponent_matrix(make_named(name));
    const auto mb = markov_basis(m);
    for (const auto& b : mb.elements) CHECK(m.in_kernel(b));
    for (const auto& b : mb.groebner.elements) CHECK(m.in_kernel(b));
  }
}

TEST_CASE("switching symmetry") {
  for (const char* name : {"C5", "K2,3", "K5"}) {
    CAPTURE(name);
    const Graph g = make_named(name);
    const auto gb = toric_groebner(exponent_matrix(g), TermOrder::degrevlex());
    for (VertexMask s : {VertexMask{1}, VertexMask{6}, VertexMask{11}})
      for (const auto& b : gb.elements) CHECK(reduces_to_zero(switch_by(b, g.vertex_count(), s), gb));
  }
}

TEST_CASE("reduced bases do not depend on the thread count") {
  for (const char* name : {"C5", "K5", "K2,3"}) {
    CAPTURE(name);
    const auto m = exponent_matrix(make_named(name));
    const auto one = toric_groebner(m, TermOrder::degrevlex(), {.max_pairs = 0, .threads = 1});
    for (int t : {2, 4, 8}) {
      const auto many = toric_groebner(m, TermOrder::degrevlex(), {.max_pairs = 0, .threads = t});
      CHECK(many.elements == one.elements);
    }
  }
}

TEST_CASE("pair budget leaves a partial, flagged result") {
  const auto m = exponent_matrix(complete_graph(5));
  const auto gb = toric_groebner(m, TermOrder::degrevlex(), {.max_pairs = 50, .threads = 1});
  CHECK_FALSE(gb.complete);
  const auto mb = markov_basis(m, {.max_pairs = 50, .threads = 1});
  CHECK_FALSE(mb.complete);
}

TEST_CASE("squarefree initial ideals") {
  std::mt19937_64 rng(2024);
  const auto c4 = exponent_matrix(cycle_graph(4));
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<int> order(8);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const auto gb = toric_groebner(c4, TermOrder::degrevlex(order));
    CHECK(is_squarefree(initial_ideal(gb)));
  }
  // C5 has an induced 5-cycle, so some reverse lexicographic initial ideal is not squarefree
  const auto c5 = exponent_matrix(cycle_graph(5));
  bool found = false;
  for (int trial = 0; trial < 40 && !found; ++trial) {
    std::vector<int> order(16);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    found = !is_squarefree(initial_ideal(toric_groebner(c5, TermOrder::degrevlex(order))));
  }
  CHECK(found);
}

TEST_CASE("fibers") {
  const auto m = exponent_matrix(complete_graph(4));
  const auto b = parse_binomial("q[|1234]*q[12|34]*q[13|24]*q[14|23] - q[1|234]*q[2|134]*q[3|124]*q[4|123]",
                                VariableSet(complete_graph(4)));
  const auto fib = fiber(m.entries, m.image(b.plus));
  CHECK(fib.size() == 2);
  int count = 0;
  fiber_components(fib, &count);
  CHECK(count == 2);
}

TEST_CASE("Markov bases agree with the brute-force fiber oracle") {
  std::vector<std::pair<std::string, IntMatrix>> fixtures;
  for (const char* name : {"K3", "path3", "C4", "K4", "K1,3"}) fixtures.emplace_back(name, exponent_matrix(make_named(name)).entries);
  fixtures.emplace_back("psi K3", psi_matrix(complete_graph(3)).entries);
  fixtures.emplace_back("psi path3", psi_matrix(path_graph(3)).entries);
  fixtures.emplace_back("split system", jc_matrix(complete_cyclic_system(4)).entries);
  fixtures.emplace_back("one split", jc_matrix(SplitSystem(4, {parse_split("1,2 | 3,4")})).entries);
  IntMatrix cubic(2, 4);
  cubic << 3, 2, 1, 0, 0, 1, 2, 3;
  fixtures.emplace_back("twisted cubic", cubic);
  IntMatrix indep(5, 6);  // 2x3 independence model
  indep << 1, 1, 1, 0, 0, 0,
           0, 0, 0, 1, 1, 1,
           1, 0, 0, 1, 0, 0,
           0, 1, 0, 0, 1, 0,
           0, 0, 1, 0, 0, 1;
  fixtures.emplace_back("independence", indep);
  for (const auto& [name, a] : fixtures) {
    CAPTURE(name);
    REQUIRE(a.cols() <= 10);
    const auto mb = markov_basis(a);
    REQUIRE(mb.mu() <= 4);
    CHECK(mb.degree_histogram == brute_force_markov(a, 4));
  }
}

TEST_CASE("degree-bounded fiber counts agree with full Markov bases") {
  for (const char* name : {"C4", "K4", "C5", "K2,3", "suspend(C4)", "K5", "delete(K5, 1-5)"}) {
    CAPTURE(name);
    const auto a = exponent_matrix(make_named(name)).entries;
    const auto full = markov_basis(a).degree_histogram;
    CHECK(markov_degrees_upto(a, 6) == full);
    std::map<int, int> low(full.begin(), full.lower_bound(3));
    CHECK(markov_degrees_upto(a, 2) == low);
  }
  const auto psi = psi_matrix(complete_graph(3)).entries;
  CHECK(markov_degrees_upto(psi, 4) == brute_force_markov(psi, 4));
  IntMatrix uneven(1, 2);
  uneven << 1, 2;
  CHECK_THROWS_AS(markov_degrees_upto(uneven, 3), InvalidInput);
}

TEST_CASE("largest minimal degree does not grow under faces") {
  // induced subgraphs and contractions give faces of the cut polytope
  std::mt19937_64 rng(9);
  const auto five = all_graphs(5);
  int checked = 0;
  while (checked < 12) {
    const Graph& g = five[rng() % five.size()];
    if (!is_connected(g) || g.edge_count() > 8) continue;
    const int mu = markov_basis(exponent_matrix(g)).mu();
    const auto [i, j] = g.edges()[rng() % g.edge_count()];
    CHECK(markov_basis(exponent_matrix(contract_edge(g, {i, j}))).mu() <= mu);
    const Graph h = delete_vertex(g, 1 + static_cast<int>(rng() % 5));
    if (h.edge_count() > 0) CHECK(markov_basis(exponent_matrix(h)).mu() <= mu);
    ++checked;
  }
}
