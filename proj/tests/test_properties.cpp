#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "cutkit/groebner.hpp"
#include "cutkit/polytope.hpp"

using namespace cutkit;

namespace {

// Lexicographically smallest sorted edge list over all relabelings.
std::vector<Edge> canonical_edges(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> perm(n + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Edge> best;
  do {
    std::vector<Edge> e;
    for (auto [a, b] : g.edges()) e.push_back({std::min(perm[a], perm[b]), std::max(perm[a], perm[b])});
    std::sort(e.begin(), e.end());
    if (best.empty() || e < best) best = e;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

// Connected graphs on 2..max_n vertices, one per isomorphism class.
std::vector<Graph> connected_classes(int max_n) {
  std::vector<Graph> out;
  for (int n = 2; n <= max_n; ++n) {
    std::set<std::vector<Edge>> seen;
    for (const auto& g : all_graphs(n))
      if (is_connected(g) && seen.insert(canonical_edges(g)).second) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("isomorphism classes of small connected graphs") {
  const auto classes = connected_classes(5);
  std::map<int, int> by_n;
  for (const auto& g : classes) ++by_n[g.vertex_count()];
  CHECK(by_n == std::map<int, int>{{2, 1}, {3, 2}, {4, 6}, {5, 21}});
}

TEST_CASE("compressed cut polytopes are the K5-minor-free graphs without long induced cycles") {
  for (const auto& g : connected_classes(5)) {
    CAPTURE(write_graph(g));
    const bool expected = !has_minor(g, complete_graph(5)) && max_induced_cycle(g) <= 4;
    CHECK(is_compressed(cut_polytope(g)) == expected);
  }
}

TEST_CASE("compressed exactly when the revlex initial ideal is squarefree") {
  for (const auto& g : connected_classes(5)) {
    CAPTURE(write_graph(g));
    const auto gb = toric_groebner(exponent_matrix(g), TermOrder::degrevlex());
    CHECK(is_squarefree(initial_ideal(gb)) == is_compressed(cut_polytope(g)));
  }
}

TEST_CASE("smooth toric varieties are the C4-minor-free graphs") {
  for (const auto& g : connected_classes(5)) {
    CAPTURE(write_graph(g));
    CHECK(is_smooth(cut_polytope(g)) == !has_minor(g, cycle_graph(4)));
  }
}

TEST_CASE("dimension of the cut polytope is the number of edges") {
  for (const auto& g : connected_classes(5)) {
    CAPTURE(write_graph(g));
    CHECK(dimension(cut_polytope(g)) == static_cast<Eigen::Index>(g.edge_count()));
  }
}
