#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cutkit/linalg.hpp"
#include "cutkit/polytope.hpp"
#include "oracles.hpp"

using namespace cutkit;
using oracle::ehrhart_volume;
using oracle::random_01_polytope;

namespace {

VPolytope cut(const char* name) { return cut_polytope(make_named(name)); }

}  // namespace

TEST_CASE("cut polytopes") {
  const auto k4 = cut("K4");
  CHECK(k4.ambient_dim() == 6);
  CHECK(k4.size() == 8);
  CHECK(dimension(k4) == 6);
  CHECK(dimension(cut("K3")) == 3);
  CHECK(facets(cut("K3")).facets.size() == 4);
  CHECK(facets(k4).facets.size() == 16);
  CHECK(facets(cut("C4")).facets.size() == 16);
  CHECK(facets(cut("C5")).facets.size() == 26);
  CHECK(facets(cut("K2,3")).facets.size() == 36);
  CHECK(facets(cut("suspend(C4)")).facets.size() == 24);
  CHECK(facets(cut("delete(K5, 1-5)")).facets.size() == 28);
  CHECK(facets(cut("K5")).facets.size() == 56);
  // the lattice of the triangle's cuts has index two in Z^3
  CHECK(determinant(lattice_chart(cut("K3")).basis) == 2);
}

TEST_CASE("facets are valid and tight") {
  for (const char* name : {"C4", "K4", "C5", "path4"}) {
    CAPTURE(name);
    const auto p = cut(name);
    const auto h = facets(p);
    for (std::size_t f = 0; f < h.facets.size(); ++f) {
      int tight = 0;
      for (Eigen::Index v = 0; v < p.size(); ++v) {
        const auto lhs = h.facets[f].normal.dot(p.vertices.col(v));
        CHECK(lhs <= h.facets[f].offset);
        CHECK((lhs == h.facets[f].offset) == static_cast<bool>(h.tight[f][v]));
        tight += lhs == h.facets[f].offset;
      }
      CHECK(tight >= dimension(p));
    }
  }
}

TEST_CASE("normalized volumes") {
  CHECK(normalized_volume(cut("K2")) == 1);
  CHECK(normalized_volume(cut("K3")) == 1);
  CHECK(normalized_volume(cut("C4")) == 8);
  CHECK(normalized_volume(cut("K4")) == 4);
  CHECK(normalized_volume(cut("path4")) == 6);
  CHECK(normalized_volume(cut("C5")) == 52);
  CHECK(normalized_volume(cut("K2,3")) == 72);
  CHECK(normalized_volume(cut("suspend(C4)")) == 64);
  CHECK(normalized_volume(cut("delete(K5, 1-5)")) == 80);
  CHECK(normalized_volume(cut("K5")) == 128);
}

TEST_CASE("volume agrees with lattice point counting") {
  for (const char* name : {"K2", "K3", "path3", "path4", "K1,3", "C4", "path5", "C5"}) {
    CAPTURE(name);
    const auto p = cut(name);
    REQUIRE(dimension(p) <= 5);
    CHECK(normalized_volume(p) == ehrhart_volume(p));
  }
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    const int dim = 2 + static_cast<int>(rng() % 3);
    const int count = std::min(dim + 2 + static_cast<int>(rng() % 4), 1 << dim);
    const auto p = random_01_polytope(rng, dim, count);
    CAPTURE(vertices_csv(p));
    CHECK(normalized_volume(p) == ehrhart_volume(p));
  }
}

TEST_CASE("pulling triangulations") {
  const auto p = cut("C5");
  std::mt19937_64 rng(4);
  bool non_unimodular = false;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const auto t = pulling_triangulation(p, order);
    BigInt total = 0;
    for (const auto& v : t.volumes) total += v;
    CHECK(total == 52);
    for (const auto& s : t.simplices) CHECK(s.size() == 6u);
    non_unimodular = non_unimodular || !is_unimodular(t);
  }
  CHECK(non_unimodular);
  CHECK(is_unimodular(pulling_triangulation(cut("C4"))));
}

TEST_CASE("compressed, simple, smooth") {
  CHECK(is_compressed(cut("K3")));
  CHECK(is_compressed(cut("C4")));
  CHECK(is_compressed(cut("K4")));
  CHECK_FALSE(is_compressed(cut("C5")));
  CHECK_FALSE(is_compressed(cut("K5")));
  CHECK(is_smooth(cut("K2")));
  CHECK(is_smooth(cut("K3")));
  CHECK(is_smooth(cut("path4")));
  CHECK_FALSE(is_simple(cut("C4")));
  CHECK_FALSE(is_smooth(cut("C4")));
  CHECK_FALSE(is_smooth(cut("K4")));
}

TEST_CASE("normality gaps") {
  for (const char* name : {"C4", "K4", "C5"}) {
    CAPTURE(name);
    const auto p = cut(name);
    const auto r = normality_gaps(p, static_cast<int>(dimension(p)) - 1);
    CHECK(r.gaps.empty());
  }
  const auto r = normality_gaps(cut("K2,3"), 3);
  CHECK(r.max_height == 3);
  CHECK(r.gaps.empty());
}

TEST_CASE("faces for contractions and induced subgraphs") {
  for (const char* name : {"K4", "C5", "K2,3", "prism"}) {
    CAPTURE(name);
    const Graph g = make_named(name);
    const auto p = cut_polytope(g);
    auto face_of = [&](const FaceCertificate& c) {
      std::set<std::uint64_t> out;
      for (Eigen::Index v = 0; v < p.size(); ++v) {
        bool zero = true;
        for (auto [i, j] : c.zero_edges) zero = zero && p.vertices(g.edge_index(i, j), v) == 0;
        if (zero) out.insert(static_cast<std::uint64_t>(v));
      }
      return out;
    };
    for (const auto& e : g.edges()) {
      const auto c = face_restriction_contract(g, e);
      const std::set<std::uint64_t> image(c.vertex_map.begin(), c.vertex_map.end());
      CHECK(image.size() == c.vertex_map.size());
      CHECK(image == face_of(c));
      CHECK(face_restriction(g, contract_edge(g, e), MinorKind::Contraction).vertex_map.size() == image.size());
    }
    for (VertexMask keep = 1; keep < (VertexMask{1} << g.vertex_count()); ++keep) {
      const Graph h = induced_subgraph(g, keep);
      if (!is_connected(g) || popcount(keep) < 2) continue;
      FaceCertificate c;
      try {
        c = face_restriction_induced(g, keep);
      } catch (const InvalidInput&) {
        continue;  // a removed piece not attached to the kept vertices
      }
      const std::set<std::uint64_t> image(c.vertex_map.begin(), c.vertex_map.end());
      CHECK(image.size() == (std::size_t{1} << (popcount(keep) - 1)));
      CHECK(image == face_of(c));
      // the kept edges read off the cut of h
      const auto kept = vertices_of(keep);
      for (std::size_t key = 0; key < c.vertex_map.size(); ++key) {
        const Partition ph(h.vertex_count(), key), pg(g.vertex_count(), c.vertex_map[key]);
        for (auto [a, b] : h.edges()) CHECK(ph.separates(a, b) == pg.separates(kept[a - 1], kept[b - 1]));
      }
    }
  }
}

TEST_CASE("exports") {
  const auto p = cut("K3");
  CHECK(vertices_csv(p) == "0,0,0\n1,1,0\n1,0,1\n0,1,1\n");
  const auto text = facets_text(facets(p));
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);
}
