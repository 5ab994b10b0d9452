#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cutkit/types.hpp"

namespace cutkit {

using VertexMask = std::uint64_t;
using Edge = std::pair<int, int>;

inline VertexMask vertex_bit(int v) { return VertexMask{1} << (v - 1); }

/// Simple undirected graph on vertices 1..n with a lexicographically sorted
/// edge list. Immutable once constructed.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  /// Validates and sorts; edges may be given with either endpoint first.
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int i, int j) const;
  /// Position of {i,j} in the sorted edge list, or -1.
  int edge_index(int i, int j) const;
  VertexMask neighbors(int v) const { return adj_[v - 1]; }
  int degree(int v) const;
  VertexMask all_vertices() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adj_;
};

/// Unordered bipartition A|B of 1..n, stored canonically: B holds vertex n.
class Partition {
 public:
  Partition() = default;
  /// Accepts either block; the mask is canonicalized.
  Partition(int n, VertexMask block);

  int n() const { return n_; }
  /// Canonical block A (never contains n); doubles as the column key.
  VertexMask block_a() const { return a_; }
  VertexMask block_b() const;
  std::uint64_t key() const { return a_; }
  bool separates(int i, int j) const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  int n_ = 0;
  VertexMask a_ = 0;
};

std::vector<int> vertices_of(VertexMask m);
VertexMask mask_of(const std::vector<int>& vertices);
int popcount(VertexMask m);

/// Blocks as text, smaller block first (ties: the block holding the smallest
/// vertex first): "1|234", "|1234", "12|34".
std::string format_partition(const Partition& p);
/// Parses "A|B" with digit-concatenated or comma-separated blocks.
Partition parse_partition(const std::string& text, int n);

// --- construction -------------------------------------------------------

/// `K<n>`, `C<n>`, `K<a>,<b>[,<c>...]`, `path<n>`, `prism`,
/// `suspend(<spec>)`, `delete(<spec>, i-j)`.
Graph make_named(const std::string& spec);
Graph suspend(const Graph& g);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_multipartite(const std::vector<int>& parts);

/// Graph file: `n <count>` then `i j` per line; `#` starts a comment.
Graph read_graph(std::istream& in);
Graph load_graph(const std::string& path_or_spec);
std::string write_graph(const Graph& g);

// --- cuts and minors ----------------------------------------------------

std::vector<Edge> cut_edges(const Graph& g, const Partition& p);
Graph delete_edge(const Graph& g, Edge e);
Graph contract_edge(const Graph& g, Edge e);
/// Induced subgraph on `vertices`, relabeled order-preservingly to 1..k.
Graph induced_subgraph(const Graph& g, VertexMask vertices);
Graph delete_vertex(const Graph& g, int v);

bool is_connected(const Graph& g);
/// Exhaustive branch-set search; g limited to 8 vertices.
bool has_minor(const Graph& g, const Graph& h);
/// Treewidth-2 reduction (pendant removal, series smoothing, parallel merge).
bool is_series_parallel(const Graph& g);
/// Length of the longest chordless cycle, 0 for forests; g limited to 10 vertices.
int max_induced_cycle(const Graph& g);
bool is_clique(const Graph& g, VertexMask s);

// --- clique sums --------------------------------------------------------

struct CliqueSumDecomposition {
  struct Piece {
    VertexMask vertices = 0;  // labels in the original graph
    Graph graph;              // induced, relabeled to 1..k in increasing order
  };
  struct Node {
    int piece = -1;  // leaf when >= 0
    int left = -1, right = -1;
    VertexMask separator = 0;
  };
  std::vector<Piece> pieces;
  std::vector<VertexMask> separators;
  std::vector<Node> tree;  // root is the last node
};

/// Greedy split at clique separators of size 0..3, smallest separators and
/// smallest pieces first.
CliqueSumDecomposition clique_sum_decompose(const Graph& g);
/// Union of the pieces, relabeled back into the original vertex set.
Graph recombine(const CliqueSumDecomposition& d, int n);

/// All graphs on exactly n vertices (edge subsets of K_n), no isomorph reduction.
std::vector<Graph> all_graphs(int n);

}  // namespace cutkit
