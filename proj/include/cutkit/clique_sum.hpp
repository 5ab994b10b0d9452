#pragma once

// Generating sets and Gröbner bases of cut ideals of clique sums, assembled
// from lifted binomials of the two pieces and 2x2 minors across the seam.

#include <string>
#include <vector>

#include "cutkit/groebner.hpp"

namespace cutkit {

/// Two graphs glued along a clique of 1 to 3 vertices. The glued graph keeps
/// g1's labels; g2's remaining vertices follow as n1+1, n1+2, ... in order.
struct SumContext {
  Graph g1, g2, g;
  std::vector<int> sep1, sep2;  // paired separator labels in g1 and g2
  std::vector<int> map1, map2;  // vertex of g1 / g2 -> vertex of g (index 0 unused)

  VertexMask separator() const;
  /// Vertices of g that come only from g1 (side 1) or only from g2 (side 2).
  VertexMask private_vertices(int side) const;
  const Graph& piece(int side) const { return side == 1 ? g1 : g2; }
  const std::vector<int>& embedding(int side) const { return side == 1 ? map1 : map2; }
};

/// sep2 empty means the same labels as sep1.
SumContext make_sum(const Graph& g1, const Graph& g2, std::vector<int> sep1, std::vector<int> sep2 = {});
/// `a,b,c` (same labels on both sides) or `a,b,c=x,y,z`.
SumContext make_sum(const Graph& g1, const Graph& g2, const std::string& separator);

/// A binomial of one piece with its factors paired so that paired factors
/// agree on the separator. Entries are oriented A-blocks (masks over the
/// piece's vertices) whose separator part excludes the last separator vertex.
struct AlignedBinomial {
  std::vector<VertexMask> plus, minus;
};
AlignedBinomial align(const Binomial& f, const SumContext& ctx, int side);

/// f^{EF}: factor i gains E_i (a subset of the other side's private vertices,
/// labels of g) on its A-block, the rest of those vertices on its B-block.
Binomial lift(const AlignedBinomial& f, const std::vector<VertexMask>& e, const SumContext& ctx, int side);

struct ComposedElement {
  Binomial binomial;  // over the partitions of ctx.g
  int side = 0;       // 1 or 2 for lifts, 0 for a quadric across the seam
  std::vector<VertexMask> e;  // the lifting subsets (lifts only)
};

/// All lifts of every element of `f`, deduplicated. Refuses more than
/// `budget` lifted candidates.
std::vector<ComposedElement> lift_all(const std::vector<Binomial>& f, const SumContext& ctx, int side,
                                      std::size_t budget = std::size_t{1} << 20);
/// 2x2 minors of the matrices (q) indexed by (side-2 private subset, side-1
/// private subset), one matrix per separator partition.
std::vector<ComposedElement> quad_set(const SumContext& ctx);

/// Lift(F1) ∪ Lift(F2) ∪ Quad, each element checked against the cut map of g.
std::vector<ComposedElement> compose_generating_set(const SumContext& ctx, const std::vector<Binomial>& f1,
                                                    const std::vector<Binomial>& f2);

/// Integer weight w with w . (lead - tail) > 0 for every element.
std::vector<std::int64_t> orienting_weight(const std::vector<Binomial>& marked);

/// Gröbner basis of I_g from Gröbner bases of the pieces: weights lifted
/// from the pieces, refined by degrevlex on variables ordered by (separator
/// part, side-1 part, side-2 part). Throws std::logic_error if the marked
/// set fails the S-pair test.
GroebnerBasis compose_groebner(const SumContext& ctx, const GroebnerBasis& gb1, const GroebnerBasis& gb2);

/// <M> equals the cut ideal of g.
bool verify_generates(const std::vector<Binomial>& m, const Graph& g, const GroebnerOptions& opts = {});

/// One gluing step: `piece` is attached to the graph built so far.
struct SumStep {
  Graph piece;
  std::vector<int> sep_current, sep_piece;
};
struct ChainResult {
  Graph graph;
  GroebnerBasis groebner;
};
/// Folds compose_groebner over successive clique sums starting from `start`.
ChainResult compose_chain(const Graph& start, const std::vector<SumStep>& steps);

/// Every triangulation of the n-gon (n >= 3) as a chain of triangles glued
/// along boundary edges; distinct edge sets only.
std::vector<std::vector<SumStep>> polygon_triangulations(int n);

}  // namespace cutkit
