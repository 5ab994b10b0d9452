#pragma once

// Lattice polytopes given by vertices: facets, pulling triangulations,
// volume, compressedness, smoothness and normality gaps. All lattice
// notions refer to the affine lattice spanned by vertex differences.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cutkit/graph.hpp"
#include "cutkit/types.hpp"

namespace cutkit {

/// Vertices as the columns of an integer matrix.
struct VPolytope {
  IntMatrix vertices;

  Eigen::Index ambient_dim() const { return vertices.rows(); }
  Eigen::Index size() const { return vertices.cols(); }
};

/// normal . x <= offset
struct Facet {
  IntVector normal;
  std::int64_t offset = 0;
};

/// Facets in ambient coordinates (relative to the affine hull when the
/// polytope is not full-dimensional) with vertex incidences.
struct HPolytope {
  std::vector<Facet> facets;
  /// tight[f][v]: vertex v lies on facet f.
  std::vector<std::vector<char>> tight;
};

struct Triangulation {
  std::vector<std::vector<int>> simplices;  // vertex indices, dim + 1 each
  std::vector<int> order;                   // pulling order
  std::vector<BigInt> volumes;              // normalized volume per simplex
};

/// Integer coordinates of a polytope in its affine lattice: vertex v maps to
/// coords.col(v) in Z^dim, with vertex 0 at the origin.
struct LatticeChart {
  BigMatrix basis;  // dim x ambient, Hermite form of the difference lattice
  IntMatrix coords;
  Eigen::Index dim() const { return coords.rows(); }
};

VPolytope cut_polytope(const Graph& g);
LatticeChart lattice_chart(const VPolytope& p);
Eigen::Index dimension(const VPolytope& p);

/// Double description on the homogenized cone; dim(p) <= 10.
HPolytope facets(const VPolytope& p);

/// Recursive pulling triangulation; `order` lists vertex indices, earliest
/// pulled first (empty: 0, 1, 2, ...).
Triangulation pulling_triangulation(const VPolytope& p, std::vector<int> order = {});
bool is_unimodular(const Triangulation& t);
BigInt normalized_volume(const VPolytope& p);

/// Every facet has lattice width one.
bool is_compressed(const VPolytope& p);
bool is_simple(const VPolytope& p);
/// Simple, and the primitive edge directions at every vertex form a lattice basis.
bool is_smooth(const VPolytope& p);

struct GapPoint {
  int height = 0;
  std::vector<std::int64_t> chart;    // lattice coordinates
  std::vector<std::int64_t> ambient;  // the point of height * P itself
};

struct NormalityReport {
  int max_height = 0;
  /// Lattice points of the cone over the polytope that are not sums of
  /// `height` vertices, up to max_height.
  std::vector<GapPoint> gaps;
  /// Gap points per height.
  std::map<int, int> per_height;
};

/// Semigroup gaps up to `max_height` (>= 2): every lattice point of the cone
/// over a triangulation simplex is a fundamental-parallelepiped point plus
/// vertices, so only translates of non-members need to be examined.
NormalityReport normality_gaps(const VPolytope& p, int max_height);

/// Face of Cut(g) cut out by x_e = 0 for the listed edges, with the
/// vertex map from Cut(h) onto it (indexed by canonical partition keys).
struct FaceCertificate {
  std::vector<Edge> zero_edges;
  std::vector<std::uint64_t> vertex_map;
};
enum class MinorKind { Contraction, Induced };
FaceCertificate face_restriction_contract(const Graph& g, Edge e);
FaceCertificate face_restriction_induced(const Graph& g, VertexMask keep);
/// Finds the edge / vertex subset relating h to g; InvalidInput when none.
FaceCertificate face_restriction(const Graph& g, const Graph& h, MinorKind kind);

/// Vertex matrix as CSV (one vertex per row).
std::string vertices_csv(const VPolytope& p);
/// `a1 ... ak <= b` per facet.
std::string facets_text(const HPolytope& h);

}  // namespace cutkit
