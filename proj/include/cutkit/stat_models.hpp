#pragma once

// Binary graph models and their identification with cut ideals of the
// suspension; Jukes-Cantor models of split systems in Fourier coordinates and
// their identification with cut ideals of the associated graph.
//
// Binary strings i_1 ... i_n are stored as column indices with i_1 the most
// significant bit, so columns run 00...0, 00...1, ... in lexicographic order.

#include <iosfwd>
#include <string>
#include <vector>

#include "cutkit/cut_model.hpp"
#include "cutkit/groebner.hpp"

namespace cutkit {

/// i_k of the string with column index `index`.
inline int index_bit(std::uint64_t index, int n, int k) { return static_cast<int>((index >> (n - k)) & 1u); }
std::string format_index(std::uint64_t index, int n);
std::uint64_t parse_index(const std::string& bits);

// --- binary graph models --------------------------------------------------

/// 4|E| x 2^n matrix: column p_i has b^{kl}_{i_k i_l} for every edge {k,l}.
/// Rows b^e_00, b^e_01, b^e_10, b^e_11 per edge.
ExponentMatrix psi_matrix(const Graph& g);

/// Partition of [n+1] with n+1 in A and k in B iff i_k = 1.
Partition gamma(std::uint64_t index, int n);
std::uint64_t gamma_inv(const Partition& p);
/// `A|B` with the block holding vertex 1 first, e.g. `124|3`, `1|234`.
std::string format_covariance_partition(const Partition& p);
/// Moves a binomial over the p-variables to the cut variables of the suspension.
Binomial relabel_gamma(const Binomial& b, int n);
/// `p011 -> q[14|23]`, one line per binary string.
std::vector<std::string> covariance_table(int n);

struct CovarianceCheck {
  bool equal = false;
  std::vector<Binomial> model_markov;  // minimal generators of ker psi_G
  std::vector<Binomial> cut_markov;    // minimal generators of I of the suspension
};
/// gamma(ker psi_G) == I_{suspend(g)}, compared as ideals.
CovarianceCheck check_covariance(const Graph& g, const GroebnerOptions& opts = {});
inline bool verify_covariance(const Graph& g) { return check_covariance(g).equal; }

// --- Fourier coordinates ----------------------------------------------------

/// f_j = sum_i (-1)^{i.j} p_i.
RationalVector fourier(const RationalVector& p);
/// p_i = 2^-n sum_j (-1)^{i.j} f_j.
RationalVector fourier_inv(const RationalVector& f);

// --- splits -----------------------------------------------------------------

/// Bipartition {C, D} of [n] with n in D; both blocks nonempty.
class Split {
 public:
  Split() = default;
  /// Either block may be given.
  Split(int n, VertexMask block);

  int n() const { return n_; }
  VertexMask block_c() const { return c_; }
  VertexMask block_d() const;
  bool trivial() const { return popcount(c_) == 1 || popcount(c_) == n_ - 1; }
  /// C = [k, l] for some 1 <= k <= l < n.
  bool cyclic() const;

  bool operator==(const Split&) const = default;
  auto operator<=>(const Split&) const = default;

 private:
  int n_ = 0;
  VertexMask c_ = 0;
};

/// `C | D` with comma-separated labels (a block without commas is read digit
/// by digit). n is the largest label unless given.
Split parse_split(const std::string& text, int n = 0);
std::string format_split(const Split& s);

/// Ordered, duplicate-free list of splits of [n]; parameters u^i follow
/// this order (1-based).
struct SplitSystem {
  int n = 0;
  std::vector<Split> splits;

  SplitSystem() = default;
  SplitSystem(int n, std::vector<Split> splits);
  std::size_t size() const { return splits.size(); }
  bool cyclic() const;
};

/// One split per non-empty, non-comment line; n inferred from all lines.
SplitSystem read_split_system(std::istream& in);
SplitSystem load_split_system(const std::string& path);
std::string write_split_system(const SplitSystem& s);
/// All n(n-1)/2 cyclic splits, C = [k, l] ordered by (k, l).
SplitSystem complete_cyclic_system(int n);

/// Fourier coordinates of the one-split model: 0 off the even strings, u0
/// when both block sums are even, u1 when both are odd.
RationalVector split_model_point(const Split& s, const Rational& u0, const Rational& u1);

/// 2r x 2^(n-1) matrix over u^i_0, u^i_1 (rows `u<i>_0`, `u<i>_1`); the
/// column of an even string j selects u^i_{sum of j over C_i mod 2}.
ExponentMatrix jc_matrix(const SplitSystem& sigma);
/// Column index (among even strings) of a full index, and back.
std::size_t even_column(std::uint64_t index);
std::uint64_t even_index(std::size_t column, int n);

/// C = [k, l] becomes {k-1, l}, reading 0 as n. Throws for non-cyclic splits.
Edge split_to_edge(const Split& s);
Graph graph_of_splits(const SplitSystem& sigma);

/// j_k = 1 iff the cyclic edge {k-1, k} (0 read as n) crosses the cut.
std::uint64_t tau(const Partition& p);
/// Throws InvalidInput on odd strings.
Partition tau_inv(std::uint64_t index, int n);

/// Column-by-column agreement of the parametrization of JC_sigma with the
/// cut map of G_sigma under tau and (u^i_0 : u^i_1) = (t_e : s_e).
bool verify_cutsplit(const SplitSystem& sigma);
/// `q[4|123] -> f1001 -> u4_0*u2_0*...`, parameters listed in edge order of
/// G_sigma, one line per cut in column order.
std::vector<std::string> cutsplit_table(const SplitSystem& sigma);

// --- trees --------------------------------------------------------------------

/// Unrooted tree given as nested leaf lists, e.g. `((1,2),3,(4,5))`.
struct LeafTree {
  int n = 0;
  /// Leaf sets below each edge of the rooted reading; a root of degree two
  /// yields the same split twice, which splits_of_tree merges.
  std::vector<VertexMask> clusters;
};
LeafTree parse_tree(const std::string& text);
/// One split per tree edge, ordered by (|C|, C).
SplitSystem splits_of_tree(const LeafTree& t);

}  // namespace cutkit
