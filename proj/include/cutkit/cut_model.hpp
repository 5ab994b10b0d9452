#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cutkit/binomial.hpp"
#include "cutkit/graph.hpp"

namespace cutkit {

/// Integer matrix with labeled rows and columns; the columns are the
/// exponent vectors of a monomial map. Every matrix built here has constant
/// column sums, i.e. the total-degree grading is implied.
struct ExponentMatrix {
  IntMatrix entries;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  Eigen::Index rows() const { return entries.rows(); }
  Eigen::Index cols() const { return entries.cols(); }
  /// A * u for an exponent vector over the columns.
  IntVector image(const Monomial& u) const;
  bool in_kernel(const Binomial& b) const;
  /// `label,label,...` header followed by one CSV row per matrix row.
  std::string to_csv() const;
};

/// Column and row variables of the cut map of a graph: q[A|B] for the
/// 2^(n-1) canonical partitions (column index = canonical block-A mask),
/// then s_e, t_e per edge in edge order.
class VariableSet {
 public:
  explicit VariableSet(const Graph& g);

  const Graph& graph() const { return g_; }
  int vertex_count() const { return g_.vertex_count(); }
  std::size_t size() const { return names_.size(); }
  Partition partition(std::size_t column) const { return Partition(g_.vertex_count(), column); }
  std::size_t column(const Partition& p) const { return static_cast<std::size_t>(p.key()); }
  const std::vector<std::string>& names() const { return names_; }
  std::vector<std::string> row_names() const;

 private:
  Graph g_;
  std::vector<std::string> names_;
};

/// Exponent vector over the s/t rows (s_e before t_e, edges in order).
std::vector<int> cut_monomial(const Graph& g, const Partition& p);
/// 0/1 vector over the edges: 1 exactly on crossing edges.
std::vector<int> cut_vector(const Graph& g, const Partition& p);
/// 2|E| x 2^(n-1) matrix of all cut monomials.
ExponentMatrix exponent_matrix(const Graph& g);

/// Sign convention for display: the side whose ascending list of variable
/// indices (with multiplicity) is lexicographically smaller comes first.
Binomial display_form(const Binomial& b);

/// `lhs - rhs` with factors `name^k` joined by `*`, in column order.
std::string format_binomial(const Binomial& b, const std::vector<std::string>& names);
/// Inverse of format_binomial for an arbitrary label set.
Binomial parse_binomial(const std::string& text, const std::vector<std::string>& names);

/// Cut binomial text: `q[A|B]^k * ... - q[C|D]^m * ...`.
std::string print_binomial(const Binomial& b, const VariableSet& vars);
/// Accepts either orientation of each partition.
Binomial parse_binomial(const std::string& text, const VariableSet& vars);

/// `{lhs: [[var, exp]...], rhs: [[var, exp]...]}`.
nlohmann::json binomial_to_json(const Binomial& b, const std::vector<std::string>& names);
Binomial binomial_from_json(const nlohmann::json& j, const std::vector<std::string>& names);

}  // namespace cutkit
