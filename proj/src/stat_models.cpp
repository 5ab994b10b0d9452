#include "cutkit/stat_models.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <sstream>

#include "cutkit/linalg.hpp"
#include "cutkit/markov.hpp"

namespace cutkit {

std::string format_index(std::uint64_t index, int n) {
  std::string s(n, '0');
  for (int k = 1; k <= n; ++k)
    if (index_bit(index, n, k)) s[k - 1] = '1';
  return s;
}

std::uint64_t parse_index(const std::string& bits) {
  if (bits.empty() || bits.size() > 63) throw InvalidInput("binary index must have 1..63 digits");
  std::uint64_t v = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw InvalidInput("binary index has a non-binary digit: " + bits);
    v = (v << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

namespace {

int parity(std::uint64_t x) { return std::popcount(x) & 1; }

void check_index_width(int n, int limit) {
  if (n < 1 || n > limit) throw InvalidInput("index width out of range: " + std::to_string(n));
}

std::string block_text(VertexMask m) {
  std::string s;
  bool wide = false;
  for (int v : vertices_of(m)) wide = wide || v > 9;
  for (int v : vertices_of(m)) {
    if (wide && !s.empty()) s += ',';
    s += std::to_string(v);
  }
  return s;
}

}  // namespace

// --- binary graph models --------------------------------------------------

ExponentMatrix psi_matrix(const Graph& g) {
  const int n = g.vertex_count();
  check_index_width(n, 16);
  for (int v = 1; v <= n; ++v)
    if (g.degree(v) == 0) throw InvalidInput("binary graph model needs a graph without isolated vertices");
  const std::uint64_t cols = std::uint64_t{1} << n;
  ExponentMatrix m;
  m.entries = IntMatrix::Zero(4 * g.edge_count(), static_cast<Eigen::Index>(cols));
  for (auto [k, l] : g.edges())
    for (const char* ij : {"00", "01", "10", "11"})
      m.row_labels.push_back("b" + std::to_string(k) + (n > 9 ? "," : "") + std::to_string(l) + "_" + ij);
  for (std::uint64_t c = 0; c < cols; ++c) {
    m.col_labels.push_back("p" + format_index(c, n));
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [k, l] = g.edges()[e];
      m.entries(4 * e + 2 * index_bit(c, n, k) + index_bit(c, n, l), static_cast<Eigen::Index>(c)) = 1;
    }
  }
  return m;
}

Partition gamma(std::uint64_t index, int n) {
  check_index_width(n, 20);
  VertexMask b = 0;
  for (int k = 1; k <= n; ++k)
    if (index_bit(index, n, k)) b |= vertex_bit(k);
  return Partition(n + 1, b);
}

std::uint64_t gamma_inv(const Partition& p) {
  // the canonical block never holds n+1, so it is B
  const int n = p.n() - 1;
  std::uint64_t index = 0;
  for (int k = 1; k <= n; ++k)
    if (p.block_a() & vertex_bit(k)) index |= std::uint64_t{1} << (n - k);
  return index;
}

std::string format_covariance_partition(const Partition& p) {
  if (p.block_a() & vertex_bit(1)) return block_text(p.block_a()) + "|" + block_text(p.block_b());
  return block_text(p.block_b()) + "|" + block_text(p.block_a());
}

Binomial relabel_gamma(const Binomial& b, int n) {
  const std::size_t size = std::size_t{1} << n;
  if (b.nvars() != size) throw InvalidInput("binomial does not live over the binary-string variables");
  Monomial plus(size), minus(size);
  for (std::size_t c = 0; c < size; ++c) {
    const std::size_t col = static_cast<std::size_t>(gamma(c, n).key());
    plus.set(col, b.plus[c]);
    minus.set(col, b.minus[c]);
  }
  return {plus, minus};
}

std::vector<std::string> covariance_table(int n) {
  std::vector<std::string> lines;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c)
    lines.push_back("p" + format_index(c, n) + " -> q[" + format_covariance_partition(gamma(c, n)) + "]");
  return lines;
}

CovarianceCheck check_covariance(const Graph& g, const GroebnerOptions& opts) {
  const int n = g.vertex_count();
  CovarianceCheck out;
  const MarkovBasis model = markov_basis(psi_matrix(g), opts);
  const MarkovBasis cut = markov_basis(exponent_matrix(suspend(g)), opts);
  out.model_markov = model.elements;
  out.cut_markov = cut.elements;
  if (!model.complete || !cut.complete) return out;

  std::vector<Binomial> moved;
  for (const auto& b : model.elements) moved.push_back(relabel_gamma(b, n));
  const GroebnerBasis image = buchberger(moved, cut.groebner.order, opts);
  out.equal = image.complete && ideal_equal(image, cut.groebner);
  return out;
}

// --- Fourier coordinates ----------------------------------------------------

namespace {

// In-place Walsh-Hadamard butterfly; the sign pattern (-1)^{popcount(i & j)}
// does not depend on how strings are packed into indices.
RationalVector hadamard(RationalVector v) {
  const Eigen::Index size = v.size();
  if (size == 0 || (size & (size - 1)) != 0) throw InvalidInput("Fourier transform needs a vector of length 2^n");
  for (Eigen::Index h = 1; h < size; h <<= 1)
    for (Eigen::Index i = 0; i < size; i += 2 * h)
      for (Eigen::Index k = i; k < i + h; ++k) {
        Rational a = v(k), b = v(k + h);
        v(k) = a + b;
        v(k + h) = a - b;
      }
  return v;
}

}  // namespace

RationalVector fourier(const RationalVector& p) { return hadamard(p); }

RationalVector fourier_inv(const RationalVector& f) {
  RationalVector p = hadamard(f);
  const Rational scale(1, static_cast<long>(f.size()));
  for (Eigen::Index i = 0; i < p.size(); ++i) p(i) *= scale;
  return p;
}

// --- splits -----------------------------------------------------------------

Split::Split(int n, VertexMask block) : n_(n) {
  if (n < 2 || n > 63) throw InvalidInput("split needs 2..63 taxa");
  const VertexMask all = (VertexMask{1} << n) - 1;
  if (block & ~all) throw InvalidInput("split block has a label outside 1..n");
  if (block & vertex_bit(n)) block = all & ~block;
  if (block == 0) throw InvalidInput("split blocks must both be nonempty");
  c_ = block;
}

VertexMask Split::block_d() const { return ((VertexMask{1} << n_) - 1) & ~c_; }

bool Split::cyclic() const {
  // C must be a run of consecutive bits; n is never in C
  const VertexMask low = c_ >> std::countr_zero(c_);
  return (low & (low + 1)) == 0;
}

namespace {

std::vector<int> parse_block(const std::string& raw) {
  auto bad = [&] { return InvalidInput("bad taxon label in split: '" + raw + "'"); };
  std::string s = raw;
  const bool listed = s.find(',') != std::string::npos;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  std::vector<int> out;
  for (const auto& w : words) {
    if (w.find_first_not_of("0123456789") != std::string::npos) throw bad();
    if (listed || words.size() > 1) {
      out.push_back(std::stoi(w));
    } else {
      for (char c : w) out.push_back(c - '0');
    }
  }
  return out;
}

std::pair<std::vector<int>, std::vector<int>> split_blocks(const std::string& text) {
  const auto bar = text.find('|');
  if (bar == std::string::npos || text.find('|', bar + 1) != std::string::npos)
    throw InvalidInput("split must be written as 'C | D': " + text);
  return {parse_block(text.substr(0, bar)), parse_block(text.substr(bar + 1))};
}

int largest_label(const std::vector<int>& a, const std::vector<int>& b) {
  int m = 0;
  for (int v : a) m = std::max(m, v);
  for (int v : b) m = std::max(m, v);
  return m;
}

}  // namespace

Split parse_split(const std::string& text, int n) {
  auto [c, d] = split_blocks(text);
  if (n == 0) n = largest_label(c, d);
  VertexMask mc = 0, md = 0;
  for (int v : c) {
    if (v < 1 || v > n) throw InvalidInput("taxon label out of range in split: " + text);
    mc |= vertex_bit(v);
  }
  for (int v : d) {
    if (v < 1 || v > n) throw InvalidInput("taxon label out of range in split: " + text);
    md |= vertex_bit(v);
  }
  if ((mc & md) || popcount(mc | md) != n || static_cast<std::size_t>(popcount(mc) + popcount(md)) != c.size() + d.size())
    throw InvalidInput("split blocks must partition 1..n: " + text);
  return Split(n, mc);
}

std::string format_split(const Split& s) {
  auto list = [](VertexMask m) {
    std::string out;
    for (int v : vertices_of(m)) out += (out.empty() ? "" : ",") + std::to_string(v);
    return out;
  };
  return list(s.block_c()) + " | " + list(s.block_d());
}

SplitSystem::SplitSystem(int n_, std::vector<Split> s) : n(n_), splits(std::move(s)) {
  for (std::size_t i = 0; i < splits.size(); ++i) {
    if (splits[i].n() != n) throw InvalidInput("split system mixes taxon counts");
    for (std::size_t j = 0; j < i; ++j)
      if (splits[i] == splits[j]) throw InvalidInput("repeated split: " + format_split(splits[i]));
  }
}

bool SplitSystem::cyclic() const {
  return std::all_of(splits.begin(), splits.end(), [](const Split& s) { return s.cyclic(); });
}

SplitSystem read_split_system(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto [c, d] = split_blocks(line);
    n = std::max(n, largest_label(c, d));
    lines.push_back(line);
  }
  if (lines.empty()) throw InvalidInput("split system file has no splits");
  std::vector<Split> splits;
  for (const auto& l : lines) splits.push_back(parse_split(l, n));
  return SplitSystem(n, std::move(splits));
}

SplitSystem load_split_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open split system file: " + path);
  return read_split_system(in);
}

std::string write_split_system(const SplitSystem& s) {
  std::string out;
  for (const auto& sp : s.splits) out += format_split(sp) + "\n";
  return out;
}

SplitSystem complete_cyclic_system(int n) {
  std::vector<Split> splits;
  for (int k = 1; k < n; ++k)
    for (int l = k; l < n; ++l) {
      VertexMask c = 0;
      for (int v = k; v <= l; ++v) c |= vertex_bit(v);
      splits.emplace_back(n, c);
    }
  return SplitSystem(n, std::move(splits));
}

namespace {

std::uint64_t index_mask(VertexMask block, int n) {
  std::uint64_t m = 0;
  for (int v : vertices_of(block)) m |= std::uint64_t{1} << (n - v);
  return m;
}

}  // namespace

RationalVector split_model_point(const Split& s, const Rational& u0, const Rational& u1) {
  const int n = s.n();
  check_index_width(n, 20);
  const std::uint64_t mc = index_mask(s.block_c(), n);
  RationalVector f(static_cast<Eigen::Index>(std::uint64_t{1} << n));
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << n); ++j) {
    // an even string has equal parities on C and D
    if (parity(j)) f(j) = 0;
    else f(j) = parity(j & mc) ? u1 : u0;
  }
  return f;
}

std::size_t even_column(std::uint64_t index) { return static_cast<std::size_t>(index >> 1); }

std::uint64_t even_index(std::size_t column, int n) {
  (void)n;
  const std::uint64_t high = static_cast<std::uint64_t>(column) << 1;
  return high | static_cast<std::uint64_t>(parity(high));
}

ExponentMatrix jc_matrix(const SplitSystem& sigma) {
  if (sigma.splits.empty()) throw InvalidInput("split system is empty");
  const int n = sigma.n;
  check_index_width(n, 20);
  const std::size_t cols = std::size_t{1} << (n - 1);
  const auto r = static_cast<Eigen::Index>(sigma.size());
  ExponentMatrix m;
  m.entries = IntMatrix::Zero(2 * r, static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 1; i <= r; ++i) {
    m.row_labels.push_back("u" + std::to_string(i) + "_0");
    m.row_labels.push_back("u" + std::to_string(i) + "_1");
  }
  for (std::size_t c = 0; c < cols; ++c) {
    const std::uint64_t j = even_index(c, n);
    m.col_labels.push_back("f" + format_index(j, n));
    for (Eigen::Index i = 0; i < r; ++i)
      m.entries(2 * i + parity(j & index_mask(sigma.splits[i].block_c(), n)), static_cast<Eigen::Index>(c)) = 1;
  }
  return m;
}

Edge split_to_edge(const Split& s) {
  if (!s.cyclic()) throw InvalidInput("split is not cyclic: " + format_split(s));
  const auto v = vertices_of(s.block_c());
  const int k = v.front(), l = v.back();
  const int before = k == 1 ? s.n() : k - 1;
  return {std::min(before, l), std::max(before, l)};
}

Graph graph_of_splits(const SplitSystem& sigma) {
  std::vector<Edge> edges;
  for (const auto& s : sigma.splits) edges.push_back(split_to_edge(s));
  return Graph(sigma.n, edges);
}

std::uint64_t tau(const Partition& p) {
  const int n = p.n();
  std::uint64_t j = 0;
  for (int k = 1; k <= n; ++k)
    if (p.separates(k == 1 ? n : k - 1, k)) j |= std::uint64_t{1} << (n - k);
  return j;
}

Partition tau_inv(std::uint64_t index, int n) {
  if (parity(index)) throw InvalidInput("odd string has no cut: " + format_index(index, n));
  VertexMask side = 0;  // vertex 1 on side 0
  int current = 0;
  for (int k = 2; k <= n; ++k) {
    current ^= index_bit(index, n, k);
    if (current) side |= vertex_bit(k);
  }
  return Partition(n, side);
}

namespace {

// Position of each split's edge in the sorted edge list of G_sigma.
std::vector<int> edge_positions(const SplitSystem& sigma, const Graph& g) {
  std::vector<int> pos;
  for (const auto& s : sigma.splits) {
    auto [a, b] = split_to_edge(s);
    pos.push_back(g.edge_index(a, b));
  }
  return pos;
}

}  // namespace

bool verify_cutsplit(const SplitSystem& sigma) {
  if (!sigma.cyclic()) throw InvalidInput("split system is not cyclic");
  const Graph g = graph_of_splits(sigma);
  const ExponentMatrix cut = exponent_matrix(g);
  const ExponentMatrix jc = jc_matrix(sigma);
  const auto pos = edge_positions(sigma, g);
  const int n = sigma.n;
  std::vector<char> hit(jc.cols(), 0);
  for (Eigen::Index col = 0; col < cut.cols(); ++col) {
    const Partition p(n, static_cast<VertexMask>(col));
    const std::uint64_t j = tau(p);
    if (parity(j)) return false;
    const auto jcol = static_cast<Eigen::Index>(even_column(j));
    if (hit[jcol]++) return false;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      const Eigen::Index e = pos[i];
      // (u0 : u1) = (t : s)
      if (jc.entries(2 * i, jcol) != cut.entries(2 * e + 1, col)) return false;
      if (jc.entries(2 * i + 1, jcol) != cut.entries(2 * e, col)) return false;
    }
  }
  return true;
}

std::vector<std::string> cutsplit_table(const SplitSystem& sigma) {
  const Graph g = graph_of_splits(sigma);
  const auto pos = edge_positions(sigma, g);
  std::vector<int> split_at(g.edge_count());
  for (std::size_t i = 0; i < pos.size(); ++i) split_at[pos[i]] = static_cast<int>(i);
  const ExponentMatrix jc = jc_matrix(sigma);
  const int n = sigma.n;
  std::vector<std::string> lines;
  for (std::uint64_t col = 0; col < (std::uint64_t{1} << (n - 1)); ++col) {
    const Partition p(n, col);
    const std::uint64_t j = tau(p);
    const auto jcol = static_cast<Eigen::Index>(even_column(j));
    std::string line = "q[" + format_partition(p) + "] -> f" + format_index(j, n) + " -> ";
    for (int e = 0; e < g.edge_count(); ++e) {
      const int i = split_at[e];
      if (e) line += '*';
      line += "u" + std::to_string(i + 1) + "_" + (jc.entries(2 * i, jcol) ? "0" : "1");
    }
    lines.push_back(line);
  }
  return lines;
}

// --- trees --------------------------------------------------------------------

namespace {

class TreeParser {
 public:
  explicit TreeParser(const std::string& s) : s_(s) {}

  LeafTree parse() {
    skip();
    if (peek() != '(') fail("tree must start with '('");
    const VertexMask all = node();
    skip();
    if (pos_ < s_.size() && s_[pos_] == ';') ++pos_, skip();
    if (pos_ != s_.size()) fail("trailing characters");
    LeafTree t;
    t.n = popcount(all);
    if (t.n < 2 || all != (VertexMask{1} << t.n) - 1) fail("leaf labels must be exactly 1..n");
    t.clusters = clusters_;
    return t;
  }

 private:
  VertexMask node() {
    ++pos_;  // '('
    VertexMask mask = 0;
    int children = 0;
    while (true) {
      skip();
      VertexMask child;
      if (peek() == '(') {
        child = node();
      } else {
        child = leaf();
      }
      if (mask & child) fail("repeated leaf label");
      mask |= child;
      ++children;
      clusters_.push_back(child);
      skip();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ')') {
        ++pos_;
        break;
      }
      fail("expected ',' or ')'");
    }
    if (children < 2) fail("internal node with a single child");
    return mask;
  }

  VertexMask leaf() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a leaf label");
    const int v = std::stoi(s_.substr(start, pos_ - start));
    if (v < 1 || v > 63) fail("leaf label out of range");
    return vertex_bit(v);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("tree parse error at position " + std::to_string(pos_) + ": " + what);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  std::vector<VertexMask> clusters_;
};

}  // namespace

LeafTree parse_tree(const std::string& text) { return TreeParser(text).parse(); }

SplitSystem splits_of_tree(const LeafTree& t) {
  std::vector<Split> splits;
  const VertexMask all = (VertexMask{1} << t.n) - 1;
  for (VertexMask c : t.clusters) {
    if (c == 0 || c == all) continue;
    Split s(t.n, c);
    if (std::find(splits.begin(), splits.end(), s) == splits.end()) splits.push_back(s);
  }
  std::sort(splits.begin(), splits.end(), [](const Split& a, const Split& b) {
    const int pa = popcount(a.block_c()), pb = popcount(b.block_c());
    return pa != pb ? pa < pb : a.block_c() < b.block_c();
  });
  return SplitSystem(t.n, std::move(splits));
}

}  // namespace cutkit
