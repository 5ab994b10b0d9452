#include "cutkit/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace cutkit {

// --- Graph ----------------------------------------------------------------

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw InvalidInput("vertex count out of range: " + std::to_string(n));
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 1 || e.second > n) throw InvalidInput("edge endpoint outside 1..n");
    if (e.first == e.second) throw InvalidInput("loops are not allowed");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw InvalidInput("repeated edge");
  edges_ = std::move(edges);
  adj_.assign(n, 0);
  for (auto [i, j] : edges_) {
    adj_[i - 1] |= vertex_bit(j);
    adj_[j - 1] |= vertex_bit(i);
  }
}

bool Graph::has_edge(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) return false;
  return (adj_[i - 1] & vertex_bit(j)) != 0;
}

int Graph::edge_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{i, j});
  if (it == edges_.end() || *it != Edge{i, j}) return -1;
  return static_cast<int>(it - edges_.begin());
}

int Graph::degree(int v) const { return popcount(adj_[v - 1]); }

VertexMask Graph::all_vertices() const {
  return n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
}

// --- Partition ------------------------------------------------------------

Partition::Partition(int n, VertexMask block) : n_(n) {
  if (n < 1 || n > Graph::kMaxVertices) throw InvalidInput("partition of an invalid vertex count");
  const VertexMask all = n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  if (block & ~all) throw InvalidInput("partition block outside 1..n");
  a_ = (block & vertex_bit(n)) ? (all & ~block) : block;
}

VertexMask Partition::block_b() const {
  const VertexMask all = n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
  return all & ~a_;
}

bool Partition::separates(int i, int j) const {
  return ((a_ >> (i - 1)) & 1) != ((a_ >> (j - 1)) & 1);
}

std::vector<int> vertices_of(VertexMask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

VertexMask mask_of(const std::vector<int>& vertices) {
  VertexMask m = 0;
  for (int v : vertices) m |= vertex_bit(v);
  return m;
}

int popcount(VertexMask m) { return std::popcount(m); }

namespace {

std::string format_block(VertexMask m, int n) {
  std::string out;
  bool first = true;
  for (int v : vertices_of(m)) {
    if (!first && n > 9) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out;
}

}  // namespace

std::string format_partition(const Partition& p) {
  VertexMask a = p.block_a(), b = p.block_b();
  const int ca = popcount(a), cb = popcount(b);
  bool a_first = ca < cb || (ca == cb && std::countr_zero(a) < std::countr_zero(b));
  if (!a_first) std::swap(a, b);
  return format_block(a, p.n()) + "|" + format_block(b, p.n());
}

Partition parse_partition(const std::string& text, int n) {
  auto bar = text.find('|');
  if (bar == std::string::npos) throw InvalidInput("partition without '|': " + text);
  auto parse_block = [&](const std::string& s) {
    VertexMask m = 0;
    bool commas = s.find(',') != std::string::npos || n > 9;
    std::string tok;
    auto flush = [&] {
      if (tok.empty()) return;
      int v = std::stoi(tok);
      if (v < 1 || v > n) throw InvalidInput("vertex out of range in partition: " + text);
      if (m & vertex_bit(v)) throw InvalidInput("repeated vertex in partition: " + text);
      m |= vertex_bit(v);
      tok.clear();
    };
    for (char c : s) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (c == ',') {
        flush();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        tok += c;
        if (!commas) flush();
      } else {
        throw InvalidInput("bad character in partition: " + text);
      }
    }
    flush();
    return m;
  };
  VertexMask a = parse_block(text.substr(0, bar));
  VertexMask b = parse_block(text.substr(bar + 1));
  const VertexMask all = n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  if ((a & b) || (a | b) != all) throw InvalidInput("blocks do not partition 1..n: " + text);
  return Partition(n, a);
}

// --- construction -----------------------------------------------------------

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidInput("cycles need at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(1, n);
  return Graph(n, e);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph complete_multipartite(const std::vector<int>& parts) {
  std::vector<int> block;
  int n = 0;
  for (std::size_t b = 0; b < parts.size(); ++b) {
    for (int k = 0; k < parts[b]; ++k) block.push_back(static_cast<int>(b));
    n += parts[b];
  }
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (block[i - 1] != block[j - 1]) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph suspend(const Graph& g) {
  const int n = g.vertex_count();
  auto e = g.edges();
  for (int i = 1; i <= n; ++i) e.emplace_back(i, n + 1);
  return Graph(n + 1, e);
}

namespace {

class NameParser {
 public:
  explicit NameParser(std::string s) : s_(std::move(s)) {}

  Graph parse() {
    Graph g = graph();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidInput("cannot parse graph spec '" + s_ + "' at position " + std::to_string(pos_) + ": " + why);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(const std::string& word) {
    skip_ws();
    if (s_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    int v = std::stoi(s_.substr(start, pos_ - start));
    if (v < 1) fail("parameters must be >= 1");
    return v;
  }
  // After 'K<n>', a ',' directly followed by digits that are not an edge `i-j`.
  bool more_parts() {
    if (pos_ >= s_.size() || s_[pos_] != ',') return false;
    std::size_t p = pos_ + 1;
    if (p >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[p]))) return false;
    while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
    return p >= s_.size() || s_[p] != '-';
  }

  Graph graph() {
    if (accept("suspend")) {
      expect('(');
      Graph inner = graph();
      expect(')');
      return suspend(inner);
    }
    if (accept("delete")) {
      expect('(');
      Graph inner = graph();
      expect(',');
      int i = number();
      expect('-');
      int j = number();
      expect(')');
      return delete_edge(inner, {i, j});
    }
    if (accept("prism")) {
      std::vector<Edge> e{{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {1, 4}, {2, 5}, {3, 6}};
      return Graph(6, e);
    }
    if (accept("path")) return path_graph(number());
    if (accept("C")) return cycle_graph(number());
    if (accept("K")) {
      std::vector<int> parts{number()};
      while (more_parts()) {
        ++pos_;
        parts.push_back(number());
      }
      if (parts.size() == 1) return complete_graph(parts[0]);
      return complete_multipartite(parts);
    }
    fail("unknown graph name");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph make_named(const std::string& spec) { return NameParser(spec).parse(); }

Graph read_graph(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (n < 0) {
      if (first != "n" || !(ls >> n) || n < 1)
        throw InvalidInput("graph file line " + std::to_string(lineno) + ": expected 'n <count>'");
      continue;
    }
    int i = 0, j = 0;
    try {
      i = std::stoi(first);
    } catch (const std::exception&) {
      throw InvalidInput("graph file line " + std::to_string(lineno) + ": expected 'i j'");
    }
    if (!(ls >> j)) throw InvalidInput("graph file line " + std::to_string(lineno) + ": expected 'i j'");
    edges.emplace_back(i, j);
  }
  if (n < 0) throw InvalidInput("graph file has no 'n <count>' header");
  return Graph(n, edges);
}

Graph load_graph(const std::string& path_or_spec) {
  std::ifstream f(path_or_spec);
  if (f) return read_graph(f);
  return make_named(path_or_spec);
}

std::string write_graph(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.vertex_count() << "\n";
  for (auto [i, j] : g.edges()) os << i << " " << j << "\n";
  return os.str();
}

// --- cuts and minors ----------------------------------------------------------

std::vector<Edge> cut_edges(const Graph& g, const Partition& p) {
  if (p.n() != g.vertex_count()) throw InvalidInput("partition does not match the graph");
  std::vector<Edge> out;
  for (auto e : g.edges())
    if (p.separates(e.first, e.second)) out.push_back(e);
  return out;
}

Graph delete_edge(const Graph& g, Edge e) {
  if (g.edge_index(e.first, e.second) < 0) throw InvalidInput("not an edge of the graph");
  auto edges = g.edges();
  if (e.first > e.second) std::swap(e.first, e.second);
  edges.erase(std::find(edges.begin(), edges.end(), e));
  return Graph(g.vertex_count(), edges);
}

Graph contract_edge(const Graph& g, Edge e) {
  if (g.edge_index(e.first, e.second) < 0) throw InvalidInput("not an edge of the graph");
  auto [keep, gone] = std::minmax(e.first, e.second);
  auto relabel = [&](int v) {
    if (v == gone) v = keep;
    return v > gone ? v - 1 : v;
  };
  std::set<Edge> out;
  for (auto [i, j] : g.edges()) {
    int a = relabel(i), b = relabel(j);
    if (a == b) continue;
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return Graph(g.vertex_count() - 1, {out.begin(), out.end()});
}

Graph induced_subgraph(const Graph& g, VertexMask vertices) {
  if (vertices == 0) throw InvalidInput("induced subgraph on an empty vertex set");
  if (vertices & ~g.all_vertices()) throw InvalidInput("vertex set not contained in the graph");
  std::vector<int> label(g.vertex_count() + 1, 0);
  int k = 0;
  for (int v : vertices_of(vertices)) label[v] = ++k;
  std::vector<Edge> e;
  for (auto [i, j] : g.edges())
    if (label[i] && label[j]) e.emplace_back(label[i], label[j]);
  return Graph(k, e);
}

Graph delete_vertex(const Graph& g, int v) { return induced_subgraph(g, g.all_vertices() & ~vertex_bit(v)); }

namespace {

VertexMask component_of(const Graph& g, VertexMask allowed, int start) {
  VertexMask seen = vertex_bit(start), frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    for (int v : vertices_of(frontier)) next |= g.neighbors(v) & allowed;
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

std::vector<VertexMask> components(const Graph& g, VertexMask allowed) {
  std::vector<VertexMask> out;
  VertexMask left = allowed;
  while (left) {
    VertexMask c = component_of(g, allowed, std::countr_zero(left) + 1);
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return components(g, g.all_vertices()).size() == 1;
}

bool has_minor(const Graph& g, const Graph& h) {
  const int n = g.vertex_count(), k = h.vertex_count();
  if (n > 8) throw BudgetExceeded("has_minor: host graph exceeds the 8-vertex search budget");
  if (k == 0) return true;
  if (k > n || h.edge_count() > g.edge_count()) return false;

  std::vector<int> branch(n + 1, 0);  // 0 = deleted, else h-vertex
  std::vector<int> counts(k + 1, 0);
  std::function<bool(int, int)> search = [&](int v, int empty) -> bool {
    if (empty > n - v + 1) return false;
    if (v > n) {
      std::vector<VertexMask> sets(k + 1, 0);
      for (int u = 1; u <= n; ++u)
        if (branch[u]) sets[branch[u]] |= vertex_bit(u);
      for (int b = 1; b <= k; ++b)
        if (component_of(g, sets[b], std::countr_zero(sets[b]) + 1) != sets[b]) return false;
      for (auto [x, y] : h.edges()) {
        bool linked = false;
        for (int u : vertices_of(sets[x]))
          if (g.neighbors(u) & sets[y]) {
            linked = true;
            break;
          }
        if (!linked) return false;
      }
      return true;
    }
    for (int b = 0; b <= k; ++b) {
      branch[v] = b;
      int e = empty;
      if (b && counts[b]++ == 0) --e;
      bool ok = search(v + 1, e);
      if (b) --counts[b];
      if (ok) return true;
    }
    branch[v] = 0;
    return false;
  };
  return search(1, k);
}

bool is_series_parallel(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<VertexMask> adj(n + 1, 0);
  for (int v = 1; v <= n; ++v) adj[v] = g.neighbors(v);
  VertexMask alive = g.all_vertices();
  bool progress = true;
  while (alive && progress) {
    progress = false;
    for (int v : vertices_of(alive)) {
      if (!(alive & vertex_bit(v))) continue;
      const int d = popcount(adj[v]);
      if (d > 2) continue;
      if (d == 2) {
        auto nb = vertices_of(adj[v]);
        adj[nb[0]] |= vertex_bit(nb[1]);
        adj[nb[1]] |= vertex_bit(nb[0]);
      }
      for (int u : vertices_of(adj[v])) adj[u] &= ~vertex_bit(v);
      adj[v] = 0;
      alive &= ~vertex_bit(v);
      progress = true;
    }
  }
  return alive == 0;
}

int max_induced_cycle(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 10) throw BudgetExceeded("max_induced_cycle: graph exceeds the 10-vertex budget");
  int best = 0;
  for (VertexMask s = 1; s < (VertexMask{1} << n); ++s) {
    const int size = popcount(s);
    if (size < 3 || size <= best) continue;
    bool all_two = true;
    for (int v : vertices_of(s))
      if (popcount(g.neighbors(v) & s) != 2) {
        all_two = false;
        break;
      }
    if (all_two && component_of(g, s, std::countr_zero(s) + 1) == s) best = size;
  }
  return best;
}

bool is_clique(const Graph& g, VertexMask s) {
  for (int v : vertices_of(s))
    if ((g.neighbors(v) & s) != (s & ~vertex_bit(v))) return false;
  return true;
}

// --- clique sums ----------------------------------------------------------

namespace {

void subsets_of_size(VertexMask universe, int size, const std::function<bool(VertexMask)>& visit) {
  auto items = vertices_of(universe);
  std::vector<int> idx(size);
  std::function<bool(int, int, VertexMask)> rec = [&](int start, int depth, VertexMask acc) -> bool {
    if (depth == size) return visit(acc);
    for (int i = start; i < static_cast<int>(items.size()); ++i)
      if (rec(i + 1, depth + 1, acc | vertex_bit(items[i]))) return true;
    return false;
  };
  rec(0, 0, 0);
}

int decompose_rec(const Graph& g, VertexMask w, CliqueSumDecomposition& out) {
  for (int size = 0; size <= 3 && size < popcount(w); ++size) {
    VertexMask piece1 = 0, sep = 0;
    subsets_of_size(w, size, [&](VertexMask s) {
      if (!is_clique(g, s)) return false;
      auto comps = components(g, w & ~s);
      if (comps.size() < 2) return false;
      VertexMask smallest = comps[0];
      for (auto c : comps)
        if (popcount(c) < popcount(smallest)) smallest = c;
      piece1 = smallest | s;
      sep = s;
      return true;
    });
    if (piece1) {
      VertexMask piece2 = (w & ~piece1) | sep;
      int left = decompose_rec(g, piece1, out);
      int right = decompose_rec(g, piece2, out);
      out.separators.push_back(sep);
      out.tree.push_back({-1, left, right, sep});
      return static_cast<int>(out.tree.size()) - 1;
    }
  }
  out.pieces.push_back({w, induced_subgraph(g, w)});
  out.tree.push_back({static_cast<int>(out.pieces.size()) - 1, -1, -1, 0});
  return static_cast<int>(out.tree.size()) - 1;
}

}  // namespace

CliqueSumDecomposition clique_sum_decompose(const Graph& g) {
  CliqueSumDecomposition d;
  if (g.vertex_count() == 0) return d;
  decompose_rec(g, g.all_vertices(), d);
  return d;
}

Graph recombine(const CliqueSumDecomposition& d, int n) {
  std::set<Edge> edges;
  VertexMask covered = 0;
  for (const auto& piece : d.pieces) {
    auto labels = vertices_of(piece.vertices);
    covered |= piece.vertices;
    for (auto [i, j] : piece.graph.edges()) edges.insert({labels[i - 1], labels[j - 1]});
  }
  const VertexMask all = n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  if (covered != all) throw InvalidInput("decomposition does not cover the vertex set");
  return Graph(n, {edges.begin(), edges.end()});
}

std::vector<Graph> all_graphs(int n) {
  std::vector<Edge> slots;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) slots.emplace_back(i, j);
  if (slots.size() > 21) throw BudgetExceeded("all_graphs: too many vertices");
  std::vector<Graph> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots.size()); ++m) {
    std::vector<Edge> e;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (m >> k & 1) e.push_back(slots[k]);
    out.emplace_back(n, e);
  }
  return out;
}

}  // namespace cutkit
