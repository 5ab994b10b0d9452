// cutkit: command-line front end for cut ideals, cut polytopes, clique sums
// and the binary / Jukes-Cantor model identifications.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cutkit/clique_sum.hpp"
#include "cutkit/markov.hpp"
#include "cutkit/polytope.hpp"
#include "cutkit/stat_models.hpp"

using namespace cutkit;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kError = 1, kPartial = 2, kMismatch = 3 };

struct Common {
  std::string format = "text";
  int threads = 1;
  std::size_t budget_pairs = 0;
  std::string output;

  GroebnerOptions options() const {
    GroebnerOptions o;
    o.threads = threads;
    o.max_pairs = budget_pairs;
    if (const char* env = std::getenv("CUTKIT_BUDGET")) {
      try {
        o.max_pairs = std::stoull(env);
      } catch (const std::exception&) {
        throw InvalidInput(std::string("CUTKIT_BUDGET is not a number: ") + env);
      }
    }
    return o;
  }
  bool json_out() const { return format == "json"; }
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::ostream* out_stream(const Common& c, std::ofstream& file) {
  if (c.output.empty()) return &std::cout;
  file.open(c.output);
  if (!file) throw InvalidInput("cannot write " + c.output);
  return &file;
}

json histogram_json(const std::map<int, int>& h) {
  json j = json::object();
  for (auto [d, c] : h) j[std::to_string(d)] = c;
  return j;
}

std::string histogram_text(const std::map<int, int>& h) {
  std::string s = "{";
  for (auto [d, c] : h) s += (s.size() > 1 ? ", " : "") + std::to_string(d) + ":" + std::to_string(c);
  return s + "}";
}

std::map<int, int> histogram_of(const std::vector<Binomial>& bs) {
  std::map<int, int> h;
  for (const auto& b : bs) ++h[b.degree()];
  return h;
}

std::string edges_text(const Graph& g) {
  std::string s;
  for (auto [a, b] : g.edges()) s += (s.empty() ? "" : " ") + std::to_string(a) + "-" + std::to_string(b);
  return s;
}

json edges_json(const Graph& g) {
  json j = json::array();
  for (auto [a, b] : g.edges()) j.push_back({a, b});
  return j;
}

std::string mask_text(VertexMask m) {
  std::string s = "{";
  for (int v : vertices_of(m)) s += (s.size() > 1 ? "," : "") + std::to_string(v);
  return s + "}";
}

std::int64_t codim(const Graph& g) {
  return (std::int64_t{1} << (g.vertex_count() - 1)) - 1 - static_cast<std::int64_t>(g.edge_count());
}

json binomials_json(const std::vector<Binomial>& bs, const std::vector<std::string>& names) {
  json j = json::array();
  for (const auto& b : bs) j.push_back(binomial_to_json(display_form(b), names));
  return j;
}

json metadata(const std::string& order, const std::map<int, int>& hist, bool complete, const Timer& t) {
  return {{"order", order},
          {"degreeHistogram", histogram_json(hist)},
          {"certifiedComplete", complete},
          {"wallTime", t.seconds()}};
}

// --- ideal ---------------------------------------------------------------------

int cmd_ideal(const Common& c, const std::string& spec, const std::string& mode, const std::string& order_text,
              int max_degree) {
  Timer timer;
  const Graph g = load_graph(spec);
  const VariableSet vars(g);
  const auto a = exponent_matrix(g);
  const auto opts = c.options();

  if (mode == "degrees" && max_degree > 0) {
    // generator counts by fiber connectivity: exact up to max_degree only
    const auto hist = markov_degrees_upto(a.entries, max_degree);
    std::ofstream file;
    std::ostream& os = *out_stream(c, file);
    if (c.json_out()) {
      os << json{{"graph", spec},
                 {"n", g.vertex_count()},
                 {"edges", edges_json(g)},
                 {"kind", "degrees"},
                 {"degreeBound", max_degree},
                 {"codim", codim(g)},
                 {"metadata", metadata("none", hist, false, timer)}}
                .dump(2)
         << "\n";
    } else {
      os << "graph " << spec << " (n=" << g.vertex_count() << ", |E|=" << g.edge_count() << ")\n";
      os << "degrees up to " << max_degree << ": " << histogram_text(hist) << ", codim " << codim(g)
         << " [higher degrees not checked]\n";
    }
    return kPartial;
  }

  std::vector<Binomial> elements;
  bool complete = true;
  std::string order_name = order_text;
  if (mode == "groebner") {
    const auto gb = toric_groebner(a, TermOrder::parse(order_text), opts);
    elements = gb.elements;
    complete = gb.complete;
  } else {
    const auto mb = markov_basis(a, opts);
    elements = mb.elements;
    complete = mb.complete;
    order_name = "degrevlex";
  }
  const auto hist = histogram_of(elements);
  const int mu = hist.empty() ? 0 : hist.rbegin()->first;

  std::ofstream file;
  std::ostream& os = *out_stream(c, file);
  if (c.json_out()) {
    json j = {{"graph", spec},
              {"n", g.vertex_count()},
              {"edges", edges_json(g)},
              {"kind", mode},
              {"count", elements.size()},
              {"mu", mu},
              {"codim", codim(g)},
              {"metadata", metadata(order_name, hist, complete, timer)}};
    if (mode != "degrees") {
      j["binomials"] = binomials_json(elements, vars.names());
      if (mode == "groebner") {
        json marked = json::array();
        for (const auto& b : elements) marked.push_back(binomial_to_json(b, vars.names()));
        j["binomials"] = marked;
      }
    }
    os << j.dump(2) << "\n";
  } else {
    os << "graph " << spec << " (n=" << g.vertex_count() << ", |E|=" << g.edge_count() << ")\n";
    os << mode << ": " << elements.size() << " binomials, degrees " << histogram_text(hist) << ", mu " << mu
       << ", codim " << codim(g) << (complete ? "" : " [PARTIAL]") << "\n";
    if (mode == "markov")
      for (const auto& b : elements) os << print_binomial(display_form(b), vars) << "\n";
    if (mode == "groebner")
      for (const auto& b : elements) os << print_binomial(b, vars) << "\n";
  }
  return complete ? kOk : kPartial;
}

// --- polytope --------------------------------------------------------------------

int cmd_polytope(const Common& c, const std::string& spec, const std::string& mode, int max_height) {
  const Graph g = load_graph(spec);
  const auto p = cut_polytope(g);
  std::ofstream file;
  std::ostream& os = *out_stream(c, file);
  json j = {{"graph", spec}, {"nVertices", p.size()}};
  std::string text;

  if (mode == "dim") {
    j["dim"] = dimension(p);
    text = std::to_string(dimension(p));
  } else if (mode == "vertices") {
    j["vertices"] = vertices_csv(p);
    text = vertices_csv(p);
  } else if (mode == "facets") {
    const auto h = facets(p);
    j["nFacets"] = h.facets.size();
    j["facets"] = facets_text(h);
    text = facets_text(h);
  } else if (mode == "volume") {
    j["volume"] = normalized_volume(p).str();
    text = normalized_volume(p).str();
  } else if (mode == "smooth") {
    j["smooth"] = is_smooth(p);
    text = is_smooth(p) ? "true" : "false";
  } else if (mode == "compressed") {
    j["compressed"] = is_compressed(p);
    text = is_compressed(p) ? "true" : "false";
  } else if (mode == "normality") {
    const int h = max_height > 0 ? max_height : static_cast<int>(dimension(p)) - 1;
    const auto r = normality_gaps(p, h);
    j["gapsUpTo"] = r.max_height;
    j["gaps"] = r.gaps.size();
    j["perHeight"] = histogram_json(r.per_height);
    json pts = json::array();
    std::ostringstream ts;
    ts << r.gaps.size() << " gap points up to height " << r.max_height << "\n";
    for (const auto& gp : r.gaps) {
      pts.push_back({{"height", gp.height}, {"point", gp.ambient}});
      ts << "height " << gp.height << ":";
      for (auto x : gp.ambient) ts << " " << x;
      ts << "\n";
    }
    j["points"] = pts;
    text = ts.str();
    if (!text.empty() && text.back() == '\n') text.pop_back();
  } else if (mode == "report") {
    const auto h = facets(p);
    j["dim"] = dimension(p);
    j["nFacets"] = h.facets.size();
    j["volume"] = normalized_volume(p).str();
    j["simple"] = is_simple(p);
    j["smooth"] = is_smooth(p);
    j["compressed"] = is_compressed(p);
    // largest height with no gap point, when a search bound is given
    j["gapsUpTo"] = nullptr;
    if (max_height > 0) {
      const auto r = normality_gaps(p, max_height);
      j["gapsUpTo"] = r.gaps.empty() ? r.max_height : r.per_height.begin()->first - 1;
    }
    std::ostringstream ts;
    ts << "dim " << dimension(p) << "\nvertices " << p.size() << "\nfacets " << h.facets.size() << "\nvolume "
       << normalized_volume(p) << "\nsimple " << is_simple(p) << "\nsmooth " << is_smooth(p) << "\ncompressed "
       << is_compressed(p);
    text = ts.str();
  }
  if (c.json_out())
    os << j.dump(2) << "\n";
  else
    os << text << (text.empty() || text.back() == '\n' ? "" : "\n");
  return kOk;
}

// --- compose ---------------------------------------------------------------------

int cmd_compose(const Common& c, const std::string& s1, const std::string& s2, const std::string& separator,
                bool groebner, bool verify) {
  Timer timer;
  const auto ctx = make_sum(load_graph(s1), load_graph(s2), separator);
  const VariableSet vars(ctx.g);
  const auto opts = c.options();
  std::ofstream file;
  std::ostream& os = *out_stream(c, file);

  if (groebner) {
    const auto order = TermOrder::degrevlex();
    const auto gb = compose_groebner(ctx, toric_groebner(exponent_matrix(ctx.g1), order, opts),
                                     toric_groebner(exponent_matrix(ctx.g2), order, opts));
    const bool ok = is_groebner(gb.elements, gb.order);
    const auto hist = histogram_of(gb.elements);
    if (c.json_out()) {
      json marked = json::array();
      for (const auto& b : gb.elements) marked.push_back(binomial_to_json(b, vars.names()));
      os << json{{"graph", edges_json(ctx.g)},
                 {"size", gb.size()},
                 {"isGroebner", ok},
                 {"binomials", marked},
                 {"metadata", metadata("composed", hist, ok, timer)}}
                .dump(2)
         << "\n";
    } else {
      os << "glued graph: " << edges_text(ctx.g) << "\n";
      os << "Groebner basis: " << gb.size() << " elements, degrees " << histogram_text(hist)
         << (ok ? ", verified" : ", NOT a Groebner basis") << "\n";
      for (const auto& b : gb.elements) os << print_binomial(b, vars) << "\n";
    }
    return ok ? kOk : kMismatch;
  }

  const auto f1 = markov_basis(exponent_matrix(ctx.g1), opts);
  const auto f2 = markov_basis(exponent_matrix(ctx.g2), opts);
  const auto m = compose_generating_set(ctx, f1.elements, f2.elements);
  std::vector<Binomial> all;
  for (const auto& e : m) all.push_back(e.binomial);
  const bool generates = verify ? verify_generates(all, ctx.g, opts) : true;
  const auto hist = histogram_of(all);

  if (c.json_out()) {
    json items = json::array();
    for (const auto& e : m) {
      json item = binomial_to_json(display_form(e.binomial), vars.names());
      item["side"] = e.side;
      json ef = json::array();
      for (VertexMask s : e.e) ef.push_back(vertices_of(s));
      item["EF"] = ef;
      items.push_back(item);
    }
    json j = {{"graph", edges_json(ctx.g)},
              {"size", m.size()},
              {"binomials", items},
              {"metadata", metadata("degrevlex", hist, f1.complete && f2.complete, timer)}};
    if (verify) j["verify"] = generates;
    os << j.dump(2) << "\n";
  } else {
    os << "glued graph: " << edges_text(ctx.g) << "\n";
    os << "|M| = " << m.size() << ", degrees " << histogram_text(hist);
    if (verify) os << ", verify " << (generates ? "true" : "false");
    os << "\n";
    for (const auto& e : m) {
      os << (e.side == 0 ? "quad" : "lift" + std::to_string(e.side));
      if (!e.e.empty()) {
        os << " E=";
        for (std::size_t i = 0; i < e.e.size(); ++i) os << (i ? "," : "") << mask_text(e.e[i]);
      }
      os << "  " << print_binomial(display_form(e.binomial), vars) << "\n";
    }
  }
  if (!f1.complete || !f2.complete) return kPartial;
  return generates ? kOk : kMismatch;
}

// --- stat ------------------------------------------------------------------------

RationalVector read_vector(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::vector<Rational> values;
  const std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto parse = [&](const std::string& s) {
    try {
      values.emplace_back(s);
    } catch (const std::exception&) {
      throw InvalidInput("bad rational '" + s + "'");
    }
  };
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '[') {
    const json j = json::parse(content);
    for (const auto& v : j) {
      if (v.is_string())
        parse(v.get<std::string>());
      else if (v.is_number_integer())
        values.emplace_back(v.get<std::int64_t>());
      else
        throw InvalidInput("vector entries must be integers or \"p/q\" strings");
    }
  } else {
    std::istringstream ss(content);
    std::string tok;
    while (ss >> tok) parse(tok);
  }
  RationalVector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
  return v;
}

json split_report(const SplitSystem& sigma, const MarkovBasis* mb) {
  json j = {{"n", sigma.n}, {"r", sigma.size()}, {"cyclic", sigma.cyclic()}};
  j["graph"] = sigma.cyclic() ? edges_json(graph_of_splits(sigma)) : json();
  if (mb) j["degreeHistogram"] = histogram_json(mb->degree_histogram);
  return j;
}

int cmd_stat_suspend(const Common& c, const std::string& spec) {
  const Graph g = load_graph(spec);
  const auto r = check_covariance(g, c.options());
  std::ofstream file;
  std::ostream& os = *out_stream(c, file);
  if (c.json_out()) {
    os << json{{"graph", spec},
               {"equal", r.equal},
               {"modelDegrees", histogram_json(histogram_of(r.model_markov))},
               {"cutDegrees", histogram_json(histogram_of(r.cut_markov))},
               {"table", covariance_table(g.vertex_count())}}
              .dump(2)
       << "\n";
  } else {
    for (const auto& line : covariance_table(g.vertex_count())) os << line << "\n";
    os << "model generators " << histogram_text(histogram_of(r.model_markov)) << ", suspension generators "
       << histogram_text(histogram_of(r.cut_markov)) << "\n";
    os << (r.equal ? "PASS" : "FAIL") << "\n";
  }
  return r.equal ? kOk : kMismatch;
}

int cmd_stat_splits(const Common& c, const SplitSystem& sigma, const std::string& mode) {
  std::ofstream file;
  std::ostream& os = *out_stream(c, file);
  if (mode == "graph") {
    if (!sigma.cyclic()) throw InvalidInput("split system is not cyclic");
    const Graph g = graph_of_splits(sigma);
    if (c.json_out())
      os << split_report(sigma, nullptr).dump(2) << "\n";
    else
      os << write_graph(g);
    return kOk;
  }
  if (mode == "verify") {
    const bool ok = verify_cutsplit(sigma);
    if (c.json_out()) {
      json j = split_report(sigma, nullptr);
      j["verify"] = ok;
      j["table"] = cutsplit_table(sigma);
      os << j.dump(2) << "\n";
    } else {
      for (const auto& line : cutsplit_table(sigma)) os << line << "\n";
      os << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? kOk : kMismatch;
  }
  if (mode == "splits") {
    if (c.json_out()) {
      json j = split_report(sigma, nullptr);
      json list = json::array();
      for (const auto& s : sigma.splits) list.push_back(format_split(s));
      j["splits"] = list;
      os << j.dump(2) << "\n";
    } else {
      os << write_split_system(sigma);
    }
    return kOk;
  }
  // ideal
  const auto a = jc_matrix(sigma);
  const auto mb = markov_basis(a, c.options());
  if (c.json_out()) {
    json j = split_report(sigma, &mb);
    j["binomials"] = binomials_json(mb.elements, a.col_labels);
    os << j.dump(2) << "\n";
  } else {
    os << "n " << sigma.n << ", r " << sigma.size() << ", cyclic " << (sigma.cyclic() ? "yes" : "no")
       << ", degrees " << histogram_text(mb.degree_histogram) << (mb.complete ? "" : " [PARTIAL]") << "\n";
    for (const auto& b : mb.elements) os << format_binomial(display_form(b), a.col_labels) << "\n";
  }
  return mb.complete ? kOk : kPartial;
}

int cmd_stat_fourier(const Common& c, const std::string& path, bool inverse) {
  const auto v = read_vector(path);
  const auto w = inverse ? fourier_inv(v) : fourier(v);
  std::ofstream file;
  std::ostream& os = *out_stream(c, file);
  if (c.json_out()) {
    json j = json::array();
    for (Eigen::Index i = 0; i < w.size(); ++i) j.push_back(w(i).str());
    os << j.dump() << "\n";
  } else {
    for (Eigen::Index i = 0; i < w.size(); ++i) os << w(i) << "\n";
  }
  return kOk;
}

// --- table rows ------------------------------------------------------------------

struct TableRow {
  const char* name;
  const char* spec;
  std::map<int, int> hist;
  int mu;
  std::int64_t codim;
  std::int64_t degree;
  bool normal;
};

const std::vector<TableRow>& expected_rows() {
  static const std::vector<TableRow> rows = {
      {"K3", "K3", {}, 0, 0, 1, true},
      {"C4", "C4", {{2, 3}}, 2, 3, 8, true},
      {"K4", "K4", {{4, 1}}, 4, 1, 4, true},
      {"C5", "C5", {{2, 30}}, 2, 10, 52, true},
      {"K2,3", "K2,3", {{2, 19}}, 2, 9, 72, true},
      {"suspend(C4)", "suspend(C4)", {{2, 8}, {4, 8}}, 4, 7, 64, true},
      {"K5", "K5", {{4, 20}, {6, 40}}, 6, 5, 128, false},
      {"C6", "C6", {{2, 195}}, 2, 25, 344, true},
      {"K2,4", "K2,4", {{2, 111}}, 2, 23, 1152, true},
      {"K3,3", "K3,3", {{2, 63}, {4, 72}}, 4, 22, 3168, true},
      {"K2,2,2", "K2,2,2", {{2, 24}, {4, 1096}}, 4, 19, 6144, true},
  };
  return rows;
}

int cmd_table1(const Common& c, int max_vertices, int max_height, int max_degree) {
  std::ofstream file;
  std::ostream& os = *out_stream(c, file);
  const auto opts = c.options();
  int status = kOk;
  json rows = json::array();
  if (!c.json_out())
    os << std::left << std::setw(13) << "graph" << std::setw(6) << "2" << std::setw(6) << "4" << std::setw(6) << "6"
       << std::setw(6) << "8" << std::setw(6) << "10" << std::setw(4) << "mu" << std::setw(7) << "codim"
       << std::setw(7) << "deg" << std::setw(5) << "nor"
       << "status\n";
  for (const auto& row : expected_rows()) {
    const Graph g = make_named(row.spec);
    if (g.vertex_count() > max_vertices) continue;
    Timer timer;
    // 6-vertex rows: full Markov bases only where Buchberger stays cheap,
    // otherwise exact generator counts up to the degree bound
    const auto a = exponent_matrix(g);
    std::map<int, int> hist;
    bool complete = true;
    std::string method = "markov";
    if (g.vertex_count() <= 5 || g.edge_count() < 12) {
      const auto mb = markov_basis(a, opts);
      hist = mb.degree_histogram;
      complete = mb.complete;
    } else {
      hist = markov_degrees_upto(a.entries, max_degree);
      complete = false;
      method = "fibers<=" + std::to_string(max_degree);
    }
    const int mu = hist.empty() ? 0 : hist.rbegin()->first;
    const auto p = cut_polytope(g);
    const BigInt deg = normalized_volume(p);
    // normality is only searched where the lattice-point enumeration is cheap
    const int dim = static_cast<int>(dimension(p));
    std::string nor = "-";
    if (g.vertex_count() <= 5 || max_height > 0) {
      const int h = max_height > 0 ? max_height : dim - 1;
      nor = normality_gaps(p, h).gaps.empty() ? "Y" : "N";
    }
    const bool match = hist == row.hist && mu == row.mu && codim(g) == row.codim && deg == row.degree &&
                       (nor == "-" || (nor == "Y") == row.normal);
    std::string verdict = !match ? "MISMATCH" : complete ? "ok" : method == "markov" ? "partial" : "ok (" + method + ")";
    if (!match)
      status = kMismatch;
    else if (!complete && status == kOk)
      status = kPartial;

    if (c.json_out()) {
      rows.push_back({{"graph", row.name},
                      {"degreeHistogram", histogram_json(hist)},
                      {"mu", mu},
                      {"method", method},
                      {"codim", codim(g)},
                      {"degree", deg.str()},
                      {"normal", nor},
                      {"certifiedComplete", complete},
                      {"status", verdict},
                      {"wallTime", timer.seconds()}});
    } else {
      os << std::left << std::setw(13) << row.name;
      for (int d : {2, 4, 6, 8, 10}) {
        const auto it = hist.find(d);
        os << std::setw(6) << (it == hist.end() ? 0 : it->second);
      }
      os << std::setw(4) << mu << std::setw(7) << codim(g) << std::setw(7) << deg.str() << std::setw(5) << nor
         << verdict << "\n";
    }
  }
  if (c.json_out()) os << json{{"rows", rows}, {"status", status}}.dump(2) << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cutkit: cut ideals, cut polytopes and their statistical models"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", common.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget-pairs", common.budget_pairs, "S-pair budget (0 = unlimited)");
  app.add_option("-o,--output", common.output, "Write the report to a file");

  std::string graph, graph2, mode, order = "degrevlex", separator, path;
  int max_height = 0, max_vertices = 5, max_degree = 0;
  bool inverse = false, groebner = false, no_verify = false;
  int status = kOk;

  auto* ideal = app.add_subcommand("ideal", "Markov basis, Groebner basis or generator degrees of I_G");
  ideal->add_option("graph", graph, "Named graph or graph file")->required();
  ideal->add_option("mode", mode, "markov | groebner | degrees")
      ->required()
      ->check(CLI::IsMember({"markov", "groebner", "degrees"}));
  ideal->add_option("--order", order, "degrevlex | lex | weight:<csv>");
  ideal->add_option("--max-degree", max_degree,
                    "With 'degrees': count generators up to this degree from fibers, no Groebner basis")
      ->check(CLI::Range(1, 8));
  ideal->callback([&] { status = cmd_ideal(common, graph, mode, order, max_degree); });

  auto* poly = app.add_subcommand("polytope", "Invariants of the cut polytope");
  poly->add_option("graph", graph, "Named graph or graph file")->required();
  poly->add_option("mode", mode, "dim | vertices | facets | volume | smooth | compressed | normality | report")
      ->required()
      ->check(CLI::IsMember({"dim", "vertices", "facets", "volume", "smooth", "compressed", "normality", "report"}));
  poly->add_option("--max-height", max_height, "Largest dilation searched for normality gaps")
      ->check(CLI::PositiveNumber);
  poly->callback([&] { status = cmd_polytope(common, graph, mode, max_height); });

  auto* compose = app.add_subcommand("compose", "Generating set of a clique sum from its pieces");
  compose->add_option("graph1", graph, "First piece")->required();
  compose->add_option("graph2", graph2, "Second piece")->required();
  compose->add_option("--separator", separator, "a,b,c or a,b,c=x,y,z")->required();
  compose->add_flag("--groebner", groebner, "Compose degrevlex Groebner bases instead");
  compose->add_flag("--no-verify", no_verify, "Skip the ideal comparison");
  compose->callback([&] { status = cmd_compose(common, graph, graph2, separator, groebner, !no_verify); });

  auto* stat = app.add_subcommand("stat", "Binary graph models and Jukes-Cantor split models");
  stat->require_subcommand(1);
  auto* suspend = stat->add_subcommand("suspend-check", "Binary graph model vs cut ideal of the suspension");
  suspend->add_option("graph", graph, "Named graph or graph file")->required();
  suspend->callback([&] { status = cmd_stat_suspend(common, graph); });
  auto* splits = stat->add_subcommand("splits", "Jukes-Cantor model of a split system file");
  splits->add_option("file", path, "Split system file")->required()->check(CLI::ExistingFile);
  splits->add_option("mode", mode, "splits | graph | verify | ideal")
      ->required()
      ->check(CLI::IsMember({"splits", "graph", "verify", "ideal"}));
  splits->callback([&] { status = cmd_stat_splits(common, load_split_system(path), mode); });
  auto* tree = stat->add_subcommand("tree", "Split system of a leaf-labeled tree");
  tree->add_option("tree", path, "Nested leaf lists, e.g. ((1,2),3,(4,5))")->required();
  tree->add_option("mode", mode, "splits | graph | verify | ideal")
      ->check(CLI::IsMember({"splits", "graph", "verify", "ideal"}));
  tree->callback([&] {
    status = cmd_stat_splits(common, splits_of_tree(parse_tree(path)), mode.empty() ? "splits" : mode);
  });
  auto* fourier_cmd = stat->add_subcommand("fourier", "Fourier transform of a probability vector");
  fourier_cmd->add_option("file", path, "JSON array or whitespace-separated rationals")
      ->required()
      ->check(CLI::ExistingFile);
  fourier_cmd->add_flag("--inverse", inverse, "Apply the inverse transform");
  fourier_cmd->callback([&] { status = cmd_stat_fourier(common, path, inverse); });

  auto* table = app.add_subcommand("table1", "Recompute the named rows of the cut ideal table");
  table->add_option("--max-vertices", max_vertices, "5, or 6 for the extended rows")->check(CLI::Range(3, 6));
  table->add_option("--max-height", max_height, "Normality search height (default dim-1 up to 5 vertices)")
      ->check(CLI::PositiveNumber);
  table->add_option("--max-degree", max_degree, "Degree bound for rows counted from fibers (default 6)")
      ->check(CLI::Range(2, 8));
  table->callback([&] { status = cmd_table1(common, max_vertices, max_height, max_degree > 0 ? max_degree : 6); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return status;
}
