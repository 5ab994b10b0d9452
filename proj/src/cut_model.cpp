#include "cutkit/cut_model.hpp"

#include <cctype>
#include <sstream>
#include <functional>
#include <unordered_map>

namespace cutkit {

IntVector ExponentMatrix::image(const Monomial& u) const {
  IntVector out = IntVector::Zero(rows());
  for (Eigen::Index j = 0; j < cols(); ++j)
    if (u[j]) out += entries.col(j) * static_cast<std::int64_t>(u[j]);
  return out;
}

bool ExponentMatrix::in_kernel(const Binomial& b) const { return image(b.plus) == image(b.minus); }

std::string ExponentMatrix::to_csv() const {
  std::ostringstream os;
  os << "row";
  for (const auto& c : col_labels) os << "," << c;
  os << "\n";
  for (Eigen::Index i = 0; i < rows(); ++i) {
    os << (i < static_cast<Eigen::Index>(row_labels.size()) ? row_labels[i] : std::to_string(i));
    for (Eigen::Index j = 0; j < cols(); ++j) os << "," << entries(i, j);
    os << "\n";
  }
  return os.str();
}

VariableSet::VariableSet(const Graph& g) : g_(g) {
  const int n = g.vertex_count();
  if (n < 1) throw InvalidInput("variable set of an empty graph");
  if (n > 20) throw InvalidInput("more than 20 vertices: 2^(n-1) columns is too many");
  const std::size_t count = std::size_t{1} << (n - 1);
  names_.reserve(count);
  for (std::size_t k = 0; k < count; ++k) names_.push_back("q[" + format_partition(Partition(n, k)) + "]");
}

std::vector<std::string> VariableSet::row_names() const {
  std::vector<std::string> out;
  for (auto [i, j] : g_.edges()) {
    std::string e = g_.vertex_count() > 9 ? std::to_string(i) + "," + std::to_string(j)
                                          : std::to_string(i) + std::to_string(j);
    out.push_back("s" + e);
    out.push_back("t" + e);
  }
  return out;
}

std::vector<int> cut_monomial(const Graph& g, const Partition& p) {
  if (p.n() != g.vertex_count()) throw InvalidInput("partition does not match the graph");
  std::vector<int> out(2 * g.edge_count(), 0);
  for (int k = 0; k < g.edge_count(); ++k) {
    auto [i, j] = g.edges()[k];
    out[2 * k + (p.separates(i, j) ? 0 : 1)] = 1;
  }
  return out;
}

std::vector<int> cut_vector(const Graph& g, const Partition& p) {
  if (p.n() != g.vertex_count()) throw InvalidInput("partition does not match the graph");
  std::vector<int> out(g.edge_count(), 0);
  for (int k = 0; k < g.edge_count(); ++k) {
    auto [i, j] = g.edges()[k];
    out[k] = p.separates(i, j) ? 1 : 0;
  }
  return out;
}

ExponentMatrix exponent_matrix(const Graph& g) {
  if (g.edge_count() < 1) throw InvalidInput("exponent_matrix needs at least one edge");
  VariableSet vars(g);
  ExponentMatrix m;
  m.entries = IntMatrix::Zero(2 * g.edge_count(), static_cast<Eigen::Index>(vars.size()));
  for (std::size_t c = 0; c < vars.size(); ++c) {
    auto col = cut_monomial(g, vars.partition(c));
    for (std::size_t r = 0; r < col.size(); ++r) m.entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = col[r];
  }
  m.row_labels = vars.row_names();
  m.col_labels = vars.names();
  return m;
}

// --- text formats -----------------------------------------------------------

namespace {

std::string format_side(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

class BinomialParser {
 public:
  using Resolver = std::function<std::size_t(const std::string&, std::size_t)>;
  BinomialParser(const std::string& text, std::size_t nvars, Resolver resolve)
      : s_(text), n_(nvars), resolve_(std::move(resolve)) {}

  Binomial parse() {
    Monomial lhs = side();
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != '-') fail("expected '-' between the two monomials");
    ++pos_;
    Monomial rhs = side();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return {lhs, rhs};
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidInput("binomial parse error at position " + std::to_string(pos_) + ": " + why);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  Monomial side() {
    std::vector<int> e(n_, 0);
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '1' && (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
      ++pos_;
      return Monomial(e);
    }
    while (true) {
      skip_ws();
      const std::size_t start = pos_;
      int depth = 0;
      while (pos_ < s_.size()) {
        char c = s_[pos_];
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (depth == 0 && (c == '*' || c == '^' || c == '-' || std::isspace(static_cast<unsigned char>(c)))) break;
        ++pos_;
      }
      if (start == pos_) fail("expected a variable");
      const std::size_t var = resolve_(s_.substr(start, pos_ - start), start);
      int power = 1;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        skip_ws();
        const std::size_t ds = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (ds == pos_) fail("expected an exponent");
        power = std::stoi(s_.substr(ds, pos_ - ds));
      }
      e[var] += power;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return Monomial(e);
  }

  const std::string& s_;
  std::size_t n_;
  Resolver resolve_;
  std::size_t pos_ = 0;
};

}  // namespace

Binomial display_form(const Binomial& b) {
  auto seq = [](const Monomial& m) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int k = 0; k < m[i]; ++k) out.push_back(i);
    return out;
  };
  if (seq(b.minus) < seq(b.plus)) return b.negated();
  return b;
}

std::string format_binomial(const Binomial& b, const std::vector<std::string>& names) {
  return format_side(b.plus, names) + " - " + format_side(b.minus, names);
}

Binomial parse_binomial(const std::string& text, const std::vector<std::string>& names) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = i;
  return BinomialParser(text, names.size(), [&](const std::string& tok, std::size_t at) {
           auto it = index.find(tok);
           if (it == index.end())
             throw InvalidInput("binomial parse error at position " + std::to_string(at) + ": unknown variable '" + tok + "'");
           return it->second;
         }).parse();
}

std::string print_binomial(const Binomial& b, const VariableSet& vars) {
  if (b.nvars() != vars.size()) throw InvalidInput("binomial does not live over this variable set");
  if (b.is_zero()) throw InvalidInput("refusing to print the zero binomial");
  return format_binomial(b, vars.names());
}

Binomial parse_binomial(const std::string& text, const VariableSet& vars) {
  const int n = vars.vertex_count();
  return BinomialParser(text, vars.size(), [&](const std::string& tok, std::size_t at) -> std::size_t {
           if (tok.size() < 3 || tok.rfind("q[", 0) != 0 || tok.back() != ']')
             throw InvalidInput("binomial parse error at position " + std::to_string(at) + ": expected q[A|B], got '" + tok + "'");
           try {
             return vars.column(parse_partition(tok.substr(2, tok.size() - 3), n));
           } catch (const InvalidInput& e) {
             throw InvalidInput("binomial parse error at position " + std::to_string(at) + ": " + e.what());
           }
         }).parse();
}

nlohmann::json binomial_to_json(const Binomial& b, const std::vector<std::string>& names) {
  auto side = [&](const Monomial& m) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) arr.push_back({names[i], m[i]});
    return arr;
  };
  return {{"lhs", side(b.plus)}, {"rhs", side(b.minus)}};
}

Binomial binomial_from_json(const nlohmann::json& j, const std::vector<std::string>& names) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = i;
  auto side = [&](const nlohmann::json& arr) {
    std::vector<int> e(names.size(), 0);
    for (const auto& pair : arr) {
      auto it = index.find(pair.at(0).get<std::string>());
      if (it == index.end()) throw InvalidInput("unknown variable in binomial JSON");
      e[it->second] += pair.at(1).get<int>();
    }
    return Monomial(e);
  };
  return {side(j.at("lhs")), side(j.at("rhs"))};
}

}  // namespace cutkit
