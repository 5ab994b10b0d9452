#include "cutkit/binomial.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace cutkit {

// --- Monomial -----------------------------------------------------------------

Monomial::Monomial(const std::vector<int>& exps) : e_(exps.size()) {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > std::numeric_limits<Exponent>::max())
      throw std::overflow_error("monomial exponent out of range");
    e_[i] = static_cast<Exponent>(exps[i]);
  }
  refresh();
}

void Monomial::set(std::size_t i, int value) {
  if (value < 0 || value > std::numeric_limits<Exponent>::max())
    throw std::overflow_error("monomial exponent out of range");
  e_[i] = static_cast<Exponent>(value);
  refresh();
}

void Monomial::refresh() {
  degree_ = 0;
  sig_ = 0;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    degree_ += e_[i];
    if (e_[i]) sig_ |= std::uint64_t{1} << (i & 63);
  }
}

bool Monomial::divides(const Monomial& o) const {
  if (degree_ > o.degree_ || (sig_ & ~o.sig_)) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& o) const {
  if ((sig_ & o.sig_) == 0) return true;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] && o.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    int v = e_[i] + o.e_[i];
    if (v > std::numeric_limits<Exponent>::max()) throw std::overflow_error("monomial exponent overflow");
    r.e_[i] = static_cast<Exponent>(v);
  }
  r.refresh();
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = static_cast<Exponent>(e_[i] - o.e_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::min(e_[i], o.e_[i]);
  r.refresh();
  return r;
}

bool Monomial::squarefree() const {
  return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x <= 1; });
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < m.size(); ++i) {
    h ^= static_cast<std::size_t>(m[i]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// --- Binomial -----------------------------------------------------------------

Binomial Binomial::from_vector(const std::vector<std::int64_t>& v) {
  std::vector<int> p(v.size(), 0), m(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > std::numeric_limits<Monomial::Exponent>::max() || -v[i] > std::numeric_limits<Monomial::Exponent>::max())
      throw std::overflow_error("kernel vector entry exceeds the exponent range");
    if (v[i] > 0) p[i] = static_cast<int>(v[i]);
    if (v[i] < 0) m[i] = static_cast<int>(-v[i]);
  }
  return {Monomial(p), Monomial(m)};
}

std::vector<std::int64_t> Binomial::to_vector() const {
  std::vector<std::int64_t> v(plus.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = plus[i] - minus[i];
  return v;
}

Binomial Binomial::canonical() const {
  if (minus < plus) return {minus, plus};
  return *this;
}

// --- TermOrder ------------------------------------------------------------

TermOrder TermOrder::degrevlex(std::vector<int> varorder) {
  TermOrder t;
  t.kind_ = Kind::DegRevLex;
  t.varorder_ = std::move(varorder);
  return t;
}

TermOrder TermOrder::lex(std::vector<int> varorder) {
  TermOrder t;
  t.kind_ = Kind::Lex;
  t.varorder_ = std::move(varorder);
  return t;
}

TermOrder TermOrder::weighted(std::vector<std::int64_t> weight, Kind tiebreak, std::vector<int> varorder) {
  if (tiebreak == Kind::Weight) throw InvalidInput("tie-break must be degrevlex or lex");
  TermOrder t;
  t.kind_ = Kind::Weight;
  t.tiebreak_ = tiebreak;
  t.weight_ = std::move(weight);
  t.varorder_ = std::move(varorder);
  return t;
}

int TermOrder::compare_plain(Kind k, const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  auto var = [&](std::size_t pos) { return varorder_.empty() ? pos : static_cast<std::size_t>(varorder_[pos]); };
  if (k == Kind::DegRevLex || k == Kind::RevLex) {
    if (k == Kind::DegRevLex && a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t pos = n; pos-- > 0;) {
      const std::size_t v = var(pos);
      if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t pos = 0; pos < n; ++pos) {
    const std::size_t v = var(pos);
    if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
  }
  return 0;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ != Kind::Weight) return compare_plain(kind_, a, b);
  __int128 wa = 0, wb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    wa += static_cast<__int128>(weight_[i]) * a[i];
    wb += static_cast<__int128>(weight_[i]) * b[i];
  }
  if (wa != wb) return wa < wb ? -1 : 1;
  return compare_plain(tiebreak_, a, b);
}

Binomial TermOrder::orient(Binomial b) const {
  if (compare(b.plus, b.minus) < 0) std::swap(b.plus, b.minus);
  return b;
}

std::string TermOrder::describe() const {
  std::ostringstream os;
  auto name = [](Kind k) { return k == Kind::Lex ? "lex" : k == Kind::RevLex ? "revlex" : "degrevlex"; };
  if (kind_ == Kind::Weight) {
    os << "weight:";
    for (std::size_t i = 0; i < weight_.size(); ++i) os << (i ? "," : "") << weight_[i];
    os << "+" << name(tiebreak_);
  } else {
    os << name(kind_);
  }
  if (!varorder_.empty()) {
    os << "[";
    for (std::size_t i = 0; i < varorder_.size(); ++i) os << (i ? "," : "") << varorder_[i];
    os << "]";
  }
  return os.str();
}

TermOrder TermOrder::parse(const std::string& text) {
  if (text == "degrevlex") return degrevlex();
  if (text == "lex") return lex();
  if (text.rfind("weight:", 0) == 0) {
    std::vector<std::int64_t> w;
    std::stringstream ss(text.substr(7));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        w.push_back(std::stoll(tok));
      } catch (const std::exception&) {
        throw InvalidInput("bad weight entry '" + tok + "'");
      }
    }
    if (w.empty()) throw InvalidInput("empty weight vector");
    return weighted(std::move(w));
  }
  throw InvalidInput("unknown term order '" + text + "'");
}

// --- Polynomial ---------------------------------------------------------------

Polynomial Polynomial::from(const std::vector<std::pair<std::int64_t, Binomial>>& combo) {
  std::map<Monomial, std::int64_t> acc;
  for (const auto& [c, b] : combo) {
    acc[b.plus] += c;
    acc[b.minus] -= c;
  }
  Polynomial p;
  for (auto& [m, c] : acc)
    if (c != 0) p.terms.emplace_back(m, c);
  return p;
}

}  // namespace cutkit
