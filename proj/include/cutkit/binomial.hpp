#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cutkit/types.hpp"

namespace cutkit {

/// Exponent vector with cached total degree and a 64-bit support signature
/// (bit i mod 64 set when variable i occurs) used as a divisibility filter.
class Monomial {
 public:
  using Exponent = std::int16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(const std::vector<int>& exps);

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, int value);
  int degree() const { return degree_; }
  std::uint64_t signature() const { return sig_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires this divisible by other.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  std::vector<int> exponents() const { return {e_.begin(), e_.end()}; }
  bool squarefree() const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  auto operator<=>(const Monomial& o) const { return e_ <=> o.e_; }

 private:
  void refresh();

  std::vector<Exponent> e_;
  int degree_ = 0;
  std::uint64_t sig_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

/// x^plus - x^minus. Toric outputs have disjoint supports; intermediate
/// Buchberger elements need not.
struct Binomial {
  Monomial plus;
  Monomial minus;

  Binomial() = default;
  Binomial(Monomial p, Monomial m) : plus(std::move(p)), minus(std::move(m)) {}
  /// From an integer vector v: plus = v^+, minus = v^-.
  static Binomial from_vector(const std::vector<std::int64_t>& v);

  std::size_t nvars() const { return plus.size(); }
  bool is_zero() const { return plus == minus; }
  bool disjoint_support() const { return plus.coprime(minus); }
  int degree() const { return std::max(plus.degree(), minus.degree()); }
  /// plus - minus as an integer vector.
  std::vector<std::int64_t> to_vector() const;
  Binomial negated() const { return {minus, plus}; }
  /// Orientation-free identity: the side with the lexicographically smaller
  /// exponent vector is put first.
  Binomial canonical() const;

  bool operator==(const Binomial&) const = default;
  auto operator<=>(const Binomial& o) const {
    if (auto c = plus <=> o.plus; c != 0) return c;
    return minus <=> o.minus;
  }
};

/// Total monomial order: degrevlex, lex, or a weight vector refined by a
/// tie-break (degrevlex or lex). `varorder` lists variables from largest to
/// smallest; empty means the natural order x0 > x1 > ....
class TermOrder {
 public:
  // RevLex (no degree comparison) is only meaningful as a tie-break after a
  // positive weight.
  enum class Kind { DegRevLex, Lex, Weight, RevLex };

  TermOrder() = default;
  static TermOrder degrevlex(std::vector<int> varorder = {});
  static TermOrder lex(std::vector<int> varorder = {});
  static TermOrder weighted(std::vector<std::int64_t> weight, Kind tiebreak = Kind::DegRevLex,
                            std::vector<int> varorder = {});

  Kind kind() const { return kind_; }
  Kind tiebreak() const { return tiebreak_; }
  const std::vector<std::int64_t>& weight() const { return weight_; }
  const std::vector<int>& varorder() const { return varorder_; }

  /// Negative if a < b, zero if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  /// Orients b so that plus is the leading monomial.
  Binomial orient(Binomial b) const;
  std::string describe() const;
  /// `degrevlex`, `lex`, or `weight:<w0,w1,...>`.
  static TermOrder parse(const std::string& text);

 private:
  int compare_plain(Kind k, const Monomial& a, const Monomial& b) const;

  Kind kind_ = Kind::DegRevLex;
  Kind tiebreak_ = Kind::DegRevLex;
  std::vector<std::int64_t> weight_;
  std::vector<int> varorder_;
};

/// Sparse integer polynomial used for exact identity checks.
struct Polynomial {
  std::vector<std::pair<Monomial, std::int64_t>> terms;  // sorted, nonzero
  static Polynomial from(const std::vector<std::pair<std::int64_t, Binomial>>& combo);
  bool is_zero() const { return terms.empty(); }
};

}  // namespace cutkit
