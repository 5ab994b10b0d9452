#include "cutkit/linalg.hpp"

#include <limits>
#include <utility>

namespace cutkit {

namespace {

using Index = Eigen::Index;

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Extended gcd: returns g = gcd(a,b) >= 0 with s*a + t*b = g.
BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& s, BigInt& t) {
  BigInt old_r = a, r = b, old_s = 1, ss = 0, old_t = 0, tt = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * ss;
    old_s = ss;
    ss = tmp;
    tmp = old_t - q * tt;
    old_t = tt;
    tt = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

// Floor division for BigInt.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

BigInt l1(const BigVector& v) {
  BigInt s = 0;
  for (Index i = 0; i < v.size(); ++i) s += abs_big(v(i));
  return s;
}

}  // namespace

IntMatrix to_int(const BigMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  const BigInt lo = std::numeric_limits<std::int64_t>::min();
  const BigInt hi = std::numeric_limits<std::int64_t>::max();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) < lo || m(i, j) > hi) throw std::overflow_error("integer entry exceeds 64 bits");
      out(i, j) = m(i, j).convert_to<std::int64_t>();
    }
  return out;
}

Index rank(const BigMatrix& input) {
  BigMatrix m = input;
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  BigInt prev = 1;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = c + 1; j < cols; ++j) m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

BigInt determinant(BigMatrix m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  const Index n = m.rows();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (Index k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.row(p).swap(m.row(k));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

BigMatrix hermite_normal_form(const BigMatrix& input) {
  BigMatrix m = input;
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    // Fold every row below r into row r with gcd row operations.
    for (Index i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      if (m(r, c) == 0) {
        m.row(i).swap(m.row(r));
        continue;
      }
      BigInt s, t;
      BigInt g = ext_gcd(m(r, c), m(i, c), s, t);
      BigInt a = m(r, c) / g, b = m(i, c) / g;
      for (Index j = c; j < cols; ++j) {
        BigInt x = m(r, j), y = m(i, j);
        m(r, j) = s * x + t * y;
        m(i, j) = -b * x + a * y;
      }
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0)
      for (Index j = c; j < cols; ++j) m(r, j) = -m(r, j);
    for (Index i = 0; i < r; ++i) {
      BigInt q = floor_div(m(i, c), m(r, c));
      if (q != 0)
        for (Index j = c; j < cols; ++j) m(i, j) -= q * m(r, j);
    }
    ++r;
  }
  return m.topRows(r);
}

std::vector<Index> pivot_columns(const BigMatrix& echelon) {
  std::vector<Index> piv;
  for (Index i = 0; i < echelon.rows(); ++i) {
    Index j = 0;
    while (j < echelon.cols() && echelon(i, j) == 0) ++j;
    if (j < echelon.cols()) piv.push_back(j);
  }
  return piv;
}

BigMatrix integer_kernel(const BigMatrix& a) {
  const Index rows = a.rows(), n = a.cols();
  BigMatrix m = a;
  BigMatrix u = BigMatrix::Identity(n, n);
  Index k = 0;
  for (Index r = 0; r < rows && k < n; ++r) {
    for (Index c = k + 1; c < n; ++c) {
      if (m(r, c) == 0) continue;
      if (m(r, k) == 0) {
        m.col(c).swap(m.col(k));
        u.col(c).swap(u.col(k));
        continue;
      }
      BigInt s, t;
      BigInt g = ext_gcd(m(r, k), m(r, c), s, t);
      BigInt x = m(r, k) / g, y = m(r, c) / g;
      BigVector mk = m.col(k), mc = m.col(c), uk = u.col(k), uc = u.col(c);
      m.col(k) = s * mk + t * mc;
      m.col(c) = -y * mk + x * mc;
      u.col(k) = s * uk + t * uc;
      u.col(c) = -y * uk + x * uc;
    }
    if (m(r, k) != 0) ++k;
  }
  BigMatrix ker = u.rightCols(n - k);
  // Pairwise size reduction in the 1-norm; keeps the lattice unchanged.
  const Index d = ker.cols();
  bool improved = true;
  while (improved) {
    improved = false;
    for (Index i = 0; i < d; ++i) {
      for (Index j = 0; j < d; ++j) {
        if (i == j) continue;
        for (int sgn : {1, -1}) {
          BigVector cand = ker.col(i) - BigInt(sgn) * ker.col(j);
          if (l1(cand) < l1(ker.col(i))) {
            ker.col(i) = cand;
            improved = true;
          }
        }
      }
    }
  }
  for (Index j = 0; j < d; ++j) {
    Index first = 0;
    while (first < n && ker(first, j) == 0) ++first;
    if (first < n && ker(first, j) < 0) ker.col(j) = -ker.col(j);
  }
  return ker;
}

RationalMatrix rref(RationalMatrix m, std::vector<Index>* pivots) {
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  std::vector<Index> piv;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    Rational inv = Rational(1) / m(r, c);
    for (Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = piv;
  return m;
}

RationalMatrix rational_kernel(const RationalMatrix& m) {
  std::vector<Index> piv;
  RationalMatrix e = rref(m, &piv);
  const Index n = m.cols();
  std::vector<bool> is_piv(n, false);
  for (Index p : piv) is_piv[p] = true;
  RationalMatrix ker(n, n - static_cast<Index>(piv.size()));
  Index col = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    RationalVector v = RationalVector::Zero(n);
    v(f) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v(piv[i]) = -e(static_cast<Index>(i), f);
    ker.col(col++) = v;
  }
  return ker;
}

BigInt content(const BigVector& v) {
  BigInt g = 0;
  for (Index i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, abs_big(v(i)));
  return g;
}

}  // namespace cutkit
