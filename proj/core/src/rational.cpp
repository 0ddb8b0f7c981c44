#include "liespec/rational.hpp"

#include <cctype>
#include <limits>

namespace liespec {

Q parse_rational(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw DomainError("empty rational");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw DomainError("malformed rational '" + raw + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Z n(num), d(den);
  if (d == 0) throw DomainError("zero denominator in '" + raw + "'");
  Q q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Q& q) { return q.get_str(); }

std::string to_string(const RatVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

Z floor_q(const Q& q) {
  Z r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Z ceil_q(const Q& q) {
  Z r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::int64_t to_i64(const Z& z) {
  if (!mpz_fits_slong_p(z.get_mpz_t()) || sizeof(long) < 8)
    throw NumericGuard("integer " + z.get_str() + " exceeds 64 bits");
  return z.get_si();
}

Q dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DomainError("dimension mismatch in dot product");
  Q s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DomainError("dimension mismatch in add");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DomainError("dimension mismatch in sub");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec scale(const Q& c, const RatVec& a) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

RatVec neg(const RatVec& a) { return scale(Q(-1), a); }

RatVec zeros(std::size_t n) { return RatVec(n, Q(0)); }

RatVec unit(std::size_t n, std::size_t i) {
  RatVec r = zeros(n);
  r[i] = 1;
  return r;
}

bool is_zero(const RatVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

RatVec concat(const RatVec& a, const RatVec& b) {
  RatVec r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(RatMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t cols = m[0].size(), row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      Q f = m[r][c] / m[row][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RatMat rows) { return echelon(rows).size(); }

RatVec solve_row_combination(const RatMat& rows, const RatVec& target) {
  // Solve sum_i x_i rows[i] = target via the transposed system with an
  // augmented column.
  std::size_t k = rows.size();
  if (k == 0) {
    if (is_zero(target)) return {};
    throw DomainError("target outside an empty span");
  }
  std::size_t n = target.size();
  RatMat aug(n, RatVec(k + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) aug[j][i] = rows[i][j];
    aug[j][k] = target[j];
  }
  auto piv = echelon(aug);
  RatVec x(k, Q(0));
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == k) throw DomainError("vector " + to_string(target) + " outside the span");
    x[piv[r]] = aug[r][k] / aug[r][piv[r]];
  }
  if (piv.size() < k) throw DomainError("generators are linearly dependent");
  return x;
}

RatMat inverse(const RatMat& m) {
  std::size_t n = m.size();
  RatMat aug(n, RatVec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DomainError("inverse of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto piv = echelon(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw DomainError("singular matrix");
  RatMat inv(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j] / aug[i][i];
  return inv;
}

Q determinant(RatMat m) {
  std::size_t n = m.size();
  Q det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Q f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

RatMat gram(const RatMat& rows) {
  RatMat g(rows.size(), RatVec(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i; j < rows.size(); ++j) g[i][j] = g[j][i] = dot(rows[i], rows[j]);
  return g;
}

Z lcm_of_denominators(const RatVec& v) {
  Z l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

}  // namespace liespec
