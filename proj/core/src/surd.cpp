#include "liespec/surd.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace liespec {

namespace {

// d = s^2 f with f squarefree
void split_square(long d, long& s, long& f) {
  s = 1;
  f = d;
  for (long p = 2; p * p <= f; ++p)
    while (f % (p * p) == 0) {
      f /= p * p;
      s *= p;
    }
}

long common_field(const Surd& a, const Surd& b) {
  if (a.field() == 0) return b.field();
  if (b.field() == 0 || a.field() == b.field()) return a.field();
  throw DomainError("arithmetic across quadratic fields Q(sqrt " + std::to_string(a.field()) + ") and Q(sqrt " +
                    std::to_string(b.field()) + ")");
}

}  // namespace

Surd::Surd(const Q& q, const Q& r, long d) : q_(q), r_(r), d_(d) { normalize(); }

void Surd::normalize() {
  if (r_ == 0 || d_ == 0) {
    r_ = 0;
    d_ = 0;
    return;
  }
  if (d_ < 0) throw DomainError("negative radicand");
  long s, f;
  split_square(d_, s, f);
  if (f == 1) {
    q_ += r_ * s;
    r_ = 0;
    d_ = 0;
    return;
  }
  r_ *= s;
  d_ = f;
}

Surd Surd::sqrt_of(const Q& x) {
  if (x < 0) throw DomainError("square root of a negative number");
  // sqrt(n/m) = sqrt(n m) / m
  Z nm = x.get_num() * x.get_den();
  if (!mpz_fits_slong_p(nm.get_mpz_t())) throw NumericGuard("radicand too large");
  long s, f;
  split_square(nm.get_si(), s, f);
  Q coeff(Z(s), x.get_den());
  coeff.canonicalize();
  if (f == 1) return Surd(coeff);
  return Surd(Q(0), coeff, f);
}

Surd Surd::parse(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw DomainError("empty scalar");
  // "x:surdd" after whitespace removal
  if (auto p = s.find(":surd"); p != std::string::npos) {
    Q x = parse_rational(s.substr(0, p));
    std::string d = s.substr(p + 5);
    if (d.empty() || !std::all_of(d.begin(), d.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw DomainError("malformed surd '" + raw + "'");
    return Surd(Q(0), x, std::stol(d));
  }
  auto sq = s.find("sqrt(");
  if (sq == std::string::npos) return Surd(parse_rational(s));
  auto close = s.find(')', sq);
  if (close == std::string::npos || close + 1 != s.size()) throw DomainError("malformed surd '" + raw + "'");
  std::string d = s.substr(sq + 5, close - sq - 5);
  if (d.empty() || !std::all_of(d.begin(), d.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw DomainError("malformed radicand in '" + raw + "'");
  std::string head = s.substr(0, sq);  // "", "-", "a+", "a-", "a+r*", "r*"
  Q q = 0, r = 1;
  if (!head.empty() && head.back() == '*') {
    head.pop_back();
    auto split = head.find_last_of("+-");
    if (split == std::string::npos || split == 0) {
      r = parse_rational(head);
      head.clear();
    } else {
      r = parse_rational(head.substr(split));
      head = head.substr(0, split);
    }
    if (!head.empty()) q = parse_rational(head);
  } else if (!head.empty()) {
    char sign = head.back();
    if (sign != '+' && sign != '-') throw DomainError("malformed surd '" + raw + "'");
    if (sign == '-') r = -1;
    head.pop_back();
    if (!head.empty()) q = parse_rational(head);
  }
  return Surd(q, r, std::stol(d));
}

Q Surd::to_rational() const {
  if (!is_rational()) throw DomainError(str() + " is irrational");
  return q_;
}

int Surd::sign() const {
  int sq = sgn(q_), sr = sgn(r_);
  if (sr == 0) return sq;
  if (sq == 0 || sq == sr) return sr;
  // opposite signs: compare q^2 with r^2 d
  Q lhs = q_ * q_, rhs = r_ * r_ * d_;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sq : sr;
}

double Surd::to_double() const { return q_.get_d() + r_.get_d() * std::sqrt(static_cast<double>(d_)); }

std::string Surd::str() const {
  if (is_rational()) return q_.get_str();
  std::string out;
  if (q_ != 0) out = q_.get_str() + (r_ > 0 ? "+" : "-");
  else if (r_ < 0) out = "-";
  Q ar = ::abs(r_);
  if (ar != 1) out += ar.get_str() + "*";
  return out + "sqrt(" + std::to_string(d_) + ")";
}

Surd operator+(const Surd& a, const Surd& b) {
  return Surd(a.q_ + b.q_, a.r_ + b.r_, common_field(a, b));
}

Surd operator-(const Surd& a, const Surd& b) { return a + (-b); }

Surd operator*(const Surd& a, const Surd& b) {
  long d = common_field(a, b);
  return Surd(a.q_ * b.q_ + a.r_ * b.r_ * d, a.q_ * b.r_ + a.r_ * b.q_, d);
}

Surd operator/(const Surd& a, const Surd& b) {
  long d = common_field(a, b);
  Q norm = b.q_ * b.q_ - b.r_ * b.r_ * d;
  if (norm == 0) throw DomainError("division by zero");
  Surd conj(b.q_ / norm, -b.r_ / norm, d);
  return a * conj;
}

Surd abs(const Surd& x) { return x.sign() < 0 ? -x : x; }

Z floor_sqrt(const Surd& x) {
  if (x.sign() < 0) throw DomainError("floor_sqrt of a negative number");
  double approx = std::sqrt(x.to_double());
  Z n(std::floor(approx));
  if (n < 0) n = 0;
  while (n > 0 && Surd(Q(n * n)) > x) --n;
  while (Surd(Q((n + 1) * (n + 1))) <= x) ++n;
  return n;
}

bool integer_square(const Surd& x, Z& root) {
  if (!x.is_rational()) return false;
  Q v = x.to_rational();
  if (v < 0 || !is_integer(v) || !mpz_perfect_square_p(v.get_num_mpz_t())) return false;
  mpz_sqrt(root.get_mpz_t(), v.get_num_mpz_t());
  return true;
}

}  // namespace liespec
