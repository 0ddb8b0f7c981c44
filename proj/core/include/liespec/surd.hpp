#pragma once

#include <string>

#include "liespec/rational.hpp"

namespace liespec {

// q + r sqrt(d) with d squarefree >= 2, or a rational (d = 0, r = 0).
class Surd {
 public:
  Surd() = default;
  Surd(const Q& q) : q_(q) {}  // NOLINT(google-explicit-constructor)
  Surd(int q) : q_(q) {}       // NOLINT(google-explicit-constructor)
  Surd(const Q& q, const Q& r, long d);

  // "3/2", "1/2:surd 2" (= (1/2) sqrt 2), "1+2*sqrt(3)", "sqrt(2)", "-sqrt(5)/2" is not supported.
  static Surd parse(const std::string& s);
  static Surd sqrt_of(const Q& x);  // sqrt(x) for x >= 0 when it lies in some Q(sqrt d)

  const Q& rational_part() const { return q_; }
  const Q& surd_part() const { return r_; }
  long field() const { return d_; }
  bool is_rational() const { return r_ == 0; }
  Q to_rational() const;
  int sign() const;
  double to_double() const;
  std::string str() const;

  Surd operator-() const { return Surd(-q_, -r_, d_); }
  friend Surd operator+(const Surd& a, const Surd& b);
  friend Surd operator-(const Surd& a, const Surd& b);
  friend Surd operator*(const Surd& a, const Surd& b);
  friend Surd operator/(const Surd& a, const Surd& b);
  friend bool operator==(const Surd& a, const Surd& b) { return (a - b).sign() == 0; }
  friend bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }
  friend bool operator<(const Surd& a, const Surd& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Surd& a, const Surd& b) { return b < a; }
  friend bool operator<=(const Surd& a, const Surd& b) { return !(b < a); }
  friend bool operator>=(const Surd& a, const Surd& b) { return !(a < b); }

 private:
  void normalize();
  Q q_ = 0, r_ = 0;
  long d_ = 0;
};

Surd abs(const Surd& x);
// Largest integer n >= 0 with n^2 <= x (x >= 0).
Z floor_sqrt(const Surd& x);
// True if x is a nonnegative rational perfect square of an integer; sets root.
bool integer_square(const Surd& x, Z& root);

}  // namespace liespec
