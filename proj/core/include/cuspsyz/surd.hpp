#pragma once

#include <string>

#include "cuspsyz/scalar.hpp"

namespace cuspsyz {

// u + v·sqrt(n) with rational u, v and a nonnegative integer radicand n.
// Signs, comparisons and floors are exact; approx() is for display only.
class QuadraticSurd {
 public:
  QuadraticSurd() : u_(0), v_(0), n_(0) {}
  QuadraticSurd(Rational u, Rational v, Integer n);
  static QuadraticSurd rational(Rational u, Integer n = 0) { return QuadraticSurd(std::move(u), 0, std::move(n)); }

  const Rational& u() const { return u_; }
  const Rational& v() const { return v_; }
  const Integer& radicand() const { return n_; }

  int sign() const;
  Integer floor() const;
  Integer ceil() const;
  double approx() const;
  std::string to_string() const;

  QuadraticSurd operator-() const { return QuadraticSurd(-u_, -v_, n_); }
  QuadraticSurd operator+(const QuadraticSurd& o) const;
  QuadraticSurd operator-(const QuadraticSurd& o) const;
  QuadraticSurd operator*(const QuadraticSurd& o) const;
  QuadraticSurd operator*(const Rational& q) const { return QuadraticSurd(u_ * q, v_ * q, n_); }
  QuadraticSurd operator/(const Rational& q) const { return QuadraticSurd(u_ / q, v_ / q, n_); }
  QuadraticSurd operator+(const Rational& q) const { return QuadraticSurd(u_ + q, v_, n_); }
  QuadraticSurd operator-(const Rational& q) const { return QuadraticSurd(u_ - q, v_, n_); }

  int compare(const QuadraticSurd& o) const { return (*this - o).sign(); }
  int compare(const Rational& q) const { return (*this - q).sign(); }
  friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) { return a.compare(b) == 0; }
  friend bool operator<(const QuadraticSurd& a, const QuadraticSurd& b) { return a.compare(b) < 0; }
  friend bool operator<=(const QuadraticSurd& a, const QuadraticSurd& b) { return a.compare(b) <= 0; }

 private:
  void check_radicand(const QuadraticSurd& o) const;
  Rational u_, v_;
  Integer n_;
};

// Elements of Q(sqrt 73), the field in which the Langer-type bounds live.
using Surd73 = QuadraticSurd;
inline Surd73 surd73(Rational u, Rational v) { return QuadraticSurd(std::move(u), std::move(v), 73); }

// floor((P - sqrt(alpha)) * scale) for P, alpha in the same quadratic field,
// alpha >= 0 and scale > 0. Exact: decided by sign tests on P - m/scale and
// (P - m/scale)^2 - alpha.
Integer floor_minus_sqrt(const QuadraticSurd& P, const QuadraticSurd& alpha, const Rational& scale = 1);

// Integer m with m^2 <= alpha * 10^(2 digits) < (m+1)^2, alpha >= 0; so
// m / 10^digits brackets sqrt(alpha) to within 10^-digits.
Integer sqrt_bracket(const QuadraticSurd& alpha, unsigned digits);

}  // namespace cuspsyz
