#include "cuspsyz/surd.hpp"

#include <cmath>
#include <sstream>

#include "cuspsyz/error.hpp"

namespace cuspsyz {

namespace {

int sgn(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

Integer pow10(unsigned digits) {
  Integer r = 1;
  for (unsigned i = 0; i < digits; ++i) r *= 10;
  return r;
}

}  // namespace

QuadraticSurd::QuadraticSurd(Rational u, Rational v, Integer n)
    : u_(std::move(u)), v_(std::move(v)), n_(std::move(n)) {
  if (n_ < 0) fail(ErrorKind::Precondition, "negative radicand");
  if (n_ == 0) v_ = 0;
}

void QuadraticSurd::check_radicand(const QuadraticSurd& o) const {
  if (v_ != 0 && o.v_ != 0 && n_ != o.n_)
    fail(ErrorKind::MalformedInput, "surd arithmetic across different radicands");
}

QuadraticSurd QuadraticSurd::operator+(const QuadraticSurd& o) const {
  check_radicand(o);
  return QuadraticSurd(u_ + o.u_, v_ + o.v_, v_ != 0 ? n_ : o.n_);
}

QuadraticSurd QuadraticSurd::operator-(const QuadraticSurd& o) const {
  check_radicand(o);
  return QuadraticSurd(u_ - o.u_, v_ - o.v_, v_ != 0 ? n_ : o.n_);
}

QuadraticSurd QuadraticSurd::operator*(const QuadraticSurd& o) const {
  check_radicand(o);
  Integer n = v_ != 0 ? n_ : o.n_;
  return QuadraticSurd(u_ * o.u_ + v_ * o.v_ * Rational(n), u_ * o.v_ + v_ * o.u_, n);
}

int QuadraticSurd::sign() const {
  int su = sgn(u_), sv = sgn(v_);
  if (sv == 0) return su;
  if (su == 0) return sv;
  if (su == sv) return su;
  Rational lhs = u_ * u_, rhs = v_ * v_ * Rational(n_);
  if (lhs > rhs) return su;
  if (lhs < rhs) return sv;
  return 0;
}

double QuadraticSurd::approx() const { return u_.get_d() + v_.get_d() * std::sqrt(Rational(n_).get_d()); }

Integer QuadraticSurd::floor() const {
  Integer m(std::floor(approx()));
  while ((*this - Rational(m)).sign() < 0) m -= 1;
  while ((*this - Rational(m + 1)).sign() >= 0) m += 1;
  return m;
}

Integer QuadraticSurd::ceil() const { return -(-*this).floor(); }

std::string QuadraticSurd::to_string() const {
  std::ostringstream os;
  os << u_.get_str();
  if (v_ != 0) os << (v_ > 0 ? "+" : "-") << Rational(abs(v_)).get_str() << "*sqrt(" << n_.get_str() << ")";
  return os.str();
}

Integer floor_minus_sqrt(const QuadraticSurd& P, const QuadraticSurd& alpha, const Rational& scale) {
  if (alpha.sign() < 0) fail(ErrorKind::Precondition, "square root of a negative quantity");
  if (scale <= 0) fail(ErrorKind::Precondition, "nonpositive scale");
  auto holds = [&](const Integer& m) {
    QuadraticSurd y = P - Rational(m) / scale;
    return y.sign() >= 0 && (y * y - alpha).sign() >= 0;
  };
  double est = (P.approx() - std::sqrt(std::max(0.0, alpha.approx()))) * scale.get_d();
  Integer m(std::floor(est));
  while (!holds(m)) m -= 1;
  while (holds(m + 1)) m += 1;
  return m;
}

Integer sqrt_bracket(const QuadraticSurd& alpha, unsigned digits) {
  if (alpha.sign() < 0) fail(ErrorKind::Precondition, "square root of a negative quantity");
  Integer s = pow10(digits);
  QuadraticSurd scaled = alpha * Rational(s * s);
  auto below = [&](const Integer& m) { return (scaled - Rational(m * m)).sign() >= 0; };
  Integer m(std::floor(std::sqrt(std::max(0.0, scaled.approx()))));
  if (m < 0) m = 0;
  while (m > 0 && !below(m)) m -= 1;
  while (below(m + 1)) m += 1;
  return m;
}

}  // namespace cuspsyz
