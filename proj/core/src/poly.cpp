#include "cuspsyz/poly.hpp"

#include <mutex>
#include <sstream>

#include "cuspsyz/error.hpp"

namespace cuspsyz {

std::size_t monomial_count(unsigned d) { return static_cast<std::size_t>(d + 1) * (d + 2) / 2; }

const std::vector<Exponent>& monomials(unsigned degree) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<Exponent>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(degree);
  if (it != cache.end()) return it->second;
  std::vector<Exponent> out;
  for (unsigned i = degree + 1; i-- > 0;)
    for (unsigned j = degree - i + 1; j-- > 0;) out.push_back({i, j, degree - i - j});
  return cache.emplace(degree, std::move(out)).first->second;
}

std::size_t monomial_index(const Exponent& e) {
  std::size_t d = e[0] + e[1] + e[2];
  std::size_t n = d - e[0];
  return n * (n + 1) / 2 + (n - e[1]);
}

HomogeneousPoly HomogeneousPoly::monomial(Field field, const Exponent& e, const Scalar& c) {
  HomogeneousPoly f(field, e[0] + e[1] + e[2]);
  f.set(e, c);
  return f;
}

HomogeneousPoly HomogeneousPoly::variable(Field field, int i) {
  Exponent e{0, 0, 0};
  e[i] = 1;
  return monomial(field, e, field.one());
}

HomogeneousPoly HomogeneousPoly::from_coefficients(Field field, unsigned degree, const Vector& coeffs) {
  const auto& mons = monomials(degree);
  if (coeffs.size() != mons.size()) fail(ErrorKind::MalformedInput, "coefficient vector has wrong length");
  HomogeneousPoly f(field, degree);
  for (std::size_t i = 0; i < mons.size(); ++i) f.set(mons[i], coeffs[i]);
  return f;
}

HomogeneousPoly HomogeneousPoly::random(Field field, unsigned degree, Rng& rng) {
  HomogeneousPoly f(field, degree);
  for (const auto& e : monomials(degree)) f.set(e, field.random(rng));
  return f;
}

Scalar HomogeneousPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? field_.zero() : it->second;
}

void HomogeneousPoly::set(const Exponent& e, const Scalar& c) {
  if (e[0] + e[1] + e[2] != degree_) fail(ErrorKind::MalformedInput, "term degree differs from polynomial degree");
  if (c.field() != field_) fail(ErrorKind::MalformedInput, "coefficient from a different field");
  if (c.is_zero())
    terms_.erase(e);
  else
    terms_[e] = c;
}

void HomogeneousPoly::add_term(const Exponent& e, const Scalar& c) { set(e, coefficient(e) + c); }

Vector HomogeneousPoly::coefficients() const {
  Vector v(monomial_count(degree_), field_.zero());
  for (const auto& [e, c] : terms_) v[monomial_index(e)] = c;
  return v;
}

void HomogeneousPoly::check_compatible(const HomogeneousPoly& o, bool same_degree) const {
  if (field_ != o.field_) fail(ErrorKind::MalformedInput, "polynomials over different fields");
  if (same_degree && degree_ != o.degree_)
    fail(ErrorKind::MalformedInput, "sum of forms of different degrees");
}

HomogeneousPoly HomogeneousPoly::operator+(const HomogeneousPoly& o) const {
  check_compatible(o, true);
  HomogeneousPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

HomogeneousPoly HomogeneousPoly::operator-(const HomogeneousPoly& o) const {
  check_compatible(o, true);
  HomogeneousPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

HomogeneousPoly HomogeneousPoly::operator*(const HomogeneousPoly& o) const {
  check_compatible(o, false);
  HomogeneousPoly r(field_, degree_ + o.degree_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
  return r;
}

HomogeneousPoly HomogeneousPoly::operator*(const Scalar& c) const {
  HomogeneousPoly r(field_, degree_);
  for (const auto& [e, a] : terms_) r.set(e, a * c);
  return r;
}

HomogeneousPoly HomogeneousPoly::pow(unsigned n) const {
  HomogeneousPoly r = monomial(field_, {0, 0, 0}, field_.one());
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

HomogeneousPoly HomogeneousPoly::derivative(int var) const {
  HomogeneousPoly r(field_, degree_ ? degree_ - 1 : 0);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    --f[var];
    r.add_term(f, c * field_.from_int(e[var]));
  }
  return r;
}

HomogeneousPoly HomogeneousPoly::linear_substitute(const std::array<std::array<Scalar, 3>, 3>& L) const {
  std::array<HomogeneousPoly, 3> lin{HomogeneousPoly(field_, 1), HomogeneousPoly(field_, 1),
                                     HomogeneousPoly(field_, 1)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Exponent e{0, 0, 0};
      e[j] = 1;
      lin[i].set(e, L[i][j]);
    }
  std::array<std::vector<HomogeneousPoly>, 3> powers;
  for (int i = 0; i < 3; ++i) {
    powers[i].push_back(monomial(field_, {0, 0, 0}, field_.one()));
    for (unsigned k = 1; k <= degree_; ++k) powers[i].push_back(powers[i].back() * lin[i]);
  }
  HomogeneousPoly r(field_, degree_);
  for (const auto& [e, c] : terms_) r = r + powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]] * c;
  return r;
}

Scalar HomogeneousPoly::evaluate(const std::array<Scalar, 3>& z) const {
  std::array<std::vector<Scalar>, 3> pw;
  for (int i = 0; i < 3; ++i) {
    pw[i].push_back(field_.one());
    for (unsigned k = 1; k <= degree_; ++k) pw[i].push_back(pw[i].back() * z[i]);
  }
  Scalar s = field_.zero();
  for (const auto& [e, c] : terms_) s += c * pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]];
  return s;
}

Scalar HomogeneousPoly::evaluate(const ProjPoint& p) const { return evaluate(p.coords()); }

std::string HomogeneousPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  static const char* names[3] = {"x", "y", "z"};
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string();
    for (int i = 0; i < 3; ++i)
      if (e[i]) os << "*" << names[i] << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
  }
  return os.str();
}

ProjPoint::ProjPoint(Scalar x, Scalar y, Scalar z) : c_{std::move(x), std::move(y), std::move(z)} {
  Field f = c_[0].field();
  if (c_[1].field() != f || c_[2].field() != f)
    fail(ErrorKind::MalformedInput, "point coordinates from different fields");
  int i = 0;
  while (i < 3 && c_[i].is_zero()) ++i;
  if (i == 3) fail(ErrorKind::MalformedInput, "(0:0:0) is not a projective point");
  Scalar inv = c_[i].inverse();
  for (auto& c : c_) c *= inv;
}

int ProjPoint::chart() const {
  for (int i = 0; i < 3; ++i)
    if (!c_[i].is_zero()) return i;
  return -1;
}

bool operator<(const ProjPoint& a, const ProjPoint& b) {
  for (int i = 0; i < 3; ++i) {
    if (canonical_less(a.c_[i], b.c_[i])) return true;
    if (canonical_less(b.c_[i], a.c_[i])) return false;
  }
  return false;
}

std::string ProjPoint::to_string() const {
  return "(" + c_[0].to_string() + ":" + c_[1].to_string() + ":" + c_[2].to_string() + ")";
}

std::vector<ProjPoint> all_points(const Field& field) {
  if (!field.is_prime_field()) fail(ErrorKind::Precondition, "cannot enumerate P^2 over Q");
  std::uint64_t p = field.characteristic();
  std::vector<ProjPoint> out;
  out.reserve(p * p + p + 1);
  out.emplace_back(field.zero(), field.zero(), field.one());
  for (std::uint64_t z = 0; z < p; ++z) out.emplace_back(field.zero(), field.one(), Scalar(z, p));
  for (std::uint64_t y = 0; y < p; ++y)
    for (std::uint64_t z = 0; z < p; ++z) out.emplace_back(field.one(), Scalar(y, p), Scalar(z, p));
  return out;
}

}  // namespace cuspsyz
