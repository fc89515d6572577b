#include "cuspsyz/scalar.hpp"

#include "cuspsyz/error.hpp"

namespace cuspsyz {

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedInput: return "malformed-input";
    case ErrorKind::DuplicatePoint: return "duplicate-point";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::NotOnCurve: return "not-on-curve";
    case ErrorKind::InvalidMap: return "invalid-map";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::UnsupportedCurve: return "unsupported-curve";
    case ErrorKind::Contradiction: return "contradiction";
    case ErrorKind::Falsification: return "falsification";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::ConstructionFailed: return "construction-failed";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedInput:
    case ErrorKind::DuplicatePoint:
    case ErrorKind::Precondition:
    case ErrorKind::NotOnCurve:
    case ErrorKind::InvalidMap:
    case ErrorKind::Parse:
      return 2;
    case ErrorKind::UnsupportedCurve:
      return 3;
    case ErrorKind::Contradiction:
    case ErrorKind::Falsification:
      return 4;
    case ErrorKind::Resource:
    case ErrorKind::ConstructionFailed:
      return 5;
    case ErrorKind::Internal:
      return 1;
  }
  return 1;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  std::string s = text;
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  if (s.empty() || q.set_str(s, 10) != 0)
    fail(ErrorKind::Parse, "not a rational number: '" + text + "'");
  if (q.get_den() == 0) fail(ErrorKind::Parse, "zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) fail(ErrorKind::Precondition, "division by zero in F_" + std::to_string(p));
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

Field Field::prime(std::uint64_t p) {
  if (p <= 3 || p >= (std::uint64_t{1} << 31) || !is_prime(p))
    fail(ErrorKind::Precondition,
         "field characteristic must be a prime in (3, 2^31), got " + std::to_string(p));
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long n) const {
  if (!p_) return Scalar(Rational(static_cast<long>(n)));
  long long m = n % static_cast<long long>(p_);
  if (m < 0) m += static_cast<long long>(p_);
  return Scalar(static_cast<std::uint64_t>(m), p_);
}

Scalar Field::from_integer(const Integer& n) const {
  if (!p_) return Scalar(Rational(n));
  Integer m;
  mpz_fdiv_r_ui(m.get_mpz_t(), n.get_mpz_t(), p_);
  return Scalar(m.get_ui(), p_);
}

Scalar Field::from_rational(const Rational& q) const {
  if (!p_) return Scalar(q);
  return from_integer(q.get_num()) / from_integer(q.get_den());
}

Scalar Field::random(Rng& rng, std::uint64_t bound) const {
  if (p_) return Scalar(rng.uniform(p_), p_);
  long long v = static_cast<long long>(rng.uniform(2 * bound + 1)) - static_cast<long long>(bound);
  return from_int(v);
}

std::string Field::name() const { return p_ ? "F_" + std::to_string(p_) : "Q"; }

Scalar::Scalar(std::uint64_t value, std::uint64_t modulus) : v_(Residue{value % modulus, modulus}) {}


Field Scalar::field() const {
  if (is_rational()) return Field::rationals();
  return Field::prime(std::get<Residue>(v_).modulus);
}

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<Residue>(&v_)) return r->value == 0;
  return std::get<Rational>(v_) == 0;
}

bool Scalar::is_one() const {
  if (auto* r = std::get_if<Residue>(&v_)) return r->value == 1;
  return std::get<Rational>(v_) == 1;
}

const Rational& Scalar::rational() const {
  if (!is_rational()) fail(ErrorKind::MalformedInput, "scalar is not rational");
  return std::get<Rational>(v_);
}

std::uint64_t Scalar::residue() const {
  if (is_rational()) fail(ErrorKind::MalformedInput, "scalar is not a residue");
  return std::get<Residue>(v_).value;
}

namespace {

std::uint64_t common_modulus(const std::variant<Rational, Residue>& a,
                             const std::variant<Rational, Residue>& b) {
  const Residue* ra = std::get_if<Residue>(&a);
  const Residue* rb = std::get_if<Residue>(&b);
  if (!ra && !rb) return 0;
  if (!ra || !rb || ra->modulus != rb->modulus)
    fail(ErrorKind::MalformedInput, "arithmetic between scalars of different fields");
  return ra->modulus;
}

}  // namespace

Scalar Scalar::operator-() const {
  if (auto* r = std::get_if<Residue>(&v_))
    return Scalar(r->value ? r->modulus - r->value : 0, r->modulus);
  return Scalar(Rational(-std::get<Rational>(v_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (std::uint64_t p = common_modulus(v_, o.v_)) {
    auto& r = std::get<Residue>(v_);
    r.value = (r.value + std::get<Residue>(o.v_).value) % p;
  } else {
    std::get<Rational>(v_) += std::get<Rational>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (std::uint64_t p = common_modulus(v_, o.v_)) {
    auto& r = std::get<Residue>(v_);
    r.value = (r.value + p - std::get<Residue>(o.v_).value) % p;
  } else {
    std::get<Rational>(v_) -= std::get<Rational>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (std::uint64_t p = common_modulus(v_, o.v_)) {
    auto& r = std::get<Residue>(v_);
    r.value = r.value * std::get<Residue>(o.v_).value % p;
  } else {
    std::get<Rational>(v_) *= std::get<Rational>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (std::uint64_t p = common_modulus(v_, o.v_)) {
    auto& r = std::get<Residue>(v_);
    r.value = r.value * mod_inverse(std::get<Residue>(o.v_).value, p) % p;
  } else {
    if (o.is_zero()) fail(ErrorKind::Precondition, "division by zero in Q");
    std::get<Rational>(v_) /= std::get<Rational>(o.v_);
  }
  return *this;
}

Scalar Scalar::inverse() const { return field().one() / *this; }

Scalar Scalar::pow(unsigned e) const {
  if (auto* r = std::get_if<Residue>(&v_)) return Scalar(mod_pow(r->value, e, r->modulus), r->modulus);
  Rational q = std::get<Rational>(v_);
  Rational out(1);
  for (unsigned i = 0; i < e; ++i) out *= q;
  return Scalar(out);
}

bool operator==(const Scalar& a, const Scalar& b) {
  std::uint64_t p = common_modulus(a.v_, b.v_);
  if (p) return std::get<Residue>(a.v_).value == std::get<Residue>(b.v_).value;
  return std::get<Rational>(a.v_) == std::get<Rational>(b.v_);
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  std::uint64_t p = common_modulus(a.v_, b.v_);
  if (p) return std::get<Residue>(a.v_).value < std::get<Residue>(b.v_).value;
  return std::get<Rational>(a.v_) < std::get<Rational>(b.v_);
}

std::string Scalar::to_string() const {
  if (auto* r = std::get_if<Residue>(&v_)) return std::to_string(r->value);
  return std::get<Rational>(v_).get_str();
}

}  // namespace cuspsyz
