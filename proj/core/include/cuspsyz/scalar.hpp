#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <variant>

#include "cuspsyz/rng.hpp"

namespace cuspsyz {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

bool is_prime(std::uint64_t n);

struct Residue {
  std::uint64_t value;
  std::uint64_t modulus;
};

class Scalar;

// Either Q (modulus 0) or F_p for a prime 3 < p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  bool is_prime_field() const { return p_ != 0; }
  std::uint64_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long n) const;
  Scalar from_integer(const Integer& n) const;
  Scalar from_rational(const Rational& q) const;
  // Uniform element of F_p; over Q a uniform integer in [-bound, bound].
  Scalar random(Rng& rng, std::uint64_t bound = 50) const;

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  explicit Scalar(Rational q) : v_(std::move(q)) {}
  Scalar(std::uint64_t value, std::uint64_t modulus);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const;
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar inverse() const;
  Scalar pow(unsigned e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  // Total order used for canonical point ordering: residues by value,
  // rationals by magnitude.
  friend bool canonical_less(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  std::variant<Rational, Residue> v_;
};

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);

}  // namespace cuspsyz
