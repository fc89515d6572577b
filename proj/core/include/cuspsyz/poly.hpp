#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cuspsyz/matrix.hpp"
#include "cuspsyz/rng.hpp"
#include "cuspsyz/scalar.hpp"

namespace cuspsyz {

using Exponent = std::array<unsigned, 3>;

// Degree-lexicographic order on monomials of one degree: z0^d first, z2^d last.
struct DeglexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const { return a > b; }
};

std::size_t monomial_count(unsigned degree);
const std::vector<Exponent>& monomials(unsigned degree);
std::size_t monomial_index(const Exponent& e);

class ProjPoint;

class HomogeneousPoly {
 public:
  HomogeneousPoly() : field_(Field::rationals()), degree_(0) {}
  HomogeneousPoly(Field field, unsigned degree) : field_(field), degree_(degree) {}
  static HomogeneousPoly monomial(Field field, const Exponent& e, const Scalar& c);
  static HomogeneousPoly variable(Field field, int i);
  // Inverse of coefficients(): entry j is the coefficient of monomials(d)[j].
  static HomogeneousPoly from_coefficients(Field field, unsigned degree, const Vector& coeffs);
  static HomogeneousPoly random(Field field, unsigned degree, Rng& rng);

  const Field& field() const { return field_; }
  unsigned degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Scalar, DeglexGreater>& terms() const { return terms_; }
  Scalar coefficient(const Exponent& e) const;
  void set(const Exponent& e, const Scalar& c);
  void add_term(const Exponent& e, const Scalar& c);
  Vector coefficients() const;

  HomogeneousPoly operator+(const HomogeneousPoly& o) const;
  HomogeneousPoly operator-(const HomogeneousPoly& o) const;
  HomogeneousPoly operator*(const HomogeneousPoly& o) const;
  HomogeneousPoly operator*(const Scalar& c) const;
  HomogeneousPoly pow(unsigned e) const;
  HomogeneousPoly derivative(int var) const;
  // f(L z) for a 3x3 matrix L given row-wise: z_i -> sum_j L[i][j] z_j.
  HomogeneousPoly linear_substitute(const std::array<std::array<Scalar, 3>, 3>& L) const;

  Scalar evaluate(const std::array<Scalar, 3>& z) const;
  Scalar evaluate(const ProjPoint& p) const;

  friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    return a.field_ == b.field_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void check_compatible(const HomogeneousPoly& o, bool same_degree) const;
  Field field_;
  unsigned degree_;
  std::map<Exponent, Scalar, DeglexGreater> terms_;
};

// Point of P^2 normalized so that its first nonzero coordinate is 1.
class ProjPoint {
 public:
  ProjPoint(Scalar x, Scalar y, Scalar z);
  explicit ProjPoint(const std::array<Scalar, 3>& c) : ProjPoint(c[0], c[1], c[2]) {}

  const std::array<Scalar, 3>& coords() const { return c_; }
  const Scalar& operator[](int i) const { return c_[i]; }
  Field field() const { return c_[0].field(); }
  // Index of the first nonzero coordinate (the affine chart used locally).
  int chart() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b);
  std::string to_string() const;

 private:
  std::array<Scalar, 3> c_;
};

// All points of P^2(F_p) in canonical order.
std::vector<ProjPoint> all_points(const Field& field);

}  // namespace cuspsyz
