#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cuspsyz/sequences.hpp"

namespace cuspsyz {

// Polynomials over Q in the fixed variables of the constraint system.
enum class Var { s, k, r, A, D0, D1, D2 };
constexpr std::size_t kVarCount = 7;

class SymPoly {
 public:
  using Monomial = std::array<unsigned char, kVarCount>;

  SymPoly() = default;
  SymPoly(const Rational& c);  // NOLINT: constants convert implicitly
  SymPoly(long c) : SymPoly(Rational(c)) {}
  SymPoly(int c) : SymPoly(Rational(c)) {}
  static SymPoly var(Var v);

  SymPoly operator+(const SymPoly& o) const;
  SymPoly operator-(const SymPoly& o) const;
  SymPoly operator-() const;
  SymPoly operator*(const SymPoly& o) const;

  SymPoly substitute(Var v, const SymPoly& by) const;
  SymPoly bind(const std::map<Var, Rational>& values) const;
  // Every variable must be bound.
  Rational evaluate(const std::map<Var, Rational>& values) const;
  // Coefficient of s^e once all other variables are bound.
  Rational coefficient_in_s(unsigned e) const;
  unsigned degree_in(Var v) const;

  bool is_zero() const { return terms_.empty(); }
  friend SymPoly operator+(int c, const SymPoly& x) { return SymPoly(c) + x; }
  friend SymPoly operator-(int c, const SymPoly& x) { return SymPoly(c) - x; }
  friend SymPoly operator*(int c, const SymPoly& x) { return SymPoly(c) * x; }
  friend bool operator==(const SymPoly& x, const SymPoly& y) { return x.terms_ == y.terms_; }
  std::string to_string() const;

 private:
  void add(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

// (x+1)(x+2)/2
SymPoly binom2(const SymPoly& x);

// Closed forms in s of the Hilbert-polynomial differences of the non-strong
// case.
SymPoly h1_closed();
SymPoly h2a_closed();
SymPoly h2a_printed();  // with the -D2(D0+1) constant as usually displayed
SymPoly h2a_definition();  // B(s)-B(s-D0)+(D0-D2)(B(s-D0-1)-B(s-D0))
SymPoly h2b_closed();
SymPoly h3_closed();
SymPoly hC_closed();

struct IdentityCheck {
  std::string name;
  bool holds;
  std::string detail;
};
// h2b = hC - h3; h2a matches its defining expression; the h2a = h2b locus
// factorization under D1=D0, A=5k+r-1-D2.
std::vector<IdentityCheck> symbolic_identities();

// Smallest D0 in [r, 5k-1] with h1 + max(h2a, h2b) <= 3k D0 on the branch
// D2=r, D1=D0, A=5k-1 (nullopt if none).
std::optional<int> d2_equals_r_min_d0(unsigned k, unsigned r);

struct ConstraintState {
  unsigned k = 1, r = 1;
  long long A = 0, D0 = 0, D1 = 0, D2 = 0;
  long long i0 = 0, w = 0, s0 = 0;
  // Literal data; when absent the closed forms are used.
  std::optional<std::vector<int>> a, b, c, d;
};

struct ConstraintReport {
  std::array<bool, 13> conditions{};
  bool all = false;
  bool literal = false;
  Rational h12;       // h1 + h2 (constant in s)
  Rational h1_h3_hC;  // h1 - h3 + hC
  Rational h2_at, hC_at;  // at s = A-1
  std::vector<int> failed() const;
};

// Closed-form state from parameters.
ConstraintState closed_form_state(unsigned k, unsigned r, long long A, long long D0, long long D1, long long D2);
// Literal state of a reduced non-strong sequence. Without explicit (c, d)
// the most lenient choice c_j = A, d_j = A+1 (D1-D2 of them) is used.
ConstraintState literal_state(const AdmissibleSeq& seq, long long D1, std::optional<std::vector<int>> c = {},
                              std::optional<std::vector<int>> d = {});
ConstraintReport constraint_system(const ConstraintState& state);

struct FeasibilityReport {
  bool feasible = false;
  std::optional<long long> witness_d1;
  std::vector<std::pair<long long, std::vector<int>>> violations;  // per D1: failed conditions
  std::string summary() const;
};
FeasibilityReport constraint_feasibility(const AdmissibleSeq& seq);

struct NonStrongOutcome {
  enum class Status { Reduced, ExcludedByConstraints } status;
  std::optional<AdmissibleSeq> strong;
  FeasibilityReport feasibility;
};

struct NonStrongOptions {
  // Only sequences satisfying the constraint system must admit a strong
  // sequence with no larger c; off means every admissible input must.
  bool gate_on_constraints = true;
  EnumerateOptions enumerate;
};

// For an admissible, not strongly admissible sequence: a strongly admissible
// sequence of the same rank with the least c (first in canonical order), or
// the report showing the sequence violates the constraint system.
// Raises falsification when none exists, resource on budget overrun.
NonStrongOutcome non_strong_reduction(const AdmissibleSeq& seq, const NonStrongOptions& opts = {});

}  // namespace cuspsyz
