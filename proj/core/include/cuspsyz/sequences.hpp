#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cuspsyz/bounds.hpp"

namespace cuspsyz {

// Candidate degree data (a_1..a_{t+1}; b_1..b_t) for the cusp ideal of a
// degree-6k curve whose elliptic threefold has rank 2r.
struct AdmissibleSeq {
  unsigned k = 1;
  unsigned r = 1;
  std::vector<int> a;
  std::vector<int> b;
  std::optional<int> declared_d0;

  std::size_t t() const { return b.size(); }
  int d0() const { return a.empty() ? 0 : a.back(); }
  // (sum b^2 - sum a^2)/2, always an integer when sum a = sum b.
  long long c_value() const;
  std::string to_string() const;
  friend bool operator==(const AdmissibleSeq& x, const AdmissibleSeq& y) {
    return x.k == y.k && x.r == y.r && x.a == y.a && x.b == y.b;
  }
};

// Raises a malformed-input error for wrong lengths, nonpositive entries or
// lists that are not descending.
void validate_shape(const AdmissibleSeq& seq);

struct AdmissibilityReport {
  // sum a = sum b; a_i < b_i; descending; a_{t+1} = D0; b_i <= 5k;
  // #{b_i = 5k} >= r; c <= min(M(6k), 3k D0)
  std::array<bool, 7> clauses{};
  bool admissible = false;
  bool strongly = false;  // admissible and a_i <= b_{i+1} for i < t
  bool reduced = false;   // {a} and {b} disjoint
  static const std::array<const char*, 7>& clause_names();
};

AdmissibilityReport is_admissible(const AdmissibleSeq& seq, MPolicy policy = MPolicy::Default);
// Same with an explicit cusp cap in place of M(6k).
AdmissibilityReport is_admissible(const AdmissibleSeq& seq, long long m_cap);
bool is_strongly(const AdmissibleSeq& seq, MPolicy policy = MPolicy::Default);
bool is_reduced(const AdmissibleSeq& seq);

// Repeatedly cancels a value occurring in both a and b.
AdmissibleSeq reduce(const AdmissibleSeq& seq);

// 0 if none, else 1 (k=1, r=3 nine-cusp data), 2 (t=r) or 3 (b in {5k, D0+1}).
int normal_form_shape(const AdmissibleSeq& seq);

struct NormalFormResult {
  AdmissibleSeq seq;
  int shape = 0;
  std::size_t steps = 0;
  bool shape_search = false;  // local moves stalled; finished by searching the shape families
};

// Lowers c by local moves that keep the sequence strongly admissible with the
// same (k, r, D0) until it lands in one of the three shapes.
NormalFormResult strong_normal_form_traced(const AdmissibleSeq& seq, MPolicy policy = MPolicy::Default);
AdmissibleSeq strong_normal_form(const AdmissibleSeq& seq, MPolicy policy = MPolicy::Default);

struct EnumerateOptions {
  bool strong_only = true;
  bool reduced_only = true;
  std::size_t max_nodes = 50'000'000;
  unsigned threads = 1;
  MPolicy policy = MPolicy::Default;
  std::optional<long long> m_override;  // replaces M(6k) in the c clause
};

struct EnumerateResult {
  std::vector<AdmissibleSeq> sequences;  // ordered by (t, b lex, a lex)
  bool complete = true;
  std::size_t nodes = 0;
};

// All (reduced, strongly if requested) k-admissible sequences for rank 2r
// with c <= c_cap. A node budget overrun returns complete=false.
EnumerateResult enumerate_sequences(unsigned k, unsigned r, long long c_cap, const EnumerateOptions& opts = {});
// As above with strong_only; raises a resource error if the budget runs out.
std::vector<AdmissibleSeq> enumerate_strongly_admissible(unsigned k, unsigned r, long long c_cap,
                                                         const EnumerateOptions& opts = {});

}  // namespace cuspsyz
