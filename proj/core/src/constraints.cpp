#include "cuspsyz/constraints.hpp"

#include <algorithm>
#include <sstream>

#include "cuspsyz/error.hpp"

namespace cuspsyz {

namespace {

const char* kVarNames[kVarCount] = {"s", "k", "r", "A", "D0", "D1", "D2"};

SymPoly V(Var v) { return SymPoly::var(v); }
SymPoly Q(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return SymPoly(q);
}

}  // namespace

SymPoly::SymPoly(const Rational& c) {
  if (c != 0) terms_[Monomial{}] = c;
}

SymPoly SymPoly::var(Var v) {
  SymPoly p;
  Monomial m{};
  m[static_cast<std::size_t>(v)] = 1;
  p.terms_[m] = 1;
  return p;
}

void SymPoly::add(const Monomial& m, const Rational& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
  SymPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add(m, c);
  return r;
}

SymPoly SymPoly::operator-() const {
  SymPoly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

SymPoly SymPoly::operator-(const SymPoly& o) const { return *this + (-o); }

SymPoly SymPoly::operator*(const SymPoly& o) const {
  SymPoly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m;
      for (std::size_t i = 0; i < kVarCount; ++i) m[i] = static_cast<unsigned char>(m1[i] + m2[i]);
      r.add(m, c1 * c2);
    }
  return r;
}

SymPoly SymPoly::substitute(Var v, const SymPoly& by) const {
  const std::size_t vi = static_cast<std::size_t>(v);
  SymPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest[vi] = 0;
    SymPoly term;
    term.terms_[rest] = c;
    for (unsigned e = 0; e < m[vi]; ++e) term = term * by;
    r = r + term;
  }
  return r;
}

SymPoly SymPoly::bind(const std::map<Var, Rational>& values) const {
  SymPoly r = *this;
  for (const auto& [v, x] : values) r = r.substitute(v, SymPoly(x));
  return r;
}

Rational SymPoly::evaluate(const std::map<Var, Rational>& values) const {
  SymPoly r = bind(values);
  for (const auto& [m, c] : r.terms_)
    if (m != Monomial{}) fail(ErrorKind::Internal, "unbound variable in " + r.to_string());
  return r.terms_.empty() ? Rational(0) : r.terms_.begin()->second;
}

Rational SymPoly::coefficient_in_s(unsigned e) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 1; i < kVarCount; ++i)
      if (m[i]) fail(ErrorKind::Internal, "coefficient_in_s needs all parameters bound: " + to_string());
    if (m[0] == e) sum += c;
  }
  return sum;
}

unsigned SymPoly::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m[static_cast<std::size_t>(v)]);
  return d;
}

std::string SymPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    os << (first ? "" : " + ") << c.get_str();
    first = false;
    for (std::size_t i = 0; i < kVarCount; ++i)
      if (m[i]) os << "*" << kVarNames[i] << (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
  }
  return os.str();
}

SymPoly binom2(const SymPoly& x) { return (x + 1) * (x + 2) * Q(1, 2); }

SymPoly h1_closed() {
  SymPoly s = V(Var::s), k = V(Var::k), r = V(Var::r), A = V(Var::A), D2 = V(Var::D2);
  return -(D2 * s) - r + 1 + 5 * k * r - r * A - D2 + D2 * A - Q(15, 2) * k + Q(3, 2) * A + Q(1, 2) * A * A +
         Q(25, 2) * k * k - 5 * k * A;
}

SymPoly h2a_closed() {
  SymPoly s = V(Var::s), D0 = V(Var::D0), D2 = V(Var::D2);
  return D2 * s + Q(1, 2) * D0 * D0 + Q(1, 2) * D0 - D2 * (D0 - 1);
}

SymPoly h2a_printed() {
  SymPoly s = V(Var::s), D0 = V(Var::D0), D2 = V(Var::D2);
  return D2 * s + Q(1, 2) * D0 * D0 + Q(1, 2) * D0 - D2 * (D0 + 1);
}

SymPoly h2a_definition() {
  SymPoly s = V(Var::s), D0 = V(Var::D0), D2 = V(Var::D2);
  return binom2(s) - binom2(s - D0) + (D0 - D2) * (binom2(s - D0 - 1) - binom2(s - D0));
}

SymPoly h2b_closed() {
  SymPoly s = V(Var::s), A = V(Var::A), D1 = V(Var::D1), D2 = V(Var::D2);
  return D2 * s + Q(1, 2) * (D1 - D1 * D1) + D1 * A - D2 * (A - 1);
}

SymPoly h3_closed() {
  SymPoly s = V(Var::s), A = V(Var::A), D1 = V(Var::D1), D2 = V(Var::D2);
  return (D1 - D2) * s + (D1 - D2) * (1 - A);
}

SymPoly hC_closed() {
  SymPoly s = V(Var::s), D1 = V(Var::D1);
  return D1 * s - Q(1, 2) * D1 * (D1 - 3);
}

std::vector<IdentityCheck> symbolic_identities() {
  std::vector<IdentityCheck> out;
  SymPoly lhs = h2b_closed(), rhs = hC_closed() - h3_closed();
  out.push_back({"h2b_eq_hC_minus_h3", lhs == rhs, "h2b - (hC - h3) = " + (lhs - rhs).to_string()});

  SymPoly diff = h2a_closed() - h2a_definition();
  out.push_back({"h2a_matches_definition", diff.is_zero(), "difference " + diff.to_string()});

  SymPoly k = V(Var::k), r = V(Var::r), D0 = V(Var::D0), D2 = V(Var::D2);
  SymPoly locus = (h2a_closed() - h2b_closed()).substitute(Var::D1, D0).substitute(Var::A, 5 * k + r - 1 - D2);
  SymPoly factored = (D0 - D2) * (D0 + 1 - r - 5 * k + D2);
  out.push_back({"h2a_h2b_locus_factorization", locus == factored,
                 "h2a - h2b = " + locus.to_string() + " vs (D0-D2)(D0+1-r-5k+D2)"});
  return out;
}

std::optional<int> d2_equals_r_min_d0(unsigned k, unsigned r) {
  const long K = 5 * static_cast<long>(k);
  for (long d0 = r; d0 <= K - 1; ++d0) {
    std::map<Var, Rational> at{{Var::k, Rational(static_cast<long>(k))},
                               {Var::r, Rational(static_cast<long>(r))},
                               {Var::D2, Rational(static_cast<long>(r))},
                               {Var::D0, Rational(d0)},
                               {Var::D1, Rational(d0)},
                               {Var::A, Rational(K - 1)},
                               {Var::s, Rational(0)}};
    Rational h1 = h1_closed().evaluate(at);
    Rational h2 = std::max(h2a_closed().evaluate(at), h2b_closed().evaluate(at));
    if (h1 + h2 <= Rational(3 * static_cast<long>(k) * d0)) return static_cast<int>(d0);
  }
  return std::nullopt;
}

std::vector<int> ConstraintReport::failed() const {
  std::vector<int> f;
  for (std::size_t i = 0; i < conditions.size(); ++i)
    if (!conditions[i]) f.push_back(static_cast<int>(i) + 1);
  return f;
}

ConstraintState closed_form_state(unsigned k, unsigned r, long long A, long long D0, long long D1, long long D2) {
  ConstraintState st;
  st.k = k;
  st.r = r;
  st.A = A;
  st.D0 = D0;
  st.D1 = D1;
  st.D2 = D2;
  st.s0 = D1 - D2;
  return st;
}

ConstraintState literal_state(const AdmissibleSeq& seq, long long D1, std::optional<std::vector<int>> c,
                              std::optional<std::vector<int>> d) {
  validate_shape(seq);
  const std::size_t t = seq.t();
  std::size_t i0 = 0;
  while (i0 + 1 < t && seq.a[i0] <= seq.b[i0 + 1]) ++i0;
  if (i0 + 1 >= t) fail(ErrorKind::Precondition, "sequence is strongly admissible: " + seq.to_string());
  ConstraintState st;
  st.k = seq.k;
  st.r = seq.r;
  st.i0 = static_cast<long long>(i0) + 1;
  st.A = seq.a[i0];
  st.D0 = seq.d0();
  st.D2 = 0;
  for (std::size_t i = 0; i <= i0; ++i) st.D2 += seq.b[i] - seq.a[i];
  st.w = std::count(seq.a.begin(), seq.a.begin() + static_cast<long>(i0) + 1, 5 * static_cast<int>(seq.k) - 1);
  st.D1 = D1;
  st.a = seq.a;
  st.b = seq.b;
  if (!c || !d) {
    long long n = std::max<long long>(0, D1 - st.D2);
    c = std::vector<int>(static_cast<std::size_t>(n), static_cast<int>(st.A));
    d = std::vector<int>(static_cast<std::size_t>(n), static_cast<int>(st.A) + 1);
  }
  if (c->size() != d->size()) fail(ErrorKind::MalformedInput, "c and d must have equal length");
  st.c = c;
  st.d = d;
  st.s0 = static_cast<long long>(c->size());
  return st;
}

ConstraintReport constraint_system(const ConstraintState& st) {
  ConstraintReport rep;
  const long long K = 5LL * st.k;
  const Rational k(static_cast<long>(st.k));
  SymPoly s = V(Var::s);
  SymPoly h1, h2a, h2b, h3, hC;
  std::map<Var, Rational> params{{Var::k, k},
                                 {Var::r, Rational(static_cast<long>(st.r))},
                                 {Var::A, Rational(static_cast<long>(st.A))},
                                 {Var::D0, Rational(static_cast<long>(st.D0))},
                                 {Var::D1, Rational(static_cast<long>(st.D1))},
                                 {Var::D2, Rational(static_cast<long>(st.D2))}};
  hC = hC_closed().bind(params);
  auto& c = rep.conditions;
  if (st.a && st.b && st.c && st.d) {
    rep.literal = true;
    const auto& a = *st.a;
    const auto& b = *st.b;
    const std::size_t t = b.size();
    const std::size_t i0 = static_cast<std::size_t>(st.i0);
    SymPoly p1 = 0, p2 = binom2(s) - binom2(s - SymPoly(static_cast<long>(st.D0))), p3 = 0;
    for (std::size_t i = 0; i < t; ++i) {
      SymPoly term = binom2(s - SymPoly(static_cast<long>(b[i]))) - binom2(s - SymPoly(static_cast<long>(a[i])));
      if (i < i0)
        p1 = p1 + term;
      else
        p2 = p2 + term;
    }
    for (std::size_t j = 0; j < st.c->size(); ++j)
      p3 = p3 + binom2(s - SymPoly(static_cast<long>((*st.c)[j]))) - binom2(s - SymPoly(static_cast<long>((*st.d)[j])));
    h1 = p1;
    h2a = h2b = p2;
    h3 = p3;

    c[0] = std::all_of(a.begin(), a.begin() + static_cast<long>(i0), [&](int x) { return x >= st.A; });
    c[1] = std::all_of(b.begin() + static_cast<long>(i0), b.end(), [&](int x) { return x < st.A; });
    c[2] = true;
    for (std::size_t i = 0; i < t; ++i)
      if (!(st.D0 <= a[i] && a[i] < b[i] && b[i] <= K)) c[2] = false;
    c[3] = t >= st.r && std::all_of(b.begin(), b.begin() + st.r, [&](int x) { return x == K; });
    long long diff = 0;
    for (std::size_t i = 0; i < t; ++i) diff += b[i] - a[i];
    c[4] = a.back() == st.D0 && diff == st.D0;
    long long extra = 0;
    c[5] = true;
    for (std::size_t j = 0; j < st.c->size(); ++j) {
      if (!(st.A <= (*st.c)[j] && (*st.c)[j] < (*st.d)[j])) c[5] = false;
      extra += (*st.d)[j] - (*st.c)[j];
    }
    c[5] = c[5] && st.D1 == st.D2 + extra;
    c[6] = true;
    for (std::size_t i = 0; i + 1 < i0; ++i)
      if (a[i] > b[i + 1]) c[6] = false;
    long long d2 = 0;
    for (std::size_t i = 0; i < i0; ++i) d2 += b[i] - a[i];
    c[7] = d2 == st.D2;
  } else {
    h1 = h1_closed().bind(params);
    h2a = h2a_closed().bind(params);
    h2b = h2b_closed().bind(params);
    h3 = h3_closed().bind(params);
    for (int i = 0; i < 8; ++i) c[i] = true;  // encoded in the closed forms
  }
  c[8] = st.r <= st.D2 && st.D2 <= st.D1 && st.D1 <= st.D0 && st.D0 <= st.A && st.A <= K - 1;

  // h2 = max(h2a, h2b) pointwise; both have slope D2 in s.
  auto at = [](const SymPoly& p, long long x) { return p.bind({{Var::s, Rational(static_cast<long>(x))}}).coefficient_in_s(0); };
  SymPoly sum_a = h1 + h2a, sum_b = h1 + h2b;
  bool flat = sum_a.coefficient_in_s(1) == 0 && sum_b.coefficient_in_s(1) == 0 && sum_a.degree_in(Var::s) <= 1 &&
              sum_b.degree_in(Var::s) <= 1;
  rep.h12 = std::max(at(sum_a, 0), at(sum_b, 0));
  SymPoly q = h1 - h3 + hC;
  bool flat_q = q.degree_in(Var::s) == 0;
  rep.h1_h3_hC = at(q, 0);
  rep.h2_at = std::max(at(h2a, st.A - 1), at(h2b, st.A - 1));
  rep.hC_at = at(hC, st.A - 1);
  c[9] = flat && rep.h12 <= Rational(3 * static_cast<long>(st.k) * static_cast<long>(st.D0));
  Rational miyaoka(45 * static_cast<long>(st.k) * static_cast<long>(st.k) - 9 * static_cast<long>(st.k), 4);
  miyaoka.canonicalize();
  c[10] = flat && rep.h12 <= miyaoka;
  c[11] = flat_q && rep.h1_h3_hC <= Rational(3 * static_cast<long>(st.k) * static_cast<long>(st.D1));
  c[12] = rep.h2_at >= rep.hC_at;
  rep.all = std::all_of(c.begin(), c.end(), [](bool x) { return x; });
  return rep;
}

std::string FeasibilityReport::summary() const {
  if (feasible) return "constraints satisfiable with D1=" + std::to_string(*witness_d1);
  std::ostringstream os;
  os << "excluded:";
  for (const auto& [d1, bad] : violations) {
    os << " D1=" << d1 << " fails (";
    for (std::size_t i = 0; i < bad.size(); ++i) os << (i ? "," : "") << bad[i];
    os << ")";
  }
  if (violations.empty()) os << " no D1 in [D2, D0]";
  return os.str();
}

FeasibilityReport constraint_feasibility(const AdmissibleSeq& seq) {
  FeasibilityReport rep;
  ConstraintState base = literal_state(seq, 0);
  for (long long d1 = base.D2; d1 <= base.D0; ++d1) {
    ConstraintReport cr = constraint_system(literal_state(seq, d1));
    if (cr.all) {
      rep.feasible = true;
      rep.witness_d1 = d1;
      rep.violations.clear();
      return rep;
    }
    rep.violations.emplace_back(d1, cr.failed());
  }
  return rep;
}

NonStrongOutcome non_strong_reduction(const AdmissibleSeq& seq, const NonStrongOptions& opts) {
  AdmissibilityReport ar = is_admissible(seq, opts.enumerate.policy);
  if (!ar.admissible) fail(ErrorKind::Precondition, "sequence is not admissible: " + seq.to_string());
  if (ar.strongly) fail(ErrorKind::Precondition, "sequence is already strongly admissible: " + seq.to_string());
  AdmissibleSeq red = reduce(seq);
  NonStrongOutcome out;
  if (is_strongly(red, opts.enumerate.policy)) {
    // cancelling values can restore strength; nothing more to search
    out.status = NonStrongOutcome::Status::Reduced;
    out.strong = red;
    return out;
  }
  if (opts.gate_on_constraints) {
    out.feasibility = constraint_feasibility(red);
    if (!out.feasibility.feasible) {
      out.status = NonStrongOutcome::Status::ExcludedByConstraints;
      return out;
    }
  }
  std::vector<AdmissibleSeq> found = enumerate_strongly_admissible(seq.k, seq.r, seq.c_value(), opts.enumerate);
  if (found.empty())
    fail(ErrorKind::Falsification, "no strongly admissible sequence of rank " + std::to_string(2 * seq.r) +
                                       " with c <= " + std::to_string(seq.c_value()) + " for " + seq.to_string());
  const AdmissibleSeq* best = &found.front();
  for (const auto& s : found)
    if (s.c_value() < best->c_value()) best = &s;
  out.status = NonStrongOutcome::Status::Reduced;
  out.strong = *best;
  return out;
}

}  // namespace cuspsyz
