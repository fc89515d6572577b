#include "cuspsyz/sequences.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "cuspsyz/error.hpp"

namespace cuspsyz {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

bool canonical_before(const AdmissibleSeq& x, const AdmissibleSeq& y) {
  if (x.t() != y.t()) return x.t() < y.t();
  if (x.b != y.b) return x.b < y.b;
  return x.a < y.a;
}

}  // namespace

long long AdmissibleSeq::c_value() const {
  long long s = 0;
  for (int x : b) s += static_cast<long long>(x) * x;
  for (int x : a) s -= static_cast<long long>(x) * x;
  return s / 2;
}

std::string AdmissibleSeq::to_string() const {
  return "k=" + std::to_string(k) + " r=" + std::to_string(r) + " a=(" + join(a) + ") b=(" + join(b) + ")";
}

void validate_shape(const AdmissibleSeq& seq) {
  if (seq.k == 0) fail(ErrorKind::MalformedInput, "k must be positive");
  if (seq.a.size() != seq.b.size() + 1)
    fail(ErrorKind::MalformedInput, "need t+1 generator degrees for t syzygy degrees: " + seq.to_string());
  for (int x : seq.a)
    if (x <= 0) fail(ErrorKind::MalformedInput, "nonpositive entry in a: " + seq.to_string());
  for (int x : seq.b)
    if (x <= 0) fail(ErrorKind::MalformedInput, "nonpositive entry in b: " + seq.to_string());
  if (!std::is_sorted(seq.a.rbegin(), seq.a.rend()) || !std::is_sorted(seq.b.rbegin(), seq.b.rend()))
    fail(ErrorKind::MalformedInput, "lists must be descending: " + seq.to_string());
}

const std::array<const char*, 7>& AdmissibilityReport::clause_names() {
  static const std::array<const char*, 7> names{"sum_a_eq_sum_b", "a_lt_b",  "descending", "last_a_is_d0",
                                                "b_le_5k",        "r_top_b", "c_bound"};
  return names;
}

AdmissibilityReport is_admissible(const AdmissibleSeq& seq, MPolicy policy) {
  return is_admissible(seq, m_bound(6 * seq.k, policy));
}

AdmissibilityReport is_admissible(const AdmissibleSeq& seq, long long m_cap) {
  validate_shape(seq);
  AdmissibilityReport rep;
  const int K = 5 * static_cast<int>(seq.k);
  const std::size_t t = seq.t();
  long long sa = 0, sb = 0;
  for (int x : seq.a) sa += x;
  for (int x : seq.b) sb += x;
  rep.clauses[0] = sa == sb;
  rep.clauses[1] = true;
  for (std::size_t i = 0; i < t; ++i)
    if (seq.a[i] >= seq.b[i]) rep.clauses[1] = false;
  rep.clauses[2] = true;
  rep.clauses[3] = !seq.declared_d0 || *seq.declared_d0 == seq.d0();
  rep.clauses[4] = std::all_of(seq.b.begin(), seq.b.end(), [&](int x) { return x <= K; });
  rep.clauses[5] = static_cast<std::size_t>(std::count(seq.b.begin(), seq.b.end(), K)) >= seq.r;
  long long cap = std::min<long long>(m_cap, 3LL * seq.k * seq.d0());
  rep.clauses[6] = rep.clauses[0] && seq.c_value() <= cap;
  rep.admissible = std::all_of(rep.clauses.begin(), rep.clauses.end(), [](bool x) { return x; });
  bool strong = true;
  for (std::size_t i = 0; i + 1 < t; ++i)
    if (seq.a[i] > seq.b[i + 1]) strong = false;
  rep.strongly = rep.admissible && strong;
  rep.reduced = is_reduced(seq);
  return rep;
}

bool is_strongly(const AdmissibleSeq& seq, MPolicy policy) { return is_admissible(seq, policy).strongly; }

bool is_reduced(const AdmissibleSeq& seq) {
  for (int x : seq.a)
    if (std::find(seq.b.begin(), seq.b.end(), x) != seq.b.end()) return false;
  return true;
}

AdmissibleSeq reduce(const AdmissibleSeq& seq) {
  AdmissibleSeq out = seq;
  std::sort(out.a.rbegin(), out.a.rend());
  std::sort(out.b.rbegin(), out.b.rend());
  for (;;) {
    bool changed = false;
    for (auto it = out.b.begin(); it != out.b.end(); ++it) {
      auto jt = std::find(out.a.begin(), out.a.end(), *it);
      if (jt != out.a.end()) {
        out.a.erase(jt);
        out.b.erase(it);
        changed = true;
        break;
      }
    }
    if (!changed) return out;
  }
}

namespace {

struct Search {
  int K, D0, t, r;
  long long cap;
  bool strong, reduced;
  std::size_t max_nodes;
  std::atomic<std::size_t>* nodes;
  std::atomic<bool>* exhausted;
  std::vector<int> a, b;
  std::vector<AdmissibleSeq>* out;
  unsigned k;

  bool used(int v) const {
    return std::find(a.begin(), a.end(), v) != a.end() || std::find(b.begin(), b.end(), v) != b.end();
  }

  // Pair i (0-based) with rem = D0 - sum of earlier b_j - a_j; c2 = twice
  // sum of e_j(2a_j + e_j)/2 so far, i.e. sum(b_j^2 - a_j^2).
  void step(int i, int rem, long long c2) {
    if (exhausted->load(std::memory_order_relaxed)) return;
    if (nodes->fetch_add(1, std::memory_order_relaxed) >= max_nodes) {
      exhausted->store(true);
      return;
    }
    if (i == t) {
      if (rem != 0) return;
      long long c = (c2 - static_cast<long long>(D0) * D0) / 2;
      if (c > cap) return;
      AdmissibleSeq s;
      s.k = k;
      s.r = static_cast<unsigned>(r);
      s.a = a;
      s.a.push_back(D0);
      s.b = b;
      out->push_back(std::move(s));
      return;
    }
    const int pairs_left = t - i;
    const int b_hi = i == 0 ? K : b[i - 1];
    const int b_lo = i < r ? K : D0 + 1;
    for (int bi = b_hi; bi >= b_lo; --bi) {
      if (strong && i > 0 && a[i - 1] > bi) break;
      if (reduced && std::find(a.begin(), a.end(), bi) != a.end()) continue;
      const int a_hi = std::min(i == 0 ? K - 1 : a[i - 1], bi - 1);
      const int e_max = rem - (pairs_left - 1);
      int a_lo = std::max(D0, bi - e_max);
      if (i == t - 1) a_lo = std::max(a_lo, bi - rem);
      for (int ai = a_hi; ai >= a_lo; --ai) {
        int e = bi - ai;
        if (i == t - 1 && e != rem) continue;
        if (reduced && (std::find(b.begin(), b.end(), ai) != b.end() || ai == bi)) continue;
        long long c2n = c2 + static_cast<long long>(bi) * bi - static_cast<long long>(ai) * ai;
        int rem_n = rem - e;
        // Each later pair adds at least e(2 D0 + e) >= 2 D0 e + e to c2.
        long long lower = c2n + static_cast<long long>(rem_n) * (2 * D0 + 1) - static_cast<long long>(D0) * D0;
        if (lower > 2 * cap) continue;
        a.push_back(ai);
        b.push_back(bi);
        step(i + 1, rem_n, c2n);
        a.pop_back();
        b.pop_back();
      }
    }
  }
};

}  // namespace

EnumerateResult enumerate_sequences(unsigned k, unsigned r, long long c_cap, const EnumerateOptions& opts) {
  if (k == 0 || r == 0) fail(ErrorKind::Precondition, "k and r must be positive");
  const int K = 5 * static_cast<int>(k);
  const long long M = opts.m_override.value_or(m_bound(6 * k, opts.policy));
  std::atomic<std::size_t> nodes{0};
  std::atomic<bool> exhausted{false};
  std::vector<int> d0s;
  for (int D0 = 1; D0 < K; ++D0) d0s.push_back(D0);
  unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(d0s.size())));
  std::vector<std::vector<AdmissibleSeq>> found(threads);
  auto work = [&](unsigned w) {
    for (std::size_t n = w; n < d0s.size(); n += threads) {
      int D0 = d0s[n];
      long long cap = std::min({c_cap, M, 3LL * k * D0});
      if (cap < 0) continue;
      // t <= D0 since the t differences b_i - a_i are positive and sum to D0
      for (int t = std::max<int>(1, static_cast<int>(r)); t <= D0; ++t) {
        Search s{K, D0, t, static_cast<int>(r), cap, opts.strong_only, opts.reduced_only, opts.max_nodes,
                 &nodes, &exhausted, {}, {}, &found[w], k};
        s.step(0, D0, 0);
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  EnumerateResult res;
  for (auto& chunk : found)
    for (auto& s : chunk) res.sequences.push_back(std::move(s));
  // Final clause-by-clause check of everything the search produced.
  std::vector<AdmissibleSeq> kept;
  for (auto& s : res.sequences) {
    AdmissibilityReport rep = is_admissible(s, M);
    if (!rep.admissible) continue;
    if (opts.strong_only && !rep.strongly) continue;
    if (opts.reduced_only && !rep.reduced) continue;
    kept.push_back(std::move(s));
  }
  res.sequences = std::move(kept);
  std::sort(res.sequences.begin(), res.sequences.end(), canonical_before);
  res.complete = !exhausted.load();
  res.nodes = nodes.load();
  return res;
}

std::vector<AdmissibleSeq> enumerate_strongly_admissible(unsigned k, unsigned r, long long c_cap,
                                                         const EnumerateOptions& opts) {
  EnumerateOptions o = opts;
  o.strong_only = true;
  EnumerateResult res = enumerate_sequences(k, r, c_cap, o);
  if (!res.complete)
    fail(ErrorKind::Resource, "enumeration budget of " + std::to_string(opts.max_nodes) + " nodes exhausted after " +
                                  std::to_string(res.sequences.size()) + " sequences (partial result)");
  return std::move(res.sequences);
}

}  // namespace cuspsyz
