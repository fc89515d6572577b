#include <algorithm>
#include <functional>

#include "cuspsyz/error.hpp"
#include "cuspsyz/sequences.hpp"

namespace cuspsyz {

namespace {

bool strongly_admissible_at(const AdmissibleSeq& s, int d0, MPolicy policy) {
  if (s.a.size() != s.b.size() + 1 || s.a.back() != d0) return false;
  for (int x : s.a)
    if (x <= 0) return false;
  for (int x : s.b)
    if (x <= 0) return false;
  return is_strongly(s, policy);
}

AdmissibleSeq with(const AdmissibleSeq& base, std::vector<int> a, std::vector<int> b) {
  AdmissibleSeq s = base;
  s.a = std::move(a);
  s.b = std::move(b);
  return reduce(s);
}

// Candidate moves in the order they are tried; indices 0-based.
void candidates(const AdmissibleSeq& s, const std::function<bool(AdmissibleSeq)>& accept) {
  const int K = 5 * static_cast<int>(s.k);
  const int r = static_cast<int>(s.r);
  const int t = static_cast<int>(s.t());
  const int D0 = s.d0();
  const auto& a = s.a;
  const auto& b = s.b;

  // Raise the first a_i below 5k-1 (i < r-1) at the expense of a later a_j.
  int i1 = -1;
  for (int i = 0; i <= t; ++i)
    if (a[i] < K - 1) {
      i1 = i;
      break;
    }
  if (i1 >= 0 && i1 < r - 1)
    for (int j = t; j > i1; --j)
      if (a[j] > D0) {
        auto na = a;
        ++na[i1];
        --na[j];
        if (accept(with(s, na, b))) return;
      }
  // Lower a_i and b_{i+1} together past the first r syzygies.
  for (int i = r - 1; i < t - 1; ++i)
    if (i >= 0 && a[i] > D0) {
      auto na = a;
      auto nb = b;
      --na[i];
      --nb[i + 1];
      if (accept(with(s, na, nb))) return;
    }
  // Replace the last (5k-1, 5k) pair beyond rank r by (D0, D0+1).
  if (t > r && r >= 1 && a[r - 1] == K - 1) {
    int ia = -1, jb = -1;
    for (int j = 0; j <= t; ++j)
      if (a[j] == K - 1) ia = j;
    for (int j = 0; j < t; ++j)
      if (b[j] == K) jb = j;
    if (ia >= 0 && jb >= 0) {
      auto na = a;
      auto nb = b;
      na[ia] = D0;
      nb[jb] = D0 + 1;
      if (accept(with(s, na, nb))) return;
    }
  }
  // Move a unit from a middle b_i to the last b.
  for (int i = r; i < t - 1; ++i)
    if (i >= 1 && b[i] - b[t - 1] >= 2 && b[i] - a[i - 1] >= 2) {
      auto nb = b;
      --nb[i];
      ++nb[t - 1];
      if (accept(with(s, a, nb))) return;
    }
  // Split off a new (D0, D0+1) pair from the last b that is not D0+1.
  int last = -1;
  for (int i = 0; i < t; ++i)
    if (b[i] != D0 + 1) last = i;
  if (last >= r) {
    auto na = a;
    auto nb = b;
    --nb[last];
    nb.push_back(D0 + 1);
    na.push_back(D0);
    std::sort(na.rbegin(), na.rend());
    std::sort(nb.rbegin(), nb.rend());
    accept(with(s, na, nb));
  }
}

// Members of the three target families with the given (k, r, D0).
std::vector<AdmissibleSeq> shape_family(const AdmissibleSeq& base) {
  const int K = 5 * static_cast<int>(base.k);
  const int r = static_cast<int>(base.r);
  const int D0 = base.d0();
  std::vector<AdmissibleSeq> out;
  if (base.k == 1 && r == 3 && D0 == 3) out.push_back(with(base, {4, 4, 4, 3}, {5, 5, 5}));
  for (int w = 0; w < r; ++w) {
    int rest = r * K - (K - 1) * w - D0 * (r - w);
    if (rest >= D0 && (rest < K - 1 || (w == 0 && rest <= K - 1))) {
      std::vector<int> a(w, K - 1);
      a.push_back(rest);
      a.insert(a.end(), r - w, D0);
      std::sort(a.rbegin(), a.rend());
      out.push_back(with(base, a, std::vector<int>(r, K)));
    }
    for (int t = r; t <= K + 1; ++t) {
      std::vector<int> a(w, K - 1);
      a.insert(a.end(), t + 1 - w, D0);
      std::vector<int> b(r, K);
      b.insert(b.end(), t - r, D0 + 1);
      long long sa = 0, sb = 0;
      for (int x : a) sa += x;
      for (int x : b) sb += x;
      if (sa == sb) out.push_back(with(base, a, b));
    }
  }
  return out;
}

}  // namespace

int normal_form_shape(const AdmissibleSeq& s) {
  const int K = 5 * static_cast<int>(s.k);
  const std::size_t r = s.r, t = s.t();
  const int D0 = s.d0();
  if (s.a.size() != t + 1) return 0;
  if (s.k == 1 && r == 3 && s.a == std::vector<int>{4, 4, 4, 3} && s.b == std::vector<int>{5, 5, 5}) return 1;
  std::size_t w = std::count(s.a.begin(), s.a.end(), K - 1);
  if (w > r - 1 || r == 0) return 0;
  bool all_b_top = std::all_of(s.b.begin(), s.b.end(), [&](int x) { return x == K; });
  if (t == r && all_b_top && std::all_of(s.a.begin() + w + 1, s.a.end(), [&](int x) { return x == D0; })) return 2;
  if (t < r) return 0;
  bool shape3 = std::all_of(s.b.begin(), s.b.begin() + r, [&](int x) { return x == K; }) &&
                std::all_of(s.b.begin() + r, s.b.end(), [&](int x) { return x == D0 + 1; }) &&
                std::all_of(s.a.begin(), s.a.begin() + w, [&](int x) { return x == K - 1; }) &&
                std::all_of(s.a.begin() + w, s.a.end(), [&](int x) { return x == D0; });
  return shape3 ? 3 : 0;
}

NormalFormResult strong_normal_form_traced(const AdmissibleSeq& seq, MPolicy policy) {
  if (!is_strongly(seq, policy))
    fail(ErrorKind::Precondition, "strong normal form needs a strongly admissible sequence: " + seq.to_string());
  const int D0 = seq.d0();
  NormalFormResult res;
  res.seq = reduce(seq);
  const long long c_in = res.seq.c_value();
  for (;;) {
    if ((res.shape = normal_form_shape(res.seq))) return res;
    bool moved = false;
    candidates(res.seq, [&](AdmissibleSeq next) {
      if (!strongly_admissible_at(next, D0, policy) || next.c_value() >= res.seq.c_value()) return false;
      res.seq = std::move(next);
      ++res.steps;
      moved = true;
      return true;
    });
    if (!moved) break;
  }
  std::optional<AdmissibleSeq> best;
  for (auto& cand : shape_family(res.seq))
    if (strongly_admissible_at(cand, D0, policy) && (!best || cand.c_value() < best->c_value())) best = cand;
  if (!best || best->c_value() > c_in)
    fail(ErrorKind::Falsification, "no normal form with c <= " + std::to_string(c_in) + " for " + seq.to_string());
  res.seq = *best;
  res.shape = normal_form_shape(res.seq);
  res.shape_search = true;
  return res;
}

AdmissibleSeq strong_normal_form(const AdmissibleSeq& seq, MPolicy policy) {
  return strong_normal_form_traced(seq, policy).seq;
}

}  // namespace cuspsyz
