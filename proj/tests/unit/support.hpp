#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cuspsyz/poly.hpp"

namespace test {

inline std::string data(const std::string& name) { return std::string(CUSPSYZ_TEST_DATA) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline cuspsyz::ProjPoint pt(const cuspsyz::Field& f, long x, long y, long z) {
  return cuspsyz::ProjPoint(f.from_int(x), f.from_int(y), f.from_int(z));
}

inline cuspsyz::HomogeneousPoly var(const cuspsyz::Field& f, int i) { return cuspsyz::HomogeneousPoly::variable(f, i); }

inline cuspsyz::HomogeneousPoly constant(const cuspsyz::Field& f, long c) {
  return cuspsyz::HomogeneousPoly::monomial(f, {0, 0, 0}, f.from_int(c));
}

// Random distinct points of P^2(F_p).
inline std::vector<cuspsyz::ProjPoint> random_points(const cuspsyz::Field& f, std::size_t n, cuspsyz::Rng& rng) {
  std::vector<cuspsyz::ProjPoint> out;
  while (out.size() < n) {
    cuspsyz::Scalar x = f.random(rng), y = f.random(rng), z = f.random(rng);
    if (x.is_zero() && y.is_zero() && z.is_zero()) continue;
    cuspsyz::ProjPoint p(x, y, z);
    bool dup = false;
    for (const auto& q : out) dup = dup || q == p;
    if (!dup) out.push_back(p);
  }
  return out;
}

}  // namespace test
