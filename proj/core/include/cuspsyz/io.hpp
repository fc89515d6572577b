#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cuspsyz/construct.hpp"
#include "cuspsyz/rank.hpp"
#include "cuspsyz/sequences.hpp"

namespace cuspsyz {

std::string tool_version();
std::string sha256_hex(std::string_view data);

// Provenance block embedded in every document the CLI writes.
struct Meta {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, sha256
  std::vector<std::pair<std::string, std::string>> params;
};

// {"p": int, "k": int, "factors": [[[coef, [i, j, l]], ...], ...], "provenance": {...}}
CurveSpec parse_curve(std::string_view json);
std::string curve_json(const CurveSpec& curve, const std::vector<ProjPoint>* cusps = nullptr,
                       const Meta* meta = nullptr);

// {"field": "Q" | {"p": int}, "points": [[x, y, z], ...]}
std::vector<ProjPoint> parse_points(std::string_view json);
std::string points_json(const std::vector<ProjPoint>& points, const Field& field);

std::string resolution_json(const Resolution& res, const Meta& meta);
std::string resolution_text(const Resolution& res);

std::string rank_report_json(const RankReport& rep, const Meta& meta);
std::string rank_report_text(const RankReport& rep);

std::string scaled_report_json(const ScaledReport& rep, const Meta& meta);

struct BoundsRow {
  unsigned k, r;
  SurdBound formula;
  std::optional<long long> enumerated_min;
  bool enumeration_ran = false;
  Integer g_half_rank_floor, g_rank_floor;
  long long m_used;
};

struct BoundsTable {
  std::vector<BoundsRow> rows;
  std::vector<GBound> g;  // one per k
  std::pair<Rational, Rational> limit_slope;
  bool half_slope_in_range = false;  // g(K)/K within [2.6, 2.8]
  bool rank_slope_in_range = false;  // rank(K)/K within [5.2, 5.5]
};

// Rows for k in [1, k_max] and r in [1, r_max]; enumerated minima for
// k <= enumerate_k_max.
BoundsTable bounds_table(unsigned k_max, unsigned r_max, unsigned enumerate_k_max, MPolicy policy,
                         const EnumerateOptions& opts);
std::string bounds_json(const BoundsTable& table, const Meta& meta);
std::string bounds_csv(const BoundsTable& table);
std::string bounds_text(const BoundsTable& table);

std::string search_json(const EnumerateResult& res, unsigned k, unsigned r, long long c_cap, const Meta& meta);
std::string search_csv(const EnumerateResult& res);

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
  double limit_seconds;
};

std::string verify_json(const std::vector<CriterionResult>& results, const Meta& meta);
std::string verify_text(const std::vector<CriterionResult>& results);

}  // namespace cuspsyz
