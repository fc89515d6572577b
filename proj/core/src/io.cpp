#include "cuspsyz/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "cuspsyz/error.hpp"
#include "json.hpp"

namespace cuspsyz {

using Json = nlohmann::ordered_json;

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
}

const Json& require(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) fail(ErrorKind::MalformedInput, std::string("missing key '") + key + "'");
  return obj.at(key);
}

std::uint64_t as_uint(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    fail(ErrorKind::MalformedInput, std::string(what) + " must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

Scalar parse_scalar(const Json& j, const Field& field) {
  if (j.is_number_integer()) return field.from_int(j.get<long long>());
  if (j.is_string()) {
    Rational q;
    try {
      q = parse_rational(j.get<std::string>());
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(ErrorKind::MalformedInput, "bad number '" + j.get<std::string>() + "'");
    }
    return field.from_rational(q);
  }
  fail(ErrorKind::MalformedInput, "coefficients and coordinates must be integers or rational strings");
}

Json scalar_json(const Scalar& s) {
  if (s.is_rational()) {
    const Rational& q = s.rational();
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return to_string(q);
  }
  return s.residue();
}

HomogeneousPoly parse_poly(const Json& j, const Field& field) {
  if (!j.is_array() || j.empty()) fail(ErrorKind::MalformedInput, "a factor must be a nonempty list of terms");
  std::optional<unsigned> degree;
  std::vector<std::pair<Exponent, Scalar>> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[1].is_array() || t[1].size() != 3)
      fail(ErrorKind::MalformedInput, "a term must be [coefficient, [i, j, l]]");
    Exponent e{};
    for (int i = 0; i < 3; ++i) e[i] = static_cast<unsigned>(as_uint(t[1][i], "exponent"));
    unsigned d = e[0] + e[1] + e[2];
    if (degree && *degree != d) fail(ErrorKind::MalformedInput, "factor is not homogeneous");
    degree = d;
    terms.emplace_back(e, parse_scalar(t[0], field));
  }
  HomogeneousPoly f(field, *degree);
  for (const auto& [e, c] : terms) f.add_term(e, c);
  if (f.is_zero()) fail(ErrorKind::MalformedInput, "factor is zero");
  return f;
}

Json poly_json(const HomogeneousPoly& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f.terms()) out.push_back(Json::array({scalar_json(c), Json::array({e[0], e[1], e[2]})}));
  return out;
}

Json point_json(const ProjPoint& pt) {
  return Json::array({scalar_json(pt[0]), scalar_json(pt[1]), scalar_json(pt[2])});
}

Json points_array(const std::vector<ProjPoint>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(point_json(p));
  return out;
}

Json meta_json(const Meta& m) {
  Json j;
  j["tool"] = "cuspsyz";
  j["version"] = tool_version();
  j["command"] = m.command;
  j["seed"] = m.seed;
  Json inputs = Json::array();
  for (const auto& [path, digest] : m.inputs) inputs.push_back({{"path", path}, {"sha256", digest}});
  j["inputs"] = inputs;
  Json params = Json::object();
  for (const auto& [k, v] : m.params) params[k] = v;
  j["params"] = params;
  return j;
}

Json betti_json(const BettiData& b) {
  Json j;
  j["a"] = b.a;
  j["b"] = b.b;
  j["t"] = b.t();
  j["points"] = b.point_count;
  return j;
}

Json surd_json(const QuadraticSurd& s) {
  Json j;
  j["u"] = to_string(s.u());
  j["v"] = to_string(s.v());
  j["radicand"] = s.radicand().get_str();
  j["floor"] = s.floor().get_str();
  return j;
}

Json surd_bound_json(const SurdBound& b) {
  if (!b.finite) return nullptr;
  Json j = surd_json(b.value);
  j["ceil"] = b.ceiling.get_str();
  return j;
}

std::string decimal(const Rational& q, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Integer n = floor_of(q * scale + Rational(1, 2));
  bool neg = n < 0;
  if (neg) n = -n;
  std::string s = n.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return (neg ? "-" : "") + s;
}

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

}  // namespace

std::string tool_version() { return CUSPSYZ_VERSION; }

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    fail(ErrorKind::Internal, "sha256 failed");
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (unsigned i = 0; i < len; ++i) os << std::setw(2) << static_cast<int>(md[i]);
  return os.str();
}

CurveSpec parse_curve(std::string_view text) {
  Json j = parse_json(text);
  if (!j.is_object()) fail(ErrorKind::MalformedInput, "curve file must be a JSON object");
  CurveSpec c;
  c.p = as_uint(require(j, "p"), "p");
  if (c.p < 5 || c.p >= (1ull << 31) || !is_prime(c.p))
    fail(ErrorKind::MalformedInput, "p must be a prime with 3 < p < 2^31");
  c.k = static_cast<unsigned>(as_uint(require(j, "k"), "k"));
  if (c.k == 0) fail(ErrorKind::MalformedInput, "k must be positive");
  const Json& fs = require(j, "factors");
  if (!fs.is_array() || fs.empty()) fail(ErrorKind::MalformedInput, "factors must be a nonempty list");
  Field field = c.field();
  for (const auto& f : fs) c.factors.push_back(parse_poly(f, field));
  if (j.contains("provenance")) {
    const Json& pv = j.at("provenance");
    if (!pv.is_object()) fail(ErrorKind::MalformedInput, "provenance must be an object");
    for (const auto& [key, val] : pv.items())
      c.provenance.emplace_back(key, val.is_string() ? val.get<std::string>() : val.dump());
  }
  if (c.degree() != 6 * c.k)
    fail(ErrorKind::MalformedInput,
         "curve degree " + std::to_string(c.degree()) + " is not 6k = " + std::to_string(6 * c.k));
  return c;
}

std::string curve_json(const CurveSpec& curve, const std::vector<ProjPoint>* cusps, const Meta* meta) {
  Json j;
  j["p"] = curve.p;
  j["k"] = curve.k;
  Json fs = Json::array();
  for (const auto& f : curve.factors) fs.push_back(poly_json(f));
  j["factors"] = fs;
  Json pv = Json::object();
  for (const auto& [k, v] : curve.provenance) pv[k] = v;
  j["provenance"] = pv;
  if (cusps) j["cusps"] = points_array(*cusps);
  if (meta) j["meta"] = meta_json(*meta);
  return dump(j);
}

std::vector<ProjPoint> parse_points(std::string_view text) {
  Json j = parse_json(text);
  const Json& fj = require(j, "field");
  Field field = Field::rationals();
  if (fj.is_string()) {
    if (fj.get<std::string>() != "Q") fail(ErrorKind::MalformedInput, "field must be \"Q\" or {\"p\": prime}");
  } else {
    std::uint64_t p = as_uint(require(fj, "p"), "p");
    if (p < 5 || p >= (1ull << 31) || !is_prime(p))
      fail(ErrorKind::MalformedInput, "p must be a prime with 3 < p < 2^31");
    field = Field::prime(p);
  }
  const Json& pts = require(j, "points");
  if (!pts.is_array()) fail(ErrorKind::MalformedInput, "points must be a list");
  std::vector<ProjPoint> out;
  for (const auto& pj : pts) {
    if (!pj.is_array() || pj.size() != 3) fail(ErrorKind::MalformedInput, "a point must have three coordinates");
    out.emplace_back(parse_scalar(pj[0], field), parse_scalar(pj[1], field), parse_scalar(pj[2], field));
  }
  auto sorted = out;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) fail(ErrorKind::DuplicatePoint, "duplicate point " + dup->to_string());
  return out;
}

std::string points_json(const std::vector<ProjPoint>& points, const Field& field) {
  Json j;
  if (field.is_prime_field())
    j["field"] = {{"p", field.characteristic()}};
  else
    j["field"] = "Q";
  j["points"] = points_array(points);
  return dump(j);
}

std::string resolution_json(const Resolution& res, const Meta& meta) {
  Json j = betti_json(res.betti);
  j["hilbert"] = res.hilbert;
  Json steps = Json::array();
  for (const auto& s : res.steps)
    steps.push_back({{"degree", s.degree},
                     {"hilbert", s.hilbert},
                     {"ideal_dim", s.ideal_dim},
                     {"ideal_from_below", s.ideal_from_below},
                     {"new_generators", s.new_generators},
                     {"syzygy_dim", s.syzygy_dim},
                     {"syzygy_from_below", s.syzygy_from_below},
                     {"new_syzygies", s.new_syzygies}});
  j["steps"] = steps;
  Json gens = Json::array();
  for (const auto& g : res.generators) gens.push_back(g.to_string());
  j["generators"] = gens;
  j["meta"] = meta_json(meta);
  return dump(j);
}

std::string resolution_text(const Resolution& res) {
  std::ostringstream os;
  os << "points " << res.betti.point_count << "\n";
  os << "a = (" << join(res.betti.a) << ")\n";
  os << "b = (" << join(res.betti.b) << ")\n";
  os << "t = " << res.betti.t() << "\n";
  os << "hilbert = " << join(res.hilbert, " ") << "\n";
  return os.str();
}

std::string rank_report_json(const RankReport& rep, const Meta& meta) {
  Json j;
  j["k"] = rep.k;
  j["betti"] = betti_json(rep.betti);
  j["defect"] = rep.defect;
  j["mw_rank"] = rep.mw_rank;
  j["alexander_exponent"] = rep.alexander_exponent;
  Json checks = Json::array();
  for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = checks;
  j["cusps"] = points_array(rep.cusps);
  j["hilbert"] = rep.hilbert;
  j["meta"] = meta_json(meta);
  return dump(j);
}

std::string rank_report_text(const RankReport& rep) {
  std::ostringstream os;
  os << "degree " << 6 * rep.k << " (k = " << rep.k << "), cusps " << rep.cusps.size() << "\n";
  os << "a = (" << join(rep.betti.a) << ")\n";
  os << "b = (" << join(rep.betti.b) << ")\n";
  os << "defect " << rep.defect << ", rank " << rep.mw_rank << ", alexander exponent " << rep.alexander_exponent
     << "\n";
  for (const auto& c : rep.checks)
    os << (c.pass ? "  ok    " : "  FAIL  ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  return os.str();
}

std::string scaled_report_json(const ScaledReport& rep, const Meta& meta) {
  Json j;
  j["w"] = rep.w;
  j["original"] = betti_json(rep.original);
  j["expected"] = betti_json(rep.expected);
  Json trials = Json::array();
  for (const auto& t : rep.trials) {
    Json e{{"outcome", t.outcome}, {"preimages", t.preimages}};
    e["betti"] = t.betti ? betti_json(*t.betti) : Json(nullptr);
    trials.push_back(e);
  }
  j["trials"] = trials;
  j["successes"] = rep.successes;
  j["mismatches"] = rep.mismatches;
  j["verdict"] = rep.verdict;
  j["meta"] = meta_json(meta);
  return dump(j);
}

BoundsTable bounds_table(unsigned k_max, unsigned r_max, unsigned enumerate_k_max, MPolicy policy,
                         const EnumerateOptions& opts) {
  if (k_max == 0) fail(ErrorKind::MalformedInput, "k-max must be positive");
  BoundsTable t;
  EnumerateOptions eo = opts;
  eo.policy = policy;
  eo.strong_only = true;
  eo.reduced_only = true;
  for (unsigned k = 1; k <= k_max; ++k) {
    GBound g = g_bound(k);
    long long m = m_bound(6 * k, policy);
    for (unsigned r = 1; r <= r_max; ++r) {
      BoundsRow row{k, r, min_cusps_formula(k, r), std::nullopt, false, g.half_rank_floor, g.rank_floor, m};
      if (k <= enumerate_k_max) {
        auto res = enumerate_sequences(k, r, m, eo);
        if (!res.complete)
          fail(ErrorKind::Resource, "enumeration budget exhausted at k=" + std::to_string(k) +
                                        " r=" + std::to_string(r));
        row.enumeration_ran = true;
        for (const auto& s : res.sequences)
          if (!row.enumerated_min || s.c_value() < *row.enumerated_min) row.enumerated_min = s.c_value();
      }
      t.rows.push_back(std::move(row));
    }
    t.g.push_back(std::move(g));
  }
  t.limit_slope = g_slope_bracket(3);
  const GBound& last = t.g.back();
  Rational K(k_max);
  t.half_slope_in_range = last.half_lo / K >= Rational(26, 10) && last.half_hi / K <= Rational(28, 10);
  t.rank_slope_in_range = last.rank_lo / K >= Rational(52, 10) && last.rank_hi / K <= Rational(55, 10);
  return t;
}

std::string bounds_json(const BoundsTable& table, const Meta& meta) {
  Json j;
  Json rows = Json::array();
  for (const auto& r : table.rows) {
    Json row;
    row["k"] = r.k;
    row["r"] = r.r;
    row["formula_lower_bound"] = surd_bound_json(r.formula);
    if (r.enumeration_ran)
      row["enumerated_min"] = r.enumerated_min ? Json(*r.enumerated_min) : Json(nullptr);
    row["g_half_rank_floor"] = r.g_half_rank_floor.get_str();
    row["g_rank_floor"] = r.g_rank_floor.get_str();
    row["M_used"] = r.m_used;
    rows.push_back(row);
  }
  j["rows"] = rows;
  Json g = Json::array();
  for (const auto& b : table.g) {
    Json e;
    e["k"] = b.k;
    e["linear"] = surd_json(b.linear);
    e["alpha"] = surd_json(b.alpha);
    e["half_rank_floor"] = b.half_rank_floor.get_str();
    e["rank_floor"] = b.rank_floor.get_str();
    e["half_rank_bracket"] = {decimal(b.half_lo, 3), decimal(b.half_hi, 3)};
    e["rank_bracket"] = {decimal(b.rank_lo, 3), decimal(b.rank_hi, 3)};
    e["half_rank_slope"] = decimal((b.half_lo + b.half_hi) / 2 / b.k, 3);
    g.push_back(e);
  }
  j["g_bound"] = g;
  Json s;
  s["limit_half_rank"] = {decimal(table.limit_slope.first, 3), decimal(table.limit_slope.second, 3)};
  s["limit_rank"] = {decimal(table.limit_slope.first * 2, 3), decimal(table.limit_slope.second * 2, 3)};
  s["half_rank_in_2.6_2.8"] = table.half_slope_in_range;
  s["rank_in_5.2_5.5"] = table.rank_slope_in_range;
  j["slope"] = s;
  j["meta"] = meta_json(meta);
  return dump(j);
}

std::string bounds_csv(const BoundsTable& table) {
  std::ostringstream os;
  os << "k,r,formula_lower_bound,formula_u,formula_v,formula_radicand,enumerated_min,g_half_rank_floor,"
        "g_rank_floor,M_used\n";
  for (const auto& r : table.rows) {
    os << r.k << "," << r.r << ",";
    if (r.formula.finite)
      os << r.formula.ceiling << "," << to_string(r.formula.value.u()) << "," << to_string(r.formula.value.v()) << ","
         << r.formula.value.radicand();
    else
      os << ",,,";
    os << ",";
    if (r.enumerated_min) os << *r.enumerated_min;
    os << "," << r.g_half_rank_floor << "," << r.g_rank_floor << "," << r.m_used << "\n";
  }
  return os.str();
}

std::string bounds_text(const BoundsTable& table) {
  std::ostringstream os;
  os << std::setw(4) << "k" << std::setw(4) << "r" << std::setw(12) << "formula" << std::setw(10) << "enum"
     << std::setw(10) << "g/2" << std::setw(10) << "g" << std::setw(8) << "M" << "\n";
  for (const auto& r : table.rows) {
    os << std::setw(4) << r.k << std::setw(4) << r.r << std::setw(12)
       << (r.formula.finite ? r.formula.ceiling.get_str() : std::string("-")) << std::setw(10)
       << (r.enumerated_min ? std::to_string(*r.enumerated_min) : std::string(r.enumeration_ran ? "none" : "-"))
       << std::setw(10) << r.g_half_rank_floor << std::setw(10) << r.g_rank_floor << std::setw(8) << r.m_used << "\n";
  }
  os << "half-rank slope limit in [" << decimal(table.limit_slope.first, 3) << ", "
     << decimal(table.limit_slope.second, 3) << "]\n";
  return os.str();
}

std::string search_json(const EnumerateResult& res, unsigned k, unsigned r, long long c_cap, const Meta& meta) {
  Json j;
  j["k"] = k;
  j["r"] = r;
  j["c_cap"] = c_cap;
  j["complete"] = res.complete;
  j["nodes"] = res.nodes;
  Json seqs = Json::array();
  for (const auto& s : res.sequences)
    seqs.push_back({{"a", s.a}, {"b", s.b}, {"t", s.t()}, {"D0", s.d0()}, {"c", s.c_value()},
                    {"shape", normal_form_shape(s)}});
  j["count"] = res.sequences.size();
  j["sequences"] = seqs;
  j["meta"] = meta_json(meta);
  return dump(j);
}

std::string search_csv(const EnumerateResult& res) {
  std::ostringstream os;
  os << "t,D0,c,a,b\n";
  for (const auto& s : res.sequences)
    os << s.t() << "," << s.d0() << "," << s.c_value() << ",\"" << join(s.a, " ") << "\",\"" << join(s.b, " ")
       << "\"\n";
  return os.str();
}

std::string verify_json(const std::vector<CriterionResult>& results, const Meta& meta) {
  Json j;
  Json arr = Json::array();
  bool all = true;
  for (const auto& r : results) {
    bool in_time = r.seconds <= r.limit_seconds;
    arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"within_time_limit", in_time},
                   {"limit_seconds", r.limit_seconds}, {"detail", r.detail}});
    all = all && r.pass;
  }
  j["criteria"] = arr;
  j["all_pass"] = all;
  j["meta"] = meta_json(meta);
  return dump(j);
}

std::string verify_text(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  for (const auto& r : results)
    os << (r.pass ? "PASS" : "FAIL") << " criterion " << std::setw(2) << r.id << " " << r.name << " ("
       << std::fixed << std::setprecision(2) << r.seconds << "s / " << std::setprecision(0) << r.limit_seconds
       << "s): " << r.detail << "\n";
  return os.str();
}

}  // namespace cuspsyz
