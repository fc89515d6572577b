#include "cuspsyz/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cuspsyz/constraints.hpp"
#include "cuspsyz/error.hpp"
#include "cuspsyz/io.hpp"
#include "cuspsyz/verify.hpp"

namespace cuspsyz {

namespace {

struct Common {
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string format = "json";
  std::string out;
};

void add_common(CLI::App* cmd, Common& c, std::vector<std::string> formats) {
  cmd->add_option("--seed", c.seed, "64-bit seed for all random draws");
  cmd->add_option("--threads", c.threads, "worker threads (default: available cores)");
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember(formats));
  cmd->add_option("--out", c.out, "write output to this file instead of stdout");
}

unsigned threads_of(const Common& c) {
  if (c.threads) return c.threads;
  unsigned n = std::thread::hardware_concurrency();
  return n ? n : 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::MalformedInput, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

MPolicy parse_policy(const std::string& s) {
  if (s == "langer") return MPolicy::Langer;
  if (s == "miyaoka") return MPolicy::Miyaoka;
  return MPolicy::Default;
}

void emit(const std::string& text, const Common& c, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) fail(ErrorKind::MalformedInput, "cannot write " + c.out);
  f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cusp ideals, syzygies and Mordell-Weil rank bounds for cuspidal plane curves", "cuspsyz"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  Common resolve_c;
  std::string points_file;
  auto* resolve = app.add_subcommand("resolve", "minimal resolution of a point set");
  resolve->add_option("points", points_file, "points JSON file")->required();
  add_common(resolve, resolve_c, {"json", "table"});

  Common analyze_c;
  std::string curve_file;
  std::vector<std::uint64_t> construct_args;
  std::string analyze_policy = "default";
  auto* analyze = app.add_subcommand("analyze", "cusps, resolution and rank of a cuspidal curve");
  analyze->add_option("curve", curve_file, "curve JSON file");
  analyze->add_option("--construct", construct_args, "build the curve from k p seed")->expected(3);
  analyze->add_option("--policy", analyze_policy)->check(CLI::IsMember({"default", "langer", "miyaoka"}));
  add_common(analyze, analyze_c, {"json", "table"});

  Common construct_c;
  unsigned construct_k = 1;
  std::uint64_t construct_p = 31;
  std::size_t construct_target = 0;
  unsigned construct_attempts = 200;
  auto* construct = app.add_subcommand("construct", "random curve f1^3 + f2^2 with rational cusps");
  construct->add_option("--k", construct_k)->required();
  construct->add_option("--p", construct_p)->required();
  construct->add_option("--cusps", construct_target, "required cusp count (default 6k^2)");
  construct->add_option("--attempts", construct_attempts);
  add_common(construct, construct_c, {"json"});

  Common bounds_c;
  unsigned k_max = 10, r_max = 6, enum_k_max = 0;
  std::string bounds_policy = "default";
  std::size_t bounds_budget = 50'000'000;
  auto* bounds = app.add_subcommand("bounds", "cusp-count and rank bound table");
  bounds->add_option("--k-max", k_max)->check(CLI::Range(1u, 1000u));
  bounds->add_option("--r-max", r_max)->check(CLI::Range(1u, 100u));
  bounds->add_option("--enumerate", enum_k_max, "add exhaustive minima for k up to this value");
  bounds->add_option("--policy", bounds_policy)->check(CLI::IsMember({"default", "langer", "miyaoka"}));
  bounds->add_option("--budget-nodes", bounds_budget);
  add_common(bounds, bounds_c, {"json", "csv", "table"});

  Common search_c;
  unsigned search_k = 1, search_r = 1;
  long long c_cap = -1;
  std::size_t search_budget = 50'000'000;
  bool include_weak = false;
  long long m_cap = -1;
  std::string search_policy = "default";
  auto* search = app.add_subcommand("search", "enumerate strongly admissible sequences");
  search->add_option("--k", search_k)->required()->check(CLI::PositiveNumber);
  search->add_option("--r", search_r)->required()->check(CLI::PositiveNumber);
  search->add_option("--c-cap", c_cap, "largest c (default M(6k))");
  search->add_option("--budget-nodes", search_budget);
  search->add_option("--m-cap", m_cap, "replace the cusp bound M(6k) in the admissibility test");
  search->add_flag("--include-weak", include_weak, "also list admissible sequences that are not strong");
  search->add_option("--policy", search_policy)->check(CLI::IsMember({"default", "langer", "miyaoka"}));
  add_common(search, search_c, {"json", "csv"});

  Common scale_c;
  std::string scale_file;
  unsigned scale_w = 2, scale_trials = 20;
  std::string scale_family = "power";
  auto* scale = app.add_subcommand("scale", "check Betti data scaling under pullback by a degree-w map");
  scale->add_option("points", scale_file)->required();
  scale->add_option("--w", scale_w)->check(CLI::Range(1u, 20u));
  scale->add_option("--trials", scale_trials);
  scale->add_option("--family", scale_family)->check(CLI::IsMember({"power", "generic"}));
  add_common(scale, scale_c, {"json"});

  Common verify_c;
  verify_c.seed = SuiteOptions{}.seed;
  std::string suite = "paper";
  std::vector<int> only;
  bool no_time = false;
  auto* verify = app.add_subcommand("verify", "run the reproduction suite");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"paper"}));
  verify->add_option("--only", only, "criterion ids");
  verify->add_flag("--no-time-limits", no_time);
  add_common(verify, verify_c, {"json", "table"});

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(ErrorKind::MalformedInput);
  }

  try {
    if (*resolve) {
      std::string text = read_file(points_file);
      auto pts = parse_points(text);
      Resolution res = cuspsyz::resolve(pts);
      Meta m{"resolve", resolve_c.seed, {{points_file, sha256_hex(text)}}, {}};
      emit(resolve_c.format == "table" ? resolution_text(res) : resolution_json(res, m), resolve_c, out);
      return 0;
    }
    if (*analyze) {
      AnalyzeOptions ao;
      ao.scan.threads = threads_of(analyze_c);
      ao.policy = parse_policy(analyze_policy);
      ao.seed = analyze_c.seed;
      CurveSpec curve;
      Meta m{"analyze", analyze_c.seed, {}, {{"policy", analyze_policy}}};
      if (!construct_args.empty()) {
        if (!curve_file.empty()) fail(ErrorKind::MalformedInput, "give a curve file or --construct, not both");
        if (construct_args[0] == 0 || construct_args[0] > 100) fail(ErrorKind::MalformedInput, "k out of range");
        ConstructOptions co;
        co.scan.threads = ao.scan.threads;
        curve = construct_cuspidal(static_cast<unsigned>(construct_args[0]), construct_args[1], construct_args[2], 0,
                                   co)
                    .curve;
        ao.seed = construct_args[2];
        m.seed = construct_args[2];
        m.params.emplace_back("construct", std::to_string(construct_args[0]) + " " + std::to_string(construct_args[1]) +
                                               " " + std::to_string(construct_args[2]));
      } else {
        if (curve_file.empty()) fail(ErrorKind::MalformedInput, "analyze needs a curve file or --construct k p seed");
        std::string text = read_file(curve_file);
        curve = parse_curve(text);
        m.inputs.emplace_back(curve_file, sha256_hex(text));
      }
      RankReport rep = analyze_curve(curve, ao);
      emit(analyze_c.format == "table" ? rank_report_text(rep) : rank_report_json(rep, m), analyze_c, out);
      bool all = std::all_of(rep.checks.begin(), rep.checks.end(), [](const Check& c) { return c.pass; });
      if (!all) {
        err << "error: a consistency check failed\n";
        return exit_code_for(ErrorKind::Contradiction);
      }
      return 0;
    }
    if (*construct) {
      ConstructOptions co;
      co.scan.threads = threads_of(construct_c);
      co.max_attempts = construct_attempts;
      CuspidalCurve c = construct_cuspidal(construct_k, construct_p, construct_c.seed, construct_target, co);
      Meta m{"construct", construct_c.seed, {}, {{"k", std::to_string(construct_k)}, {"p", std::to_string(construct_p)}}};
      emit(curve_json(c.curve, &c.cusps, &m), construct_c, out);
      return 0;
    }
    if (*bounds) {
      EnumerateOptions eo;
      eo.threads = threads_of(bounds_c);
      eo.max_nodes = bounds_budget;
      BoundsTable t = bounds_table(k_max, r_max, enum_k_max, parse_policy(bounds_policy), eo);
      Meta m{"bounds", bounds_c.seed, {}, {{"k_max", std::to_string(k_max)}, {"r_max", std::to_string(r_max)},
                                           {"enumerate", std::to_string(enum_k_max)}, {"policy", bounds_policy}}};
      std::string text = bounds_c.format == "csv"     ? bounds_csv(t)
                         : bounds_c.format == "table" ? bounds_text(t)
                                                      : bounds_json(t, m);
      emit(text, bounds_c, out);
      return 0;
    }
    if (*search) {
      EnumerateOptions eo;
      eo.threads = threads_of(search_c);
      eo.max_nodes = search_budget;
      eo.policy = parse_policy(search_policy);
      eo.strong_only = !include_weak;
      if (m_cap >= 0) eo.m_override = m_cap;
      long long cap = c_cap >= 0 ? c_cap : eo.m_override.value_or(m_bound(6 * search_k, eo.policy));
      EnumerateResult res = enumerate_sequences(search_k, search_r, cap, eo);
      if (!res.complete) fail(ErrorKind::Resource, "node budget exhausted; raise --budget-nodes");
      Meta m{"search", search_c.seed, {}, {{"k", std::to_string(search_k)}, {"r", std::to_string(search_r)},
                                           {"c_cap", std::to_string(cap)}, {"include_weak", include_weak ? "1" : "0"}, {"m_cap", std::to_string(m_cap)},
                                           {"policy", search_policy}}};
      emit(search_c.format == "csv" ? search_csv(res) : search_json(res, search_k, search_r, cap, m), search_c, out);
      return 0;
    }
    if (*scale) {
      std::string text = read_file(scale_file);
      auto pts = parse_points(text);
      ScaledReport rep = scaled_resolution_check(pts, scale_w, scale_trials, scale_c.seed,
                                                 scale_family == "generic" ? MapFamily::Generic
                                                                           : MapFamily::PowerComposite);
      Meta m{"scale", scale_c.seed, {{scale_file, sha256_hex(text)}},
             {{"w", std::to_string(scale_w)}, {"trials", std::to_string(scale_trials)}, {"family", scale_family}}};
      emit(scaled_report_json(rep, m), scale_c, out);
      return rep.verdict == "mismatch" ? exit_code_for(ErrorKind::Falsification) : 0;
    }
    if (*verify) {
      SuiteOptions so;
      so.seed = verify_c.seed;
      so.threads = threads_of(verify_c);
      so.only = only;
      so.enforce_time = !no_time;
      auto results = run_reproduction_suite(so);
      Meta m{"verify", so.seed, {}, {{"suite", suite}}};
      emit(verify_c.format == "table" ? verify_text(results) : verify_json(results, m), verify_c, out);
      bool all = std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.pass; });
      return all ? 0 : exit_code_for(ErrorKind::Falsification);
    }
  } catch (const Error& e) {
    err << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code_for(ErrorKind::Internal);
  }
  return exit_code_for(ErrorKind::Internal);
}

}  // namespace cuspsyz
