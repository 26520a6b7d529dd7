// Command-line front end: batch verification, scans, orbits and data dumps.
//
//   linedyn verify [--case id]* [--seed N] [--jobs K] [--json out.jsonl]
//   linedyn scan --n {7,8} --p P --stat {degree,orbit-lengths}
//   linedyn orbit --n N --p P --point a,b,c --max M
//   linedyn dump --n N --what {quartic,families,sigma,planemap,weierstrass}
//   linedyn --list
//
// Reports are JSON lines on stdout (or the --json file); a human summary goes
// to stderr. Exit codes: 0 pass, 1 failure, 2 degenerate or skip only,
// 3 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "linedyn/harness.hpp"
#include "linedyn/io.hpp"
#include "linedyn/modular.hpp"
#include "linedyn/semiconj.hpp"

using namespace linedyn;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitUsage = 3;

int cmd_list() {
  for (const auto& c : case_catalog()) std::cout << json{{"case", c.id}, {"reference", c.reference}}.dump() << "\n";
  return kExitPass;
}

int cmd_verify(std::vector<std::string> cases, const RunOptions& opts, int jobs, const std::string& json_out) {
  if (cases.empty())
    for (const auto& c : case_catalog()) cases.push_back(c.id);
  std::vector<VerificationReport> reports;
  try {
    reports = run_cases(cases, opts, jobs);
  } catch (const UnknownCase& e) {
    std::cerr << "error: " << e.what() << " (see --list)\n";
    return kExitUsage;
  }
  std::ofstream file;
  if (!json_out.empty()) {
    file.open(json_out);
    if (!file) {
      std::cerr << "error: cannot write " << json_out << "\n";
      return kExitUsage;
    }
  }
  std::ostream& out = json_out.empty() ? std::cout : file;
  for (const auto& r : reports) out << r.to_json(opts.timing).dump() << "\n";

  std::map<std::string, int> tally;
  for (const auto& r : reports) {
    tally[r.status]++;
    std::cerr << (r.status == "pass" ? "PASS " : r.status == "fail" ? "FAIL " : "SKIP ") << r.id;
    if (opts.timing) std::cerr << " (" << r.seconds << " s)";
    std::cerr << "\n";
    for (const auto& c : r.checks)
      if (!c.pass) std::cerr << "    failed check: " << c.name << "\n";
    if (!r.message.empty()) std::cerr << "    " << r.message << "\n";
  }
  std::cerr << tally["pass"] << " passed, " << tally["fail"] << " failed, " << tally["skip"] << " skipped\n";
  return exit_code_for(reports);
}

int cmd_scan(int n, std::uint64_t p, const std::string& stat, int max_iter) {
  json j = {{"n", n}, {"p", p}, {"stat", stat}};
  if (stat == "degree") {
    DegreeHistogram h = degree_estimate(n, p);
    json fibers = json::object();
    for (auto [size, count] : h.fibers) fibers[std::to_string(size)] = count;
    j["domain_points"] = h.domain_points;
    j["undefined_points"] = h.undefined_points;
    j["fibers"] = fibers;
    j["modal_fiber_size"] = h.modal_fiber_size();
    j["max_fiber_size"] = h.max_fiber_size();
    std::cerr << "n=" << n << " p=" << p << ": modal fiber size " << h.modal_fiber_size() << ", max "
              << h.max_fiber_size() << "\n";
  } else {
    j["max_iter"] = max_iter;
    j["lengths"] = orbit_length_scan(n, p, max_iter);
    std::cerr << "n=" << n << " p=" << p << ": " << j["lengths"].size() << " distinct outcomes\n";
  }
  std::cout << j.dump() << "\n";
  return kExitPass;
}

int cmd_orbit(int n, std::uint64_t p, const std::string& point, int max_iter) {
  PrimeField f(p);
  std::vector<std::string> parts;
  std::stringstream ss(point);
  for (std::string s; std::getline(ss, s, ',');) parts.push_back(s);
  if (parts.size() != 3) {
    std::cerr << "error: --point needs three comma-separated coordinates\n";
    return kExitUsage;
  }
  ChartPoint<Fp> x{parse_scalar(f, parts[0]), parse_scalar(f, parts[1]), parse_scalar(f, parts[2])};
  if (!chart_eval(n, x).is_zero()) {
    std::cerr << "error: the point is not on Z" << n << " over F_" << p << "\n";
    return kExitUsage;
  }
  OrbitRecord o = orbit(n, x, max_iter);
  json pts = json::array();
  for (const auto& y : o.points) pts.push_back(coords_json(y));
  json j = {{"n", n}, {"p", p}, {"start", coords_json(x)}, {"points", pts}, {"termination", o.termination}};
  if (o.period) j["period"] = *o.period;
  if (o.preperiod) j["preperiod"] = *o.preperiod;
  if (o.cycle_length) j["cycle_length"] = *o.cycle_length;
  auto arr = arrangement_period(n, x, std::max(max_iter, 1));
  j["arrangement_period"] = arr ? json(*arr) : json(nullptr);
  std::cout << j.dump() << "\n";
  std::cerr << "orbit of " << ProjPoint2<Fp>(x).to_string() << ": " << o.termination << " after " << o.points.size()
            << " points\n";
  return o.termination.rfind("degenerate", 0) == 0 ? kExitDegenerate : kExitPass;
}

json weierstrass_json(const WeierstrassModel& e) {
  return {{"name", e.name},
          {"a1", e.a1.to_string()},
          {"a2", e.a2.to_string()},
          {"a3", e.a3.to_string()},
          {"a4", e.a4.to_string()},
          {"a6", e.a6.to_string()},
          {"discriminant", e.discriminant().to_string()},
          {"j", e.j_invariant().to_string()}};
}

int cmd_dump(int n, const std::string& what) {
  const auto& y = constants::y_vars();
  const auto& x = constants::x_vars();
  const auto& z = constants::z_vars();
  json j = {{"n", n}, {"what", what}};
  if (what == "quartic") {
    j["quartic"] = polynomial_json(constants::quartic(n), y);
    j["text"] = constants::quartic_text(n);
  } else if (what == "families") {
    for (auto [name, block] : {std::pair<const char*, int>{"C0", 0}, {"C1", 1}}) {
      json lines = json::array();
      for (const auto& row : block == 0 ? constants::family_c0(n) : constants::family_c1(n))
        lines.push_back({polynomial_json(row[0], x), polynomial_json(row[1], x), polynomial_json(row[2], x)});
      j[name] = lines;
    }
  } else if (what == "sigma") {
    if (n != 7) {
      std::cerr << "error: sigma actions are printed for n = 7 only\n";
      return kExitUsage;
    }
    for (int which : {1, 2}) {
      json comps = json::array();
      for (const auto& c : constants::sigma_action(which)) comps.push_back(polynomial_json(c, y));
      j["sigma" + std::to_string(which)] = comps;
    }
  } else if (what == "planemap") {
    const auto& m = plane_map_model(n);
    if (n == 7) {
      for (auto [name, poly] : {std::pair<const char*, const MPoly<Rational>*>{"Q", &m.Q}, {"Q1", &m.Q1}, {"Q2", &m.Q2},
                                {"Q3", &m.Q3}, {"R4", &m.R4}, {"R7", &m.R7}, {"R", &m.R}})
        j[name] = polynomial_json(*poly, z);
    } else {
      j["conic"] = polynomial_json(m.conic, z);
      j["quartic"] = polynomial_json(m.quartic, z);
    }
    json ind = json::array();
    for (const auto& p : m.indeterminacy) {
      json coords = json::array();
      for (const auto& c : p.coords) coords.push_back(c.to_string({"u"}));
      json minpoly = json::array();
      for (const auto& c : p.minpoly) minpoly.push_back(c.to_string());
      ind.push_back({{"name", p.name}, {"minpoly", minpoly}, {"coords", coords}});
    }
    j["indeterminacy"] = ind;
  } else {
    j["models"] = n == 7 ? json::array({weierstrass_json(weierstrass_e7())})
                         : json::array({weierstrass_json(weierstrass_e8()), weierstrass_json(weierstrass_e8_prime())});
  }
  std::cout << j.dump() << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line arrangement dynamics: verification harness and exploration tools"};
  app.require_subcommand(0, 1);
  bool list = false;
  app.add_flag("--list", list, "List the verification cases with the statement each one checks");

  RunOptions opts;
  std::vector<std::string> cases;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string json_out;
  auto* verify = app.add_subcommand("verify", "Run verification cases (all of them by default)");
  verify->add_option("--case", cases, "Case id; repeat for several");
  verify->add_option("--seed", opts.seed, "Seed for all sampled checks")->capture_default_str();
  verify->add_option("--jobs", jobs, "Cases run in parallel")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--json", json_out, "Write JSON lines to this file instead of stdout");
  verify->add_option("--sample-prime", opts.sample_prime, "Prime for sampled checks")->capture_default_str();
  verify->add_option("--scan-prime", opts.scan_prime, "Prime for full-surface scans")->capture_default_str();
  verify->add_flag("--timing", opts.timing, "Include wall time in the reports");

  int n = 7;
  std::uint64_t p = 101;
  std::string stat, point, what;
  int max_iter = 50;
  auto* scan = app.add_subcommand("scan", "Statistics over all chart points of Z_n over F_p");
  scan->add_option("--n", n, "Surface index")->required()->check(CLI::IsMember({7, 8}));
  scan->add_option("--p", p, "Prime")->required();
  scan->add_option("--stat", stat, "Statistic")->required()->check(CLI::IsMember({"degree", "orbit-lengths"}));
  scan->add_option("--max", max_iter, "Iteration budget for orbit lengths")->capture_default_str();

  auto* orb = app.add_subcommand("orbit", "Iterate lambda from a chart point of Z_n over F_p");
  orb->add_option("--n", n, "Surface index")->required()->check(CLI::IsMember({7, 8}));
  orb->add_option("--p", p, "Prime")->required();
  orb->add_option("--point", point, "Chart coordinates x1,x2,x3")->required();
  orb->add_option("--max", max_iter, "Iteration budget")->capture_default_str();

  auto* dump = app.add_subcommand("dump", "Print transcribed data as JSON");
  dump->add_option("--n", n, "Surface index")->required()->check(CLI::IsMember({7, 8}));
  dump->add_option("--what", what, "Data set")
      ->required()
      ->check(CLI::IsMember({"quartic", "families", "sigma", "planemap", "weierstrass"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (list) return cmd_list();
    if (*verify) return cmd_verify(cases, opts, jobs, json_out);
    if (*scan) return cmd_scan(n, p, stat, max_iter);
    if (*orb) return cmd_orbit(n, p, point, max_iter);
    if (*dump) return cmd_dump(n, what);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedDegree& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return kExitDegenerate;
  }
  std::cerr << app.help();
  return kExitUsage;
}
