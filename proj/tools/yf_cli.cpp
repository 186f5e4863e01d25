#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "yf/yangian.hpp"

using namespace yf;

namespace {

constexpr int kSchema = 1;
const std::vector<std::string> kSuites = {"classical", "rmatrix", "rtt",  "center",  "pbw",
                                          "hopf",      "fixedpoint", "qdet", "symmetry"};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string family;
  int N = 0;
  int K = 3;
  int L = 0;  // 0: same as R_ord
  int R = 3;
  int work_margin = -1;
  bool quotient = false;
  std::vector<std::string> suites;
  unsigned seed = 1;
  std::string report;
  bool timing = false;

  Json to_json() const {
    return Json{{"family", family}, {"N", N},          {"K", K},           {"L", L > 0 ? L : R},
                {"R_ord", R},       {"quotient", quotient}, {"suite", suites}, {"seed", seed}};
  }
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

class Clock {
 public:
  explicit Clock(bool on) : on_(on) {}
  template <class F>
  auto time(const std::string& name, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    auto finish = [&] {
      if (on_) timing_[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      finish();
    } else {
      auto r = f();
      finish();
      return r;
    }
  }
  void attach(Json& j) const {
    if (on_) j["timing"] = timing_;
  }

 private:
  bool on_;
  Json timing_ = Json::object();
};

void emit(const Json& j, const std::string& path) {
  std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

// Loads --config, then lets explicitly given flags override it.
void apply_config(const std::string& path, RunConfig& c, const CLI::App& app) {
  if (path.empty()) return;
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read config " + path);
  Json j;
  try {
    j = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("bad config: ") + e.what());
  }
  auto unset = [&](const char* flag) { return app.count(flag) == 0; };
  if (j.contains("family") && unset("--family")) c.family = j["family"].get<std::string>();
  if (j.contains("n") && unset("--n")) c.N = j["n"].get<int>();
  if (j.contains("order") && unset("--order")) c.K = j["order"].get<int>();
  if (j.contains("len") && unset("--len")) c.L = j["len"].get<int>();
  if (j.contains("sumr") && unset("--sumr")) c.R = j["sumr"].get<int>();
  if (j.contains("work_margin") && unset("--work-margin")) c.work_margin = j["work_margin"].get<int>();
  if (j.contains("quotient") && unset("--quotient")) c.quotient = j["quotient"].get<bool>();
  if (j.contains("seed") && unset("--seed")) c.seed = j["seed"].get<unsigned>();
  if (j.contains("report") && unset("--report")) c.report = j["report"].get<std::string>();
  if (j.contains("suite") && unset("--suite")) {
    if (j["suite"].is_array())
      c.suites = j["suite"].get<std::vector<std::string>>();
    else
      c.suites = split_list(j["suite"].get<std::string>());
  }
}

Family checked_family(const RunConfig& c) {
  if (c.family.empty()) throw UsageError("--family is required");
  if (c.N <= 0) throw UsageError("--n is required");
  Family f;
  try {
    f = parse_family(c.family);
    build_lie(f, c.N);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (c.K < 2) throw UsageError("--order must be >= 2");
  if (c.R < 2 || c.L < 0) throw UsageError("bounds must be positive (--sumr >= 2)");
  return f;
}

Json report_envelope(const std::string& command, const RunConfig& c) {
  return Json{{"schema", kSchema}, {"command", command}, {"config", c.to_json()}};
}

ClosureOptions options(const RunConfig& c) {
  ClosureOptions o;
  o.sumr_margin = c.work_margin;
  return o;
}

int L_of(const RunConfig& c) { return c.L > 0 ? c.L : c.R; }

// --- suites -----------------------------------------------------------------

std::vector<Report> suite_classical(const RTTPresentation& p, unsigned seed) {
  Representation rep = vector_rep(p.lie);
  return {verify_classical_presentation(p.lie, rep, seed), verify_current_presentation(p.lie, rep, 3),
          verify_extension_split(p.lie, rep), verify_yangian_module(p.lie, rep)};
}

std::vector<Report> suite_rmatrix(const RTTPresentation& p, int K) {
  Report out("rmatrix", family_name(p.family()), p.N());
  out.K = K;
  CertifyStats st;
  out.add("qybe", check_qybe(p.R, &st));
  try {
    RationalFunction f = check_unitarity(p.R);
    bool expected = p.family() != Family::SL || f == RationalFunction(1) - RationalFunction(UPoly(Rational(1)), UPoly(std::vector<Rational>{0, 0, 1}));
    out.add("unitarity", expected, Json{{"num", rationals_json(f.num().coeffs())}, {"den", rationals_json(f.den().coeffs())}});
  } catch (const UnitarityFailure& e) {
    out.add("unitarity", false, Json{{"reason", e.what()}});
  }
  Representation rep = vector_rep(p.lie);
  try {
    RSeries solved = solve_intertwiner(p.lie, rep, K);
    TruncSeries g = proportional_to(solved, p.R);
    out.add("intertwiner-matches-closed-form", true, Json{{"scalar_series", rationals_json(g.coeffs())}});
  } catch (const std::exception& e) {
    out.add("intertwiner-matches-closed-form", false, Json{{"reason", e.what()}});
  }
  return {out, expansion_check(p.R, p.lie, rep)};
}

std::vector<Report> suite_rtt(const RTTPresentation& p, const RelationClosure& cl, unsigned seed) {
  Report out("rtt", family_name(p.family()), p.N());
  out.K = p.K;
  out.bounds = bounds_json(cl);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  Json shifts_used = Json::array();
  bool vanish = true;
  for (int k = 1; k <= 2 && vanish; ++k) {
    std::vector<Rational> shifts;
    for (int s = 0; s < k; ++s) shifts.push_back(rat(num(rng), den(rng)));
    shifts_used.push_back(rationals_json(shifts));
    Evaluator ev = evaluation_module(p, k, shifts, p.K);
    for (const auto& r : p.relations)
      if (!ev(r).is_zero()) {
        vanish = false;
        out.add("relations-vanish-on-evaluation-modules", false, Json{{"relation", ncpoly_json(r)}});
        break;
      }
  }
  if (vanish)
    out.add("relations-vanish-on-evaluation-modules", true,
            Json{{"relations", p.relations.size()}, {"shifts", shifts_used}});

  bool members = true;
  size_t checked = 0;
  for (const auto& r : p.relations)
    if (cl.fits(r)) {
      ++checked;
      members = members && cl.is_in_ideal(r);
    }
  out.add("relations-in-closure", members && checked > 0, Json{{"checked", checked}});

  // negative control: a relation plus a random multiple of one generator
  std::vector<const NCPoly*> fitting;
  for (const auto& r : p.relations)
    if (cl.fits(r) && r.max_sumr() <= 1 + cl.R() / 2) fitting.push_back(&r);
  if (!fitting.empty()) {
    Evaluator ev = evaluation_module(p, 1, {rat(0)}, p.K);
    // generators acting by zero (t_{i,-i}^(1) for SO) may already lie in the ideal
    std::vector<NCPoly> visible;
    for (int i = 0; i < p.N(); ++i)
      for (int j = 0; j < p.N(); ++j)
        if (!ev(NCPoly::gen(i, j, 1)).is_zero()) visible.push_back(NCPoly::gen(i, j, 1));
    std::uniform_int_distribution<size_t> pick(0, fitting.size() - 1), gen(0, visible.size() - 1);
    std::uniform_int_distribution<int> coef(1, 4);
    NCPoly bad = *fitting[pick(rng)] + visible[gen(rng)] * Rational(coef(rng));
    bool rejected = !ev(bad).is_zero() && !cl.is_in_ideal(bad);
    out.add("perturbed-relation-rejected", rejected, Json{{"element", ncpoly_json(bad)}});
  }
  out.extra = Json{{"relation_count", p.relations.size()}};
  return {out};
}

struct Context {
  const RunConfig& cfg;
  const RTTPresentation& pres;
  const RelationClosure& cl;
  const RelationClosure* quotient;
  const CentralSeries& cs;
};

std::vector<Report> suite_center(const Context& c) {
  int wR = c.cl.work_R();
  int r_max = std::min(c.cfg.K, wR - 1);
  int s_max = std::max(1, std::min(2, wR - r_max));
  std::vector<Report> out = {verify_center(c.pres, c.cl, c.cs, r_max, s_max), verify_y(c.cs, c.cfg.K)};
  if (wR >= 4) out.push_back(verify_low_order_structure(c.pres, c.cl, c.quotient, c.cs));
  return out;
}

std::vector<Report> suite_pbw(const Context& c) {
  std::vector<Report> out = {verify_pbw(c.pres, c.cl)};
  if (c.quotient != nullptr) out.push_back(verify_pbw(c.pres, *c.quotient));
  return out;
}

std::vector<Report> suite_hopf(const Context& c) {
  return {verify_hopf(c.pres, c.cl, c.cs, std::min(c.cfg.K, c.cl.work_R()))};
}

std::vector<Report> suite_fixedpoint(const Context& c, unsigned seed) {
  int order = std::min(c.cfg.K - 1, c.cl.work_R());
  std::mt19937 rng(seed + 17);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  std::vector<TruncSeries> fs = {TruncSeries({1, 1}, 1), TruncSeries({1, 1, 1}, 2),
                                 TruncSeries({1, rat(num(rng), den(rng)), rat(num(rng), den(rng))}, 2)};
  std::vector<Report> out;
  for (const auto& f : fs) out.push_back(verify_fixed_point(c.pres, c.cl, c.cs, f, order));
  return out;
}

std::vector<Report> suite_qdet(const Context& c) {
  int order = std::min(c.cfg.K, c.cl.work_R() - 1);
  int s_max = std::max(1, std::min(2, c.cl.work_R() - order));
  return {verify_qdet(c.pres, c.cl, c.cs, order, s_max)};
}

std::vector<Report> suite_symmetry(const Context& c) {
  return {verify_symmetry(c.pres, c.cl, c.cs, std::min(c.cfg.K, c.cl.work_R()))};
}

bool all_pass(const std::vector<Report>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const Report& r) { return r.pass(); });
}

// --- commands ---------------------------------------------------------------

int cmd_verify(RunConfig cfg) {
  Family fam = checked_family(cfg);
  if (cfg.suites.empty()) {
    cfg.suites = {"classical", "rmatrix", "rtt", "center", "pbw", "hopf", "fixedpoint"};
    cfg.suites.push_back(fam == Family::SL ? "qdet" : "symmetry");
  }
  std::set<std::string> want;
  for (const auto& s : cfg.suites) {
    if (std::find(kSuites.begin(), kSuites.end(), s) == kSuites.end()) throw UsageError("unknown suite " + s);
    want.insert(s);
  }
  if (want.count("qdet") && fam != Family::SL) throw UsageError("suite qdet needs --family sl");
  if (want.count("symmetry") && fam == Family::SL) throw UsageError("suite symmetry needs --family so or sp");

  Clock clock(cfg.timing);
  Json doc = report_envelope("verify", cfg);
  std::vector<Report> reports;
  int L = L_of(cfg);
  RTTPresentation pres = clock.time("relations", [&] { return rtt_relations(fam, cfg.N, std::max(cfg.K, cfg.R)); });

  // dependency order: liealg, rmatrix, relations, closure, checks
  if (want.count("classical")) {
    auto r = clock.time("classical", [&] { return suite_classical(pres, cfg.seed); });
    reports.insert(reports.end(), r.begin(), r.end());
  }
  if (want.count("rmatrix")) {
    auto r = clock.time("rmatrix", [&] { return suite_rmatrix(pres, cfg.K); });
    reports.insert(reports.end(), r.begin(), r.end());
  }

  static const std::set<std::string> closure_suites = {"rtt", "center", "pbw", "hopf", "fixedpoint", "qdet", "symmetry"};
  bool need_closure = std::any_of(want.begin(), want.end(), [](const std::string& s) { return closure_suites.count(s) > 0; });
  if (need_closure) {
    CentralSeries cs = z_series(pres, cfg.K + 1);
    auto run_closure_suites = [&](const ClosureOptions& opt) {
      RelationClosure cl(pres, L, cfg.R, false, opt);
      std::optional<RelationClosure> q;
      if (cfg.quotient) q.emplace(pres, L, cfg.R, true, opt);
      Context ctx{cfg, pres, cl, q ? &*q : nullptr, cs};
      std::vector<Report> out;
      auto add = [&](const std::string& name, auto&& fn) {
        if (!want.count(name)) return;
        auto r = clock.time(name, fn);
        out.insert(out.end(), r.begin(), r.end());
      };
      add("rtt", [&] { return suite_rtt(pres, cl, cfg.seed); });
      add("pbw", [&] { return suite_pbw(ctx); });
      add("center", [&] { return suite_center(ctx); });
      add("hopf", [&] { return suite_hopf(ctx); });
      add("fixedpoint", [&] { return suite_fixedpoint(ctx, cfg.seed); });
      add("qdet", [&] { return suite_qdet(ctx); });
      add("symmetry", [&] { return suite_symmetry(ctx); });
      return std::make_pair(out, cl.stats_json());
    };
    ClosureOptions opt = options(cfg);
    auto [out, stats] = run_closure_suites(opt);
    if (!all_pass(out)) {
      // "not in the ideal" is bound-relative: retry once with a larger work slice
      ClosureOptions wider = opt;
      wider.sumr_margin = (opt.sumr_margin < 0 ? (fam == Family::SL ? 0 : 1) : opt.sumr_margin) + 1;
      try {
        auto [out2, stats2] = run_closure_suites(wider);
        doc["rerun"] = Json{{"work_margin", wider.sumr_margin}, {"first_attempt_failed", true}};
        out = std::move(out2);
        stats = std::move(stats2);
      } catch (const BoundsTooLarge& e) {
        doc["rerun"] = Json{{"skipped", e.what()}};
      }
    }
    reports.insert(reports.end(), out.begin(), out.end());
    doc["closure"] = stats;
  }

  bool ok = all_pass(reports);
  doc["status"] = ok ? "pass" : "fail";
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  doc["reports"] = std::move(arr);
  clock.attach(doc);
  emit(doc, cfg.report);
  return ok ? 0 : 1;
}

int cmd_build(const RunConfig& cfg) {
  Family fam = checked_family(cfg);
  Clock clock(cfg.timing);
  RTTPresentation pres = clock.time("relations", [&] { return rtt_relations(fam, cfg.N, std::max(cfg.K, cfg.R)); });
  RelationClosure cl(pres, L_of(cfg), cfg.R, cfg.quotient, options(cfg));
  long sd = clock.time("closure", [&] { return cl.slice_dimension(); });
  Json doc = report_envelope("build", cfg);
  doc["relations"] = pres.relations.size();
  doc["bounds"] = bounds_json(cl);
  doc["slice_dimension"] = sd;
  doc["pbw_count"] = pbw_count(pres, cl.L(), cl.R(), cfg.quotient);
  doc["closure"] = cl.stats_json();
  doc["status"] = "pass";
  clock.attach(doc);
  emit(doc, cfg.report);
  return 0;
}

int cmd_solve_r(const RunConfig& cfg) {
  Family fam = checked_family(cfg);
  LieAlgebraData lie = build_lie(fam, cfg.N);
  RSeries solved = solve_intertwiner(lie, vector_rep(lie), cfg.K);
  RMat closed = fam == Family::SL ? yang_r(cfg.N) : sosp_r(fam, cfg.N);
  Json doc = report_envelope("solve-r", cfg);
  doc["series"] = rseries_json(solved);
  bool ok = true;
  try {
    doc["scalar_to_closed_form"] = rationals_json(proportional_to(solved, closed).coeffs());
  } catch (const NotProportional& e) {
    ok = false;
    doc["scalar_to_closed_form"] = Json{{"error", e.what()}};
  }
  doc["status"] = ok ? "pass" : "fail";
  emit(doc, cfg.report);
  return ok ? 0 : 1;
}

int cmd_qdet(const RunConfig& cfg) {
  Family fam = checked_family(cfg);
  if (fam != Family::SL) throw UsageError("qdet needs --family sl");
  RTTPresentation pres = rtt_relations(fam, cfg.N, std::max(cfg.K, cfg.R));
  Json doc = report_envelope("qdet", cfg);
  Json coeffs = Json::array();
  for (const auto& c : qdet(pres, cfg.K)) coeffs.push_back(ncpoly_json(c));
  doc["qdet"] = std::move(coeffs);
  RelationClosure cl(pres, L_of(cfg), cfg.R, false, options(cfg));
  CentralSeries cs = z_series(pres, cfg.K);
  int order = std::min(cfg.K, cl.work_R() - 1);
  Report r = verify_qdet(pres, cl, cs, order, std::max(1, std::min(2, cl.work_R() - order)));
  doc["status"] = r.pass() ? "pass" : "fail";
  doc["reports"] = Json::array({r.to_json()});
  emit(doc, cfg.report);
  return r.pass() ? 0 : 1;
}

int cmd_merge(const std::vector<std::string>& inputs, const std::string& out_path) {
  if (inputs.empty()) throw UsageError("report-merge needs input files");
  Json doc = Json{{"schema", kSchema}, {"command", "report-merge"}, {"inputs", inputs}};
  Json arr = Json::array();
  bool ok = true;
  for (const auto& path : inputs) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    Json j;
    try {
      j = Json::parse(f);
    } catch (const Json::parse_error& e) {
      throw UsageError(path + ": " + e.what());
    }
    if (!j.contains("schema") || j["schema"] != kSchema) throw UsageError(path + ": unsupported schema");
    ok = ok && j.value("status", "fail") == "pass";
    arr.push_back(std::move(j));
  }
  doc["status"] = ok ? "pass" : "fail";
  doc["runs"] = std::move(arr);
  emit(doc, out_path);
  return ok ? 0 : 1;
}

void add_common(CLI::App* sub, RunConfig& c, std::string& config_path, bool with_bounds) {
  sub->add_option("--family", c.family, "sl, so or sp");
  sub->add_option("--n", c.N, "matrix size N");
  sub->add_option("--order", c.K, "series truncation K");
  sub->add_option("--report", c.report, "output path (default stdout)");
  sub->add_option("--config", config_path, "JSON config; explicit flags override it");
  if (with_bounds) {
    sub->add_option("--len", c.L, "max word length L (default: --sumr)");
    sub->add_option("--sumr", c.R, "max total order R_ord");
    sub->add_option("--work-margin", c.work_margin, "extra sum-r of the work slice (default by family)");
    sub->add_flag("--quotient", c.quotient, "also build the Y_R quotient");
    sub->add_flag("--timing", c.timing, "include wall-clock timings (makes output nondeterministic)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for Yangians in the RTT presentation"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string config_path, suite_list, merge_out;
  std::vector<std::string> merge_in;

  auto* build = app.add_subcommand("build", "build relations and the bounded closure, print slice statistics");
  add_common(build, cfg, config_path, true);
  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, cfg, config_path, true);
  verify->add_option("--suite", suite_list, "comma list of suites");
  verify->add_option("--seed", cfg.seed, "seed for randomized controls");
  auto* solve = app.add_subcommand("solve-r", "solve the intertwining equation order by order");
  add_common(solve, cfg, config_path, false);
  auto* qd = app.add_subcommand("qdet", "quantum determinant coefficients and their checks");
  add_common(qd, cfg, config_path, true);
  auto* merge = app.add_subcommand("report-merge", "merge JSON reports");
  merge->add_option("inputs", merge_in, "report files")->required();
  merge->add_option("--report", merge_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    CLI::App* used = app.get_subcommands().front();
    apply_config(config_path, cfg, *used);
    if (!suite_list.empty()) cfg.suites = split_list(suite_list);
    if (used == build) return cmd_build(cfg);
    if (used == verify) return cmd_verify(cfg);
    if (used == solve) return cmd_solve_r(cfg);
    if (used == qd) return cmd_qdet(cfg);
    return cmd_merge(merge_in, merge_out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const BoundsTooLarge& e) {
    std::cerr << "bounds too large: " << e.what() << " (estimate " << static_cast<long long>(e.estimate) << " words)\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
