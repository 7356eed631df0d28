// zetalb: runs the verification suites and writes reports to stdout.
#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zetalb/arith.hpp"
#include "zetalb/baseline.hpp"
#include "zetalb/dirichlet.hpp"
#include "zetalb/errors.hpp"
#include "zetalb/report.hpp"
#include "zetalb/scans.hpp"
#include "zetalb/suites.hpp"

#ifndef ZETALB_DATA_DIR
#define ZETALB_DATA_DIR "data"
#endif

namespace {

using namespace zetalb;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Flags {
  std::string format = "json";
  std::string output;
  std::string config;
  std::string baseline;
  bool no_baseline = false;
  unsigned workers = 1;
  std::uint64_t seed = 42;

  std::vector<double> H;
  std::vector<double> sigma;
  double epsilon = 0.0;  // 0: per-check default
  double alpha = 1.0;
  double C = 1.0;
  double delta = 0.5;
  std::size_t N = 100;
  double T_min = 0.0;
  double T_max = 0.0;
  std::size_t samples = 0;
  std::vector<double> T;
  double step = 0.05;
  bool inverse = false;

  std::size_t trials = 50;
  std::size_t pairs = 50;
  std::string preset = "eps=1";
  double lemma1_H = 0.0;
  double lemma1_T = 1e6;

  std::string check_kind;
  std::string poly_kind;
  double X = 0.0;
  std::string input;
  double t = 0.0;
};

std::string default_baseline_path() {
  if (std::filesystem::exists("data/baseline.json")) return "data/baseline.json";
  return std::string(ZETALB_DATA_DIR) + "/baseline.json";
}

// JSON config: a flat object keyed by long flag names; flags given on the command line win.
void apply_config(CLI::App& sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config " + path + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config " + path + ": expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    CLI::Option* opt = sub.get_option_no_throw("--" + key);
    if (opt == nullptr) opt = sub.get_option_no_throw(key);
    if (opt == nullptr) throw ConfigError("config " + path + ": unknown key '" + key + "' for " + sub.get_name());
    if (opt->count() > 0) continue;
    auto add = [&](const nlohmann::json& v) {
      opt->add_result(v.is_string() ? v.get<std::string>() : v.dump());
    };
    if (value.is_array()) {
      for (const auto& v : value) add(v);
    } else {
      add(value);
    }
    opt->run_callback();
  }
}

std::vector<double> T_samples(const Flags& f, double lo, double hi, std::size_t count, bool random_default) {
  if (!f.T.empty()) return f.T;
  const bool custom = f.T_min > 0.0 || f.T_max > 0.0 || f.samples > 0;
  if (!custom && !random_default) return default_T_samples();
  const double a = f.T_min > 0.0 ? f.T_min : lo;
  const double b = f.T_max > 0.0 ? f.T_max : hi;
  const std::size_t n = f.samples > 0 ? f.samples : count;
  if (!(a > 0.0 && b > a)) throw ConfigError("need 0 < T-min < T-max");
  return random_log_uniform(a, b, n, f.seed);
}

double preset_epsilon(const std::string& preset) {
  const std::string prefix = "eps=";
  if (preset.rfind(prefix, 0) != 0) throw ConfigError("preset must look like eps=<value>");
  try {
    std::size_t used = 0;
    const double v = std::stod(preset.substr(prefix.size()), &used);
    if (used != preset.size() - prefix.size()) throw std::invalid_argument("trailing text");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("preset must look like eps=<value>");
  }
}

std::vector<CheckReport> run_check(const Flags& f, const ScanOptions& opts) {
  const std::string& k = f.check_kind;
  auto one = [&](const std::vector<double>& v, double fallback) { return v.empty() ? fallback : v.front(); };
  if (k == "ity") {
    return ity_scan(one(f.H, 0.1), T_samples(f, 10.0, 1e5, 500, true), f.inverse, opts);
  }
  if (k == "t1") {
    return theorem1_scan(f.H.empty() ? kTheorem1DefaultH : f.H, f.epsilon > 0 ? f.epsilon : 1.0,
                         T_samples(f, 16.0, 1e5, 200, false), opts, f.C);
  }
  if (k == "t4") {
    const WeightFunction omega = epsilon_weight(f.epsilon > 0 ? f.epsilon : 1.0);
    const std::vector<double> T = T_samples(f, 16.0, 1e5, 200, false);
    std::vector<CheckReport> out;
    for (double H : f.H.empty() ? kTheorem4DefaultH : f.H) {
      auto r = theorem4_scan(H, omega, T, opts);
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }
  if (k == "t3") {
    return theorem3_scan(one(f.H, 3.0), f.epsilon > 0 ? f.epsilon : 0.5, f.alpha, T_samples(f, 16.0, 1e5, 200, false),
                         opts);
  }
  if (k == "lemma8") {
    Lemma8SuiteOptions o;
    o.H = one(f.H, 3.0);
    o.epsilon = f.epsilon > 0 ? f.epsilon : 0.5;
    o.alpha = f.alpha;
    o.N = f.N;
    o.samples = f.samples > 0 ? f.samples : 20;
    o.T_min = f.T_min > 0 ? f.T_min : 10.0;
    o.T_max = f.T_max > 0 ? f.T_max : 1e4;
    o.seed = f.seed;
    o.sigma = one(f.sigma, 0.0);
    return lemma8_suite(o, opts);
  }
  if (k == "fe") {
    const std::vector<double> sigmas = f.sigma.empty() ? std::vector<double>{0.6, 0.8, 1.0} : f.sigma;
    const std::vector<double> Ts = f.T.empty() ? std::vector<double>{100.0, 1000.0} : f.T;
    std::vector<CheckReport> out;
    for (double s : sigmas) {
      auto r = approx_fe_check(s, Ts, f.samples > 0 ? f.samples : 50, f.seed, opts);
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }
  if (k == "lipschitz") return lipschitz_check(T_samples(f, 16.0, 1e5, 200, false), f.delta, opts);
  if (k == "max") {
    std::vector<CheckReport> out;
    for (double T : f.T.empty() ? std::vector<double>{1000.0} : f.T) {
      out.push_back(max_scan_report(one(f.sigma, 1.0), T, one(f.H, 1000.0), f.step));
    }
    return out;
  }
  throw ConfigError("unknown check " + k);
}

int emit(const Flags& f, const std::vector<CheckReport>& reports) {
  const ReportFormat format = f.format == "csv" ? ReportFormat::csv : ReportFormat::json_lines;
  if (f.output.empty()) {
    write_reports(std::cout, reports, format);
    std::cout.flush();
  } else {
    std::ofstream out(f.output, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + f.output);
    write_reports(out, reports, format);
  }
  std::size_t failed = 0;
  for (const auto& r : reports) {
    if (!r.pass) {
      ++failed;
      std::cerr << to_json_line(r) << '\n';
    }
  }
  std::cerr << reports.size() << " reports, " << failed << " failed\n";
  return failed == 0 ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for short-interval lower bounds of zeta near Re(s)=1"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  Flags f;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", f.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", f.output, "Write reports to this file instead of stdout");
    sub->add_option("--config", f.config, "JSON file with flag values; command-line flags win");
    sub->add_option("--baseline", f.baseline, "Regression baseline file");
    sub->add_flag("--no-baseline", f.no_baseline, "Compare raw ratios, ignoring any baseline");
    sub->add_option("--workers", f.workers, "Worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--seed", f.seed, "Seed for randomized suites");
  };

  auto* constants = app.add_subcommand("constants", "K_0(2), tail constant 0.619, 13.917 and 194");
  auto* kasym = app.add_subcommand("kernel-asym", "K-Bessel envelope, maxima and phase formula");
  auto* summation = app.add_subcommand("summation", "Kernel summation identity on random polynomials");
  summation->add_option("--trials", f.trials, "Random polynomials")->check(CLI::PositiveNumber);
  auto* tail = app.add_subcommand("tail", "Tail integral grid, both prefactor variants");
  auto* moll = app.add_subcommand("mollifier", "Coefficients of zeta_T * M_X on random pairs");
  moll->add_option("--pairs", f.pairs, "Random (X, T) pairs")->check(CLI::PositiveNumber);
  moll->add_option("--T-max", f.T_max, "Largest T");

  auto* pw = app.add_subcommand("paley-wiener", "Build the test function and verify its transform decay");
  pw->add_option("--preset", f.preset, "Weight preset, eps=<value>");
  pw->add_option("--lemma1-H", f.lemma1_H, "Also run the sum bound at this H");
  pw->add_option("--lemma1-T", f.lemma1_T, "T for the sum bound");

  auto* check = app.add_subcommand("check", "Run one scan");
  check->add_option("kind", f.check_kind, "Scan")
      ->required()
      ->check(CLI::IsMember({"t1", "t3", "t4", "ity", "lemma8", "fe", "lipschitz", "max"}));
  check->add_option("--H", f.H, "Interval length H (t1, t4 accept several)")->delimiter(',');
  check->add_option("--sigma", f.sigma, "Real part sigma (fe accepts several)")->delimiter(',');
  check->add_option("--epsilon", f.epsilon, "Weight exponent epsilon");
  check->add_option("--alpha", f.alpha, "Shift alpha");
  check->add_option("--C", f.C, "Constant C in the sigma range of t1");
  check->add_option("--delta", f.delta, "delta for lipschitz");
  check->add_option("--N", f.N, "Polynomial length N for lemma8");
  check->add_option("--T-min", f.T_min, "Smallest T");
  check->add_option("--T-max", f.T_max, "Largest T");
  check->add_option("--samples", f.samples, "Number of T samples");
  check->add_option("--T", f.T, "Explicit T values; overrides T-min/T-max/samples")->delimiter(',');
  check->add_option("--step", f.step, "Grid step for max");
  check->add_flag("--inverse", f.inverse, "ity: also check the integral of 1/|zeta|");

  auto* calibrate_cmd = app.add_subcommand("calibrate", "Run the regression scans and write the baseline file");

  auto* poly = app.add_subcommand("poly", "Dirichlet polynomial JSON documents");
  poly->add_option("kind", f.poly_kind, "zeta, mollifier or eval")
      ->required()
      ->check(CLI::IsMember({"zeta", "mollifier", "eval"}));
  poly->add_option("--T", f.T, "zeta: terms n < T")->delimiter(',');
  poly->add_option("--X", f.X, "mollifier: terms n <= X");
  poly->add_option("--input", f.input, "eval: polynomial JSON file");
  poly->add_option("--sigma", f.sigma, "eval: real part")->delimiter(',');
  poly->add_option("--t", f.t, "eval: imaginary part");

  for (auto* sub : {constants, kasym, summation, tail, moll, pw, check, calibrate_cmd, poly}) common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    if (!f.config.empty()) apply_config(*sub, f.config);

    std::optional<Baseline> baseline;
    if (!f.no_baseline) {
      const std::string path = f.baseline.empty() ? default_baseline_path() : f.baseline;
      if (!f.baseline.empty() || std::filesystem::exists(path)) baseline = load_baseline(path);
    }
    ScanOptions opts;
    opts.workers = f.workers;
    opts.baseline = baseline ? &*baseline : nullptr;

    if (sub == constants) return emit(f, constants_suite());
    if (sub == kasym) return emit(f, kernel_asym_suite());
    if (sub == summation) return emit(f, summation_suite(f.seed, f.trials));
    if (sub == tail) return emit(f, tail_suite());
    if (sub == moll) return emit(f, mollifier_suite(f.seed, f.pairs, f.T_max > 0 ? f.T_max : 500.0));
    if (sub == pw) {
      PaleyWienerSuiteOptions o;
      o.epsilon = preset_epsilon(f.preset);
      o.lemma1_H = f.lemma1_H;
      o.lemma1_T = f.lemma1_T;
      return emit(f, paley_wiener_suite(o, opts.baseline));
    }
    if (sub == check) return emit(f, run_check(f, opts));
    if (sub == calibrate_cmd) {
      const std::string path = f.output.empty() ? (f.baseline.empty() ? default_baseline_path() : f.baseline)
                                                : f.output;
      std::cerr << "calibrating (this runs every regression scan)\n";
      const Baseline b = calibrate(f.workers);
      save_baseline(b, path);
      std::cerr << "wrote " << path << " (" << b.ratios.size() << " ratios)\n";
      return 0;
    }
    if (sub == poly) {
      if (f.poly_kind == "zeta") {
        if (f.T.size() != 1) throw ConfigError("poly zeta needs one --T");
        std::cout << to_json(truncated_zeta(f.T.front())) << '\n';
      } else if (f.poly_kind == "mollifier") {
        if (!(f.X >= 1.0)) throw ConfigError("poly mollifier needs --X >= 1");
        std::cout << to_json(mollifier(f.X, build_sieve(static_cast<std::uint64_t>(f.X)))) << '\n';
      } else {
        std::ifstream in(f.input);
        if (!in) throw ConfigError("cannot read " + f.input);
        std::stringstream text;
        text << in.rdbuf();
        if (f.sigma.size() != 1) throw ConfigError("poly eval needs one --sigma");
        const ComplexValue v = evaluate(polynomial_from_json(text.str()), ComplexValue(f.sigma.front(), f.t));
        nlohmann::ordered_json j;
        j["sigma"] = f.sigma.front();
        j["t"] = f.t;
        j["re"] = v.real();
        j["im"] = v.imag();
        std::cout << j.dump() << '\n';
      }
      return 0;
    }
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedMode& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
