#pragma once

#include "burnside/io.hpp"
#include "burnside/kernel.hpp"
#include "burnside/lumping.hpp"
#include "burnside/mixing.hpp"
#include "burnside/orthobasis.hpp"
#include "burnside/sampler.hpp"
#include "burnside/spectral.hpp"
#include "burnside/statistics.hpp"
#include "burnside/verifier.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace burnside::cli {

enum Exit { ok = 0, verify_failed = 1, usage = 2, cap = 3, unwritable = 4 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  int n = 3;
  int k = 2;
  std::string start = "zeros";
  std::string steps = "1";
  std::uint64_t seed = 1;
  std::string mode = "exact";
  std::string out;
  std::string format;
  std::string suite = "all";
  int max_n = 6;
  std::uint64_t samples = 100000;
  int bins = 50;
  std::string ns = "10000,100000,1000000";
  std::string factors = "0.9,1.0,1.1";
  bool plain_log = false;  // cutoff-scan: log n instead of log((pi/2) n)
};

// "5" or "a..b", inclusive.
inline std::pair<unsigned long, unsigned long> parse_steps(const std::string& s) {
  try {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
      const unsigned long v = std::stoul(s);
      return {v, v};
    }
    const unsigned long lo = std::stoul(s.substr(0, dots)), hi = std::stoul(s.substr(dots + 2));
    if (lo > hi) throw UsageError("--steps range is empty: " + s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--steps must be an integer or a range a..b, got " + s);
  }
}

template <class T>
std::vector<T> parse_list(const std::string& s, const char* flag) {
  std::vector<T> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      if constexpr (std::is_same_v<T, long>) out.push_back(std::stol(item));
      else out.push_back(std::stod(item));
    } catch (const std::logic_error&) {
      throw UsageError(std::string(flag) + " expects a comma-separated list, got " + s);
    }
  }
  if (out.empty()) throw UsageError(std::string(flag) + " is empty");
  return out;
}

// State literal, zeros, one-one (single one at coordinate n), half
// (floor(n/2) ones), orbit:i. "avg" is handled by the callers that accept it.
inline State parse_start(const Options& o) {
  const std::string& s = o.start;
  if (s == "zeros") return State(o.n, o.k);
  auto binary_only = [&] {
    if (o.k != 2) throw UsageError("--start " + s + " needs --k 2");
  };
  if (s == "one-one") {
    binary_only();
    return unit_state(o.n, o.n);
  }
  if (s == "half") {
    binary_only();
    return orbit_representative(o.n, o.n / 2);
  }
  if (s.rfind("orbit:", 0) == 0) {
    binary_only();
    int i = 0;
    try {
      i = std::stoi(s.substr(6));
    } catch (const std::logic_error&) {
      throw UsageError("bad orbit index in --start " + s);
    }
    if (i < 0 || i > o.n) throw UsageError("orbit index out of range in --start " + s);
    return orbit_representative(o.n, i);
  }
  State x;
  try {
    x = State::parse(s, o.k);
  } catch (const std::exception&) {
    throw UsageError("--start must be a state literal, zeros, one-one, half, orbit:i or avg; got " + s);
  }
  if (x.n != o.n) throw UsageError("--start literal has length " + std::to_string(x.n) + " but --n is " + std::to_string(o.n));
  return x;
}

inline std::string format_for(const Options& o, const std::string& fallback) {
  if (!o.format.empty()) return o.format;
  if (o.out.size() >= 4 && o.out.substr(o.out.size() - 4) == ".csv") return "csv";
  if (o.out.size() >= 4 && o.out.substr(o.out.size() - 4) == ".txt") return "text";
  return fallback;
}

class Runner {
 public:
  Runner(std::string command, const Options& o, std::ostream& out)
      : command_(std::move(command)), o_(o), out_(out), t0_(std::chrono::steady_clock::now()) {}

  // Writes the payload (stdout when --out is absent) plus a manifest, then
  // prints the one-line summary.
  void emit(const std::string& payload, const std::string& summary, std::map<std::string, std::string> params,
            std::optional<std::uint64_t> seed = std::nullopt) {
    if (o_.out.empty()) {
      out_ << payload;
      if (!payload.empty() && payload.back() != '\n') out_ << "\n";
      return;
    }
    write_file(o_.out, payload);
    RunManifest m{command_, std::move(params), seed, kToolVersion, {o_.out}, 0};
    m.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    write_file(o_.out + ".manifest.json", m.to_json().dump(2) + "\n");
    out_ << summary << " -> " << o_.out << "\n";
  }

 private:
  std::string command_;
  const Options& o_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point t0_;
};

inline std::map<std::string, std::string> base_params(const Options& o) {
  return {{"n", std::to_string(o.n)}, {"k", std::to_string(o.k)}};
}

inline int cmd_kernel(const Options& o, std::ostream& out) {
  const Kernel K = build_kernel(o.n, o.k);
  const std::string fmt = format_for(o, "json");
  Runner(std::string("kernel"), o, out)
      .emit(fmt == "csv" ? kernel_csv(K) : kernel_json(K).dump(2),
            "kernel n=" + std::to_string(o.n) + " k=" + std::to_string(o.k) + " states=" + std::to_string(K.size()),
            base_params(o));
  return ok;
}

inline int cmd_spectrum(const Options& o, std::ostream& out) {
  Json j = header("spectrum");
  j["n"] = o.n;
  j["k"] = o.k;
  Json entries = Json::array();
  if (o.k == 2) {
    for (const auto& e : multiplicity_table(o.n))
      entries.push_back({{"eigenvalue", to_string(e.eigenvalue.value)},
                         {"multiplicity", e.multiplicity.get_str()},
                         {"source", "closed form"}});
  } else {
    j["tolerance"] = 1e-9;
    j["caveat"] = "double-precision survey; exact multiplicities only where a rational value was reconstructed";
    for (const auto& c : spectrum_survey(o.k, o.n)) {
      Json e{{"value", c.value}, {"multiplicity", c.multiplicity}, {"ambiguous", c.ambiguous}};
      e["rational"] = c.rational ? Json(to_string(*c.rational)) : Json(nullptr);
      e["exact_multiplicity"] = c.exact_multiplicity ? Json(c.exact_multiplicity->get_str()) : Json(nullptr);
      entries.push_back(e);
    }
  }
  j["eigenvalues"] = entries;
  Runner("spectrum", o, out).emit(j.dump(2), "spectrum n=" + std::to_string(o.n) + " k=" + std::to_string(o.k) +
                                                 " distinct=" + std::to_string(entries.size()),
                                  base_params(o));
  return ok;
}

inline int cmd_basis(const Options& o, std::ostream& out) {
  if (o.k != 2) throw UsageError("basis needs --k 2");
  if (o.n < 1 || o.n > 7) throw UsageError("basis supports 1 <= n <= 7");
  const auto basis = build_basis(o.n);
  Runner("basis", o, out).emit(basis_json(o.n, basis).dump(2),
                               "basis n=" + std::to_string(o.n) + " vectors=" + std::to_string(basis.size()), base_params(o));
  return ok;
}

inline int cmd_distance(const std::string& command, const Options& o, std::ostream& out) {
  const bool chi2 = command == "chi2";
  if (o.mode != "exact") throw UsageError(command + " supports --mode exact only");
  auto [lo, hi] = parse_steps(o.steps);
  const Kernel K = build_kernel(o.n, o.k);
  std::vector<std::pair<unsigned long, std::string>> pts;
  std::string start = o.start;
  if (o.start == "avg") {
    for (unsigned long l = lo; l <= hi; ++l) {
      Rational s = 0;
      for (std::size_t x = 0; x < K.size(); ++x) {
        const Vec p = distribution_after(K, x, l);
        s += K.stationary[x] * (chi2 ? chi2_of(p, K.stationary) : tv_of(p, K.stationary));
      }
      pts.emplace_back(l, to_string(s));
    }
  } else {
    const State x = parse_start(o);
    start = x.str();
    for (const auto& [l, v] : distance_curve(K, x, chi2 ? Metric::chi2 : Metric::tv, lo, hi).points)
      pts.emplace_back(l, to_string(v));
  }
  const std::string fmt = format_for(o, "json");
  auto params = base_params(o);
  params["start"] = o.start;
  params["steps"] = o.steps;
  Runner(command, o, out)
      .emit(fmt == "csv" ? curve_csv(command, start, o.n, o.k, pts) : curve_json(command, start, o.n, o.k, pts).dump(2),
            command + " n=" + std::to_string(o.n) + " start=" + start + " points=" + std::to_string(pts.size()), params);
  return ok;
}

inline int cmd_avg_chi2(const Options& o, std::ostream& out) {
  if (o.k != 2) throw UsageError("avg-chi2 needs --k 2");
  auto [lo, hi] = parse_steps(o.steps);
  Mode mode;
  if (o.mode == "exact") mode = Mode::exact;
  else if (o.mode == "log") mode = Mode::log;
  else throw UsageError("--mode must be exact or log");
  std::vector<std::pair<unsigned long, std::string>> pts;
  for (unsigned long l = lo; l <= hi; ++l) {
    const AvgChi2 v = chi2_avg(o.n, l, mode);
    std::ostringstream s;
    s.precision(17);
    if (mode == Mode::exact) s << to_string(v.exact);
    else s << v.log.logmag;
    pts.emplace_back(l, s.str());
  }
  const std::string metric = mode == Mode::exact ? "avg_chi2" : "log_avg_chi2";
  const std::string fmt = format_for(o, "json");
  auto params = base_params(o);
  params["steps"] = o.steps;
  params["mode"] = o.mode;
  Runner("avg-chi2", o, out)
      .emit(fmt == "csv" ? curve_csv(metric, "avg", o.n, 2, pts) : curve_json(metric, "avg", o.n, 2, pts).dump(2),
            "avg-chi2 n=" + std::to_string(o.n) + " points=" + std::to_string(pts.size()), params);
  return ok;
}

inline int cmd_cutoff_scan(const Options& o, std::ostream& out) {
  const auto ns = parse_list<long>(o.ns, "--ns");
  const auto fs = parse_list<double>(o.factors, "--factors");
  const auto rows = cutoff_scan(ns, fs, !o.plain_log);
  const std::string fmt = format_for(o, "json");
  std::string payload;
  if (fmt == "csv") {
    std::ostringstream s;
    s.precision(17);
    s << "# schema=" << kSchema << " kind=cutoff_scan\n" << "n,factor,l,log_avg_chi2\n";
    for (const auto& r : rows) s << r.n << "," << r.factor << "," << r.l << "," << r.chi2.logmag << "\n";
    payload = s.str();
  } else {
    Json j = header("cutoff_scan");
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back({{"n", r.n}, {"factor", r.factor}, {"l", r.l}, {"log_avg_chi2", r.chi2.logmag}});
    j["rows"] = arr;
    payload = j.dump(2);
  }
  Runner("cutoff-scan", o, out).emit(payload, "cutoff-scan rows=" + std::to_string(rows.size()),
                                     {{"ns", o.ns}, {"factors", o.factors}, {"plain_log", o.plain_log ? "1" : "0"}});
  return ok;
}

inline int cmd_sample(const Options& o, std::ostream& out) {
  auto [lo, hi] = parse_steps(o.steps);
  (void)lo;
  RngStream rng(o.seed, 0);
  const State x0 = o.start == "avg" ? sample_stationary(o.n, o.k, rng) : parse_start(o);
  const auto path = run_chain(x0, hi, rng);
  const std::string fmt = format_for(o, "json");
  std::string payload;
  if (fmt == "csv") {
    std::ostringstream s;
    s << "# schema=" << kSchema << " kind=sample n=" << o.n << " k=" << o.k << " seed=" << o.seed << "\n" << "step,state\n";
    for (std::size_t t = 0; t < path.size(); ++t) s << t << "," << path[t].str() << "\n";
    payload = s.str();
  } else {
    Json j = header("sample");
    j["n"] = o.n;
    j["k"] = o.k;
    j["seed"] = o.seed;
    Json arr = Json::array();
    for (const auto& x : path) arr.push_back(x.str());
    j["path"] = arr;
    payload = j.dump(2);
  }
  auto params = base_params(o);
  params["start"] = o.start;
  params["steps"] = o.steps;
  Runner("sample", o, out).emit(payload, "sample n=" + std::to_string(o.n) + " steps=" + std::to_string(hi), params, o.seed);
  return ok;
}

inline int cmd_stats(const Options& o, std::ostream& out) {
  if (o.k != 2) throw UsageError("stats needs --k 2");
  if (o.n < 2) throw UsageError("stats needs --n >= 2");
  auto [lo, hi] = parse_steps(o.steps);
  const State x = parse_start(o);
  Json j = header("stats");
  j["n"] = o.n;
  j["start"] = x.str();
  j["stationary"] = {{"alternation_mean", to_string(stationary_alternation_mean(o.n))},
                     {"alternation_variance", to_string(stationary_alternation_variance(o.n))}};
  Json rows = Json::array();
  for (unsigned long l = lo; l <= hi; ++l) {
    const MomentReport m = ones_moments(x, l);
    rows.push_back({{"l", l},
                    {"alternation_mean", to_string(expected_alternations_after(x, l))},
                    {"ones_mean", to_string(m.mean)},
                    {"ones_variance", to_string(m.variance)}});
  }
  j["moments"] = rows;
  auto params = base_params(o);
  params["start"] = o.start;
  params["steps"] = o.steps;
  Runner("stats", o, out).emit(j.dump(2), "stats n=" + std::to_string(o.n) + " rows=" + std::to_string(rows.size()), params);
  return ok;
}

inline int cmd_hist(const Options& o, std::ostream& out) {
  if (o.k != 2) throw UsageError("hist needs --k 2");
  const HistogramRun run = alternation_histogram(o.n, o.samples, o.bins, o.seed);
  const std::string fmt = format_for(o, "json");
  auto params = base_params(o);
  params["samples"] = std::to_string(o.samples);
  params["bins"] = std::to_string(o.bins);
  std::ostringstream summary;
  summary << "hist n=" << o.n << " samples=" << o.samples << " mean=" << run.fit.mean << " se=" << run.fit.mean_se;
  Runner("hist", o, out).emit(fmt == "csv" ? histogram_csv(o.n, run) : histogram_json(o.n, run).dump(2), summary.str(),
                              params, o.seed);
  return ok;
}

inline int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  SuiteOptions so;
  so.max_n = o.max_n;
  std::vector<CheckResult> rs;
  try {
    rs = run_suite(o.suite, so);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string fmt = format_for(o, "json");
  if (fmt != "json" && fmt != "text") throw UsageError("verify supports --format json or text");
  const std::size_t failed = static_cast<std::size_t>(std::count_if(rs.begin(), rs.end(), [](auto& r) { return !r.pass; }));
  Runner("verify", o, out)
      .emit(fmt == "text" ? report_text(rs) : report_json(rs).dump(2),
            "verify suite=" + o.suite + " checks=" + std::to_string(rs.size()) + " failed=" + std::to_string(failed),
            {{"suite", o.suite}, {"max_n", std::to_string(o.max_n)}});
  if (failed) {
    for (const auto& r : rs)
      if (!r.pass) {
        err << "first failure: " << r.name << " [" << r.param_key() << "] " << r.witness << "\n";
        break;
      }
    return verify_failed;
  }
  return ok;
}

// Returns the process exit status.
inline int dispatch(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact and Monte Carlo tools for the Burnside process on C_k^n"};
  app.name("burnside");
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"kernel", "exact transition matrix"},
      {"spectrum", "eigenvalues with multiplicities"},
      {"basis", "orthogonal eigenbasis (k = 2, n <= 7)"},
      {"chi2", "exact chi-square distance after l steps"},
      {"tv", "exact total variation after l steps"},
      {"avg-chi2", "pi-averaged chi-square, exact or in log space"},
      {"cutoff-scan", "log avg chi-square around the cutoff time"},
      {"sample", "seeded trajectory of the chain"},
      {"stats", "exact moments of the ones count and alternations"},
      {"hist", "Monte Carlo histogram of T/(n-1) under pi"},
      {"verify", "run the verification suite"}};
  for (const auto& [c, what] : commands) {
    CLI::App* sub = app.add_subcommand(c, what);
    sub->add_option("--n", o.n, "number of coordinates");
    sub->add_option("--k", o.k, "alphabet size")->check(CLI::Range(2, 10));
    sub->add_option("--start", o.start, "state literal | zeros | one-one | half | orbit:i | avg");
    sub->add_option("--steps", o.steps, "step count l or range a..b");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--mode", o.mode, "exact | log");
    sub->add_option("--out", o.out, "output file (stdout when absent)");
    sub->add_option("--format", o.format, "json | csv (text for verify)");
    if (c == "verify") {
      sub->add_option("--suite", o.suite, "all | eigen | orthobasis | lumpings | identities | johnson | pplus | ck | statistics");
      sub->add_option("--max-n", o.max_n, "largest n in the suite");
    }
    if (c == "hist") {
      sub->add_option("--samples", o.samples, "number of stationary draws");
      sub->add_option("--bins", o.bins, "histogram bins on [0,1]");
    }
    if (c == "cutoff-scan") {
      sub->add_option("--ns", o.ns, "comma-separated sizes");
      sub->add_option("--factors", o.factors, "comma-separated multiples of the cutoff time");
      sub->add_flag("--plain-log", o.plain_log, "use log n in the cutoff time");
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return usage;
  }
  const std::string c = app.get_subcommands().front()->get_name();
  try {
    if (!o.format.empty() && o.format != "json" && o.format != "csv" && o.format != "text")
      throw UsageError("--format must be json, csv or text");
    if (o.n < 0) throw UsageError("--n must be non-negative");
    // dense commands index states in 64 bits; the rest are closed forms or samplers
    const bool dense = c == "kernel" || c == "spectrum" || c == "basis" || c == "verify";
    if (dense && o.n > 62) throw UsageError("--n out of range for " + c);
    if (c == "kernel") return cmd_kernel(o, out);
    if (c == "spectrum") return cmd_spectrum(o, out);
    if (c == "basis") return cmd_basis(o, out);
    if (c == "chi2" || c == "tv") return cmd_distance(c, o, out);
    if (c == "avg-chi2") return cmd_avg_chi2(o, out);
    if (c == "cutoff-scan") return cmd_cutoff_scan(o, out);
    if (c == "sample") return cmd_sample(o, out);
    if (c == "stats") return cmd_stats(o, out);
    if (c == "hist") return cmd_hist(o, out);
    return cmd_verify(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.get_subcommand(c)->help();
    return usage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return cap;
  } catch (const UnwritableOutput& e) {
    err << "error: " << e.what() << "\n";
    return unwritable;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
}

}  // namespace burnside::cli
