#pragma once

#include "burnside/kernel.hpp"
#include "burnside/mixing.hpp"
#include "burnside/orthobasis.hpp"
#include "burnside/statistics.hpp"
#include "burnside/verifier.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace burnside {

inline constexpr const char* kSchema = "burnside/1";
inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

struct UnwritableOutput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw UnwritableOutput("cannot open " + path + " for writing");
  f << content;
  if (!f.flush()) throw UnwritableOutput("write failed for " + path);
}

inline Json header(const std::string& kind) { return Json{{"schema", kSchema}, {"kind", kind}}; }

inline Json rational_array(const Vec& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

inline Json kernel_json(const Kernel& K) {
  Json j = header("kernel");
  j["n"] = K.n;
  j["k"] = K.k;
  Json states = Json::array();
  for (std::size_t i = 0; i < K.size(); ++i) states.push_back(State::from_index(i, K.n, K.k).str());
  j["states"] = states;
  j["stationary"] = rational_array(K.stationary);
  Json rows = Json::array();
  for (std::size_t i = 0; i < K.size(); ++i) rows.push_back(rational_array(K.matrix.row(i)));
  j["matrix"] = rows;
  return j;
}

inline std::string kernel_csv(const Kernel& K) {
  std::ostringstream s;
  s << "# schema=" << kSchema << " kind=kernel n=" << K.n << " k=" << K.k << "\n";
  s << "from,to,probability\n";
  for (std::size_t i = 0; i < K.size(); ++i)
    for (std::size_t j = 0; j < K.size(); ++j)
      s << State::from_index(i, K.n, K.k).str() << "," << State::from_index(j, K.n, K.k).str() << ","
        << to_string(K(i, j)) << "\n";
  return s.str();
}

inline Json basis_json(int n, const std::vector<OrthoVector>& basis) {
  Json j = header("basis");
  j["n"] = n;
  Json states = Json::array();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) states.push_back(State::from_index(x, n, 2).str());
  j["states"] = states;
  Json vs = Json::array();
  for (const OrthoVector& f : basis)
    vs.push_back({{"m", f.m},
                  {"l", f.l},
                  {"tableau", f.tableau.str()},
                  {"eigenvalue", to_string(f.eigenvalue.value)},
                  {"squared_norm", to_string(f.squared_norm)},
                  {"coords", rational_array(f.coords)}});
  j["vectors"] = vs;
  return j;
}

inline Json check_json(const CheckResult& r) {
  Json p = Json::object();
  for (const auto& [k, v] : r.params) p[k] = v;
  Json j{{"name", r.name}, {"params", p}, {"status", r.pass ? "pass" : "fail"}, {"witness", r.witness}};
  if (r.tolerance_tagged) j["tolerance_tagged"] = true;
  return j;
}

// Sorted by (name, params); an empty input gives a valid empty report.
inline Json report_json(std::vector<CheckResult> results) {
  sort_results(results);
  Json j = header("report");
  Json arr = Json::array();
  for (const auto& r : results) arr.push_back(check_json(r));
  j["results"] = arr;
  return j;
}

inline std::string report_text(std::vector<CheckResult> results) {
  sort_results(results);
  std::ostringstream s;
  for (const auto& r : results)
    s << (r.pass ? "PASS " : "FAIL ") << r.name << " [" << r.param_key() << "] " << r.witness << "\n";
  return s.str();
}

inline std::string curve_csv(const std::string& metric, const std::string& start, int n, int k,
                             const std::vector<std::pair<unsigned long, std::string>>& points) {
  std::ostringstream s;
  s << "# schema=" << kSchema << " kind=curve metric=" << metric << " n=" << n << " k=" << k << " start=" << start << "\n";
  s << "l," << metric << "\n";
  for (const auto& [l, v] : points) s << l << "," << v << "\n";
  return s.str();
}

inline Json curve_json(const std::string& metric, const std::string& start, int n, int k,
                       const std::vector<std::pair<unsigned long, std::string>>& points) {
  Json j = header("curve");
  j["metric"] = metric;
  j["n"] = n;
  j["k"] = k;
  j["start"] = start;
  Json pts = Json::array();
  for (const auto& [l, v] : points) pts.push_back({{"l", l}, {metric, v}});
  j["points"] = pts;
  return j;
}

inline Json histogram_json(int n, const HistogramRun& run) {
  Json j = header("histogram");
  j["n"] = n;
  j["samples"] = run.histogram.samples;
  j["seed"] = run.histogram.seed;
  j["statistic"] = "T/(n-1)";
  j["edges"] = run.histogram.edges;
  j["counts"] = run.histogram.counts;
  j["fit"] = {{"mean", run.fit.mean},
              {"mean_se", run.fit.mean_se},
              {"variance", run.fit.variance},
              {"sup_discrepancy_limit", run.fit.sup_discrepancy_limit},
              {"sup_discrepancy_exact", run.fit.sup_discrepancy_exact}};
  return j;
}

inline std::string histogram_csv(int n, const HistogramRun& run) {
  std::ostringstream s;
  s << "# schema=" << kSchema << " kind=histogram n=" << n << " samples=" << run.histogram.samples
    << " seed=" << run.histogram.seed << "\n";
  s << "lo,hi,count\n";
  for (std::size_t b = 0; b < run.histogram.counts.size(); ++b)
    s << run.histogram.edges[b] << "," << run.histogram.edges[b + 1] << "," << run.histogram.counts[b] << "\n";
  return s.str();
}

struct RunManifest {
  std::string command;
  std::map<std::string, std::string> params;
  std::optional<std::uint64_t> seed;
  std::string version = kToolVersion;
  std::vector<std::string> outputs;
  double seconds = 0;

  Json to_json() const {
    Json j = header("manifest");
    j["command"] = command;
    j["params"] = params;
    j["seed"] = seed ? Json(*seed) : Json(nullptr);
    j["version"] = version;
    j["outputs"] = outputs;
    j["wall_seconds"] = seconds;
    return j;
  }
};

}  // namespace burnside
