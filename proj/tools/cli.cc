// Copyright 2026 The hyperwalk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hyperwalk/classical_walk.h"
#include "hyperwalk/error.h"
#include "hyperwalk/generator.h"
#include "hyperwalk/hg_format.h"
#include "hyperwalk/hypergraph.h"
#include "hyperwalk/random.h"
#include "hyperwalk/report_json.h"
#include "hyperwalk/spectral.h"
#include "hyperwalk/szegedy.h"
#include "json.hpp"

namespace hyperwalk::cli {
namespace {

using nlohmann::json;

// Thrown for bad flag values that CLI11 cannot catch on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to --out when given, else to the default stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw Error(ErrorCode::kIo, "cannot open " + path);
    stream_ = &file_;
    path_ = path;
  }

  std::ostream& stream() { return *stream_; }

  void Close() {
    stream_->flush();
    if (!*stream_) throw Error(ErrorCode::kIo, "write failed: " + path_);
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
  std::string path_ = "<stdout>";
};

void CheckFormat(const std::string& format) {
  if (format != "csv" && format != "json") {
    throw UsageError("format must be csv or json, got \"" + format + "\"");
  }
}

json DistributionToJson(const Distribution& dist) {
  const auto& p = dist.probabilities();
  return json(std::vector<double>(p.begin(), p.end()));
}

void WriteCsvRow(std::ostream& os, int t, const Distribution& dist) {
  os << t;
  for (int i = 0; i < dist.size(); ++i) os << ',' << FormatDouble(dist[i]);
  os << '\n';
}

void WriteCsvHeader(std::ostream& os, const std::string& first, char prefix,
                    int count) {
  os << first;
  for (int i = 0; i < count; ++i) os << ',' << prefix << i;
  os << '\n';
}

// ---- gen -------------------------------------------------------------------

struct GenArgs {
  RegularUniformParams params;
  std::uint64_t seed = 0;
  std::string out;
};

int RunGen(const GenArgs& args, std::ostream& out) {
  const Hypergraph hg = RandomRegularUniform(args.params, args.seed);
  Sink sink(args.out, out);
  sink.stream() << "# d-regular k-uniform: n=" << args.params.num_vertices
                << " m=" << args.params.num_edges
                << " k=" << args.params.edge_size
                << " d=" << args.params.degree << " seed=" << args.seed
                << '\n'
                << SerializeHypergraph(hg);
  sink.Close();
  return kExitOk;
}

// ---- info ------------------------------------------------------------------

struct InfoArgs {
  std::string input;
  std::string format = "text";
};

int RunInfo(const InfoArgs& args, std::ostream& out) {
  if (args.format != "text" && args.format != "json") {
    throw UsageError("format must be text or json");
  }
  const Hypergraph hg = ReadHypergraphFile(args.input);
  const DegreeProfile profile = ComputeDegreeProfile(hg);
  const long vertex_sum = std::accumulate(profile.vertex_degrees.begin(),
                                          profile.vertex_degrees.end(), 0L);
  const long edge_sum = std::accumulate(profile.edge_degrees.begin(),
                                        profile.edge_degrees.end(), 0L);
  const bool connected = IsConnected(hg);
  std::optional<bool> handshake;
  if (profile.is_regular() && profile.is_uniform()) {
    handshake = static_cast<long>(hg.num_vertices()) * *profile.regular_degree ==
                static_cast<long>(hg.num_edges()) * *profile.uniform_size;
  }

  if (args.format == "json") {
    json doc;
    doc["n"] = hg.num_vertices();
    doc["m"] = hg.num_edges();
    doc["vertex_degrees"] = profile.vertex_degrees;
    doc["edge_degrees"] = profile.edge_degrees;
    doc["regular"] = profile.is_regular();
    doc["uniform"] = profile.is_uniform();
    doc["d"] = profile.regular_degree ? json(*profile.regular_degree) : json();
    doc["k"] = profile.uniform_size ? json(*profile.uniform_size) : json();
    doc["N"] = hg.num_incidences();
    doc["vertex_degree_sum"] = vertex_sum;
    doc["edge_degree_sum"] = edge_sum;
    doc["nd_equals_mk"] = handshake ? json(*handshake) : json();
    doc["connected"] = connected;
    out << doc.dump(2) << '\n';
    return kExitOk;
  }

  out << "n=" << hg.num_vertices() << '\n' << "m=" << hg.num_edges() << '\n';
  if (profile.regular_degree) {
    out << "d=" << *profile.regular_degree << '\n';
  } else {
    out << "d=irregular\n";
  }
  if (profile.uniform_size) {
    out << "k=" << *profile.uniform_size << '\n';
  } else {
    out << "k=non-uniform\n";
  }
  out << "N=" << hg.num_incidences() << '\n'
      << "sum d(v)=" << vertex_sum << '\n'
      << "sum delta(e)=" << edge_sum << '\n';
  if (handshake) out << "nd == mk: " << (*handshake ? "true" : "false") << '\n';
  out << "connected: " << (connected ? "true" : "false") << '\n';
  return kExitOk;
}

// ---- classical -------------------------------------------------------------

struct ClassicalArgs {
  std::string input;
  int start = 0;
  int steps = 10;
  std::string format = "csv";
  std::string out;
  bool trajectory = false;
  bool stationary = false;
  std::uint64_t seed = 0;
};

int RunClassical(const ClassicalArgs& args, std::ostream& out) {
  CheckFormat(args.format);
  if (args.steps < 0) throw UsageError("steps must be non-negative");
  if (args.trajectory && args.stationary) {
    throw UsageError("--trajectory and --stationary are exclusive");
  }
  const Hypergraph hg = ReadHypergraphFile(args.input);
  const TransitionSystem ts = BuildTransitions(hg);
  if (args.start < 0 || args.start >= hg.num_vertices()) {
    throw UsageError("unknown start vertex " + std::to_string(args.start));
  }

  Sink sink(args.out, out);
  std::ostream& os = sink.stream();
  if (args.stationary) {
    const StationaryResult vertex = StationaryDistribution(ts, Chain::kVertex);
    const StationaryResult edge = StationaryDistribution(ts, Chain::kEdge);
    if (args.format == "json") {
      json doc;
      doc["vertex"] = DistributionToJson(vertex.distribution);
      doc["vertex_unique"] = vertex.unique;
      doc["edge"] = DistributionToJson(edge.distribution);
      doc["edge_unique"] = edge.unique;
      os << doc.dump(2) << '\n';
    } else {
      os << "chain,unique,probabilities\n";
      for (const auto* r : {&vertex, &edge}) {
        os << (r == &vertex ? "vertex" : "edge") << ','
           << (r->unique ? "true" : "false");
        for (int i = 0; i < r->distribution.size(); ++i) {
          os << ',' << FormatDouble(r->distribution[i]);
        }
        os << '\n';
      }
    }
  } else if (args.trajectory) {
    const auto path = SampleTrajectory(ts, args.start, args.steps, args.seed);
    if (args.format == "json") {
      json doc;
      doc["seed"] = args.seed;
      doc["trajectory"] = path;
      os << doc.dump(2) << '\n';
    } else {
      os << "t,vertex,edge\n";
      for (int t = 0; t <= args.steps; ++t) {
        os << t << ',' << path[2 * t] << ',';
        if (t < args.steps) os << path[2 * t + 1];
        os << '\n';
      }
    }
  } else {
    Distribution dist = Distribution::PointMass(hg.num_vertices(), args.start);
    json rows = json::array();
    if (args.format == "csv") {
      WriteCsvHeader(os, "t", 'v', hg.num_vertices());
    }
    for (int t = 0; t <= args.steps; ++t) {
      if (t > 0) dist = ClassicalStep(ts, dist);
      if (args.format == "csv") {
        WriteCsvRow(os, t, dist);
      } else {
        rows.push_back({{"t", t}, {"p", DistributionToJson(dist)}});
      }
    }
    if (args.format == "json") {
      os << json{{"n", hg.num_vertices()}, {"rows", rows}}.dump(2) << '\n';
    }
  }
  sink.Close();
  return kExitOk;
}

// ---- evolve ----------------------------------------------------------------

struct EvolveArgs {
  std::string input;
  std::string start = "v:0";
  int steps = 10;
  std::string format = "csv";
  std::string out;
};

std::optional<int> ParseInt(std::string_view text) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

StateVector ParseStart(const std::string& spec, const WalkModel& model) {
  if (spec.starts_with("v:")) {
    const auto v = ParseInt(std::string_view(spec).substr(2));
    if (!v || *v < 0 || *v >= model.pair_space.num_vertices()) {
      throw UsageError("unknown start vertex \"" + spec + "\"");
    }
    return StateVector::VertexAnchored(model.walk.isometries(), *v);
  }
  if (spec.starts_with("pair:")) {
    const std::string_view body = std::string_view(spec).substr(5);
    const auto comma = body.find(',');
    if (comma != std::string_view::npos) {
      const auto v = ParseInt(body.substr(0, comma));
      const auto e = ParseInt(body.substr(comma + 1));
      if (v && e && model.pair_space.IndexOf(*v, *e)) {
        return StateVector::Basis(model.pair_space, *v, *e);
      }
    }
    throw UsageError("unknown start pair \"" + spec + "\"");
  }
  throw UsageError("start must be v:<index> or pair:<v>,<e>");
}

int RunEvolve(const EvolveArgs& args, std::ostream& out) {
  CheckFormat(args.format);
  if (args.steps < 0) throw UsageError("steps must be non-negative");
  const Hypergraph hg = ReadHypergraphFile(args.input);
  const WalkModel model = BuildWalkModel(hg, Materialize::kNever);
  const StateVector initial = ParseStart(args.start, model);

  Sink sink(args.out, out);
  std::ostream& os = sink.stream();
  json rows = json::array();
  if (args.format == "csv") WriteCsvHeader(os, "t", 'v', hg.num_vertices());
  StateVector psi = initial;
  for (int t = 0; t <= args.steps; ++t) {
    if (t > 0) psi = ApplyWalk(model.walk, psi);
    const Distribution marginal = VertexDistribution(model.pair_space, psi);
    if (args.format == "csv") {
      WriteCsvRow(os, t, marginal);
    } else {
      rows.push_back({{"t", t}, {"p", DistributionToJson(marginal)}});
    }
  }
  if (args.format == "json") {
    os << json{{"n", hg.num_vertices()},
               {"N", model.pair_space.dimension()},
               {"start", args.start},
               {"rows", rows}}
              .dump(2)
       << '\n';
  }
  sink.Close();
  return kExitOk;
}

// ---- spectrum --------------------------------------------------------------

struct SpectrumArgs {
  std::string input;
  double class_tol = kDefaultClassificationTolerance;
  double tol = kDefaultVerificationTolerance;
  std::string format = "json";
  std::string out;
};

void WriteGroupsCsv(std::ostream& os, const char* kind,
                    const std::vector<EigenvalueGroup>& groups) {
  for (const auto& g : groups) {
    os << kind << ',' << FormatDouble(g.value.real()) << ','
       << FormatDouble(g.value.imag()) << ',' << g.multiplicity << '\n';
  }
}

int RunSpectrum(const SpectrumArgs& args, std::ostream& out) {
  CheckFormat(args.format);
  const Hypergraph hg = ReadHypergraphFile(args.input);
  AnalysisOptions options;
  options.classification_tolerance = args.class_tol;
  options.verification_tolerance = args.tol;
  const SpectralReport report = AnalyzeSpectrum(hg, options);

  Sink sink(args.out, out);
  if (args.format == "json") {
    sink.stream() << SpectralReportToJson(report) << '\n';
  } else {
    std::ostream& os = sink.stream();
    os << "kind,re,im,multiplicity\n";
    WriteGroupsCsv(os, "predicted", report.predicted);
    if (report.actual) WriteGroupsCsv(os, "actual", *report.actual);
  }
  sink.Close();
  return report.verdict == Verdict::kFail ? kExitVerificationFailed : kExitOk;
}

// ---- fuzz ------------------------------------------------------------------

struct FuzzArgs {
  int count = 50;
  int max_n = 60;
  std::uint64_t seed = 1;
  std::string report;
  double class_tol = kDefaultClassificationTolerance;
  double tol = kDefaultVerificationTolerance;
  // When all four are set every instance uses them.
  int n = 0, m = 0, k = 0, d = 0;
};

// Draws (n, m, k, d) with k in [2, 5], d in [1, 5], n <= max_n, N <= cap.
RegularUniformParams DrawParams(Rng& rng, int max_n, int cap) {
  for (int tries = 0; tries < 10000; ++tries) {
    const int k = 2 + static_cast<int>(UniformIndex(rng, 4));
    const int d = 1 + static_cast<int>(UniformIndex(rng, 5));
    const int step = k / std::gcd(k, d);
    std::vector<int> sizes;
    for (int n = step; n <= max_n; n += step) {
      const int m = n * d / k;
      if (n >= k && m >= d && n * d <= cap) sizes.push_back(n);
    }
    if (sizes.empty()) continue;
    const int n = sizes[UniformIndex(rng, sizes.size())];
    return {n, n * d / k, k, d};
  }
  throw UsageError("no feasible (n, m, k, d) with n <= " +
                   std::to_string(max_n));
}

int RunFuzz(const FuzzArgs& args, std::ostream& out) {
  if (args.count < 1) throw UsageError("count must be at least 1");
  const bool forced = args.n > 0 || args.m > 0 || args.k > 0 || args.d > 0;
  if (forced) {
    CheckFeasible({args.n, args.m, args.k, args.d});
  }
  AnalysisOptions options;
  options.classification_tolerance = args.class_tol;
  options.verification_tolerance = args.tol;
  const int cap = options.dense_cap;

  Rng rng(args.seed);
  json instances = json::array();
  int passed = 0;
  std::optional<double> min_theta, max_theta;
  for (int i = 0; i < args.count; ++i) {
    const RegularUniformParams params =
        forced ? RegularUniformParams{args.n, args.m, args.k, args.d}
               : DrawParams(rng, args.max_n, cap);
    const std::uint64_t instance_seed = rng();
    const Hypergraph hg = RandomRegularUniform(params, instance_seed);
    const SpectralReport report = AnalyzeSpectrum(hg, options);
    if (report.verdict == Verdict::kPass) ++passed;
    for (std::size_t j = 0; j < report.angles.size(); ++j) {
      if (report.classification[j] != SingularClass::kInterior) continue;
      const double theta = report.angles[j];
      min_theta = std::min(min_theta.value_or(theta), theta);
      max_theta = std::max(max_theta.value_or(theta), theta);
    }
    instances.push_back({
        {"index", i},
        {"n", params.num_vertices},
        {"m", params.num_edges},
        {"k", params.edge_size},
        {"d", params.degree},
        {"N", report.dimension},
        {"seed", instance_seed},
        {"connected", report.connected},
        {"max_pairing_distance",
         report.max_pairing_distance ? json(*report.max_pairing_distance)
                                     : json()},
        {"max_residual", report.max_residual},
        {"verdict", std::string(VerdictName(report.verdict))},
    });
  }

  json summary;
  summary["count"] = args.count;
  summary["passed"] = passed;
  summary["failed"] = args.count - passed;
  summary["seed"] = args.seed;
  summary["min_theta"] = min_theta ? json(*min_theta) : json();
  summary["max_theta"] = max_theta ? json(*max_theta) : json();
  summary["instances"] = std::move(instances);

  if (!args.report.empty()) {
    Sink sink(args.report, out);
    sink.stream() << summary.dump(2) << '\n';
    sink.Close();
  }
  out << passed << "/" << args.count << " pass\n";
  return passed == args.count ? kExitOk : kExitVerificationFailed;
}

int ExitCodeFor(const Error& e) {
  return e.code() == ErrorCode::kIo ? kExitIo : kExitUsage;
}

}  // namespace

std::string FormatDouble(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                    std::chars_format::general, 17);
  return std::string(buffer, result.ptr);
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Szegedy quantum walks on regular uniform hypergraphs",
               "hyperwalk"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random d-regular k-uniform hypergraph");
  gen_cmd->add_option("--n", gen.params.num_vertices, "vertex count")->required();
  gen_cmd->add_option("--m", gen.params.num_edges, "hyperedge count")->required();
  gen_cmd->add_option("--k", gen.params.edge_size, "hyperedge size")->required();
  gen_cmd->add_option("--d", gen.params.degree, "vertex degree")->required();
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->add_option("--out,-o", gen.out, "output .hg path (default stdout)");

  InfoArgs info;
  auto* info_cmd = app.add_subcommand("info", "Summarize a .hg file");
  info_cmd->add_option("file", info.input, ".hg file")->required();
  info_cmd->add_option("--format", info.format, "text or json");

  ClassicalArgs classical;
  auto* classical_cmd = app.add_subcommand("classical", "Run the classical two-step walk");
  classical_cmd->add_option("file", classical.input, ".hg file")->required();
  classical_cmd->add_option("--start", classical.start, "start vertex");
  classical_cmd->add_option("--steps", classical.steps, "number of steps");
  classical_cmd->add_option("--format", classical.format, "csv or json");
  classical_cmd->add_option("--out,-o", classical.out, "output path");
  classical_cmd->add_flag("--trajectory", classical.trajectory, "sample one trajectory");
  classical_cmd->add_flag("--stationary", classical.stationary, "print stationary distributions");
  classical_cmd->add_option("--seed", classical.seed, "trajectory seed");

  EvolveArgs evolve;
  auto* evolve_cmd = app.add_subcommand("evolve", "Evolve a state under W and print vertex marginals");
  evolve_cmd->add_option("file", evolve.input, ".hg file")->required();
  evolve_cmd->add_option("--start", evolve.start, "v:<index> or pair:<v>,<e>");
  evolve_cmd->add_option("--steps", evolve.steps, "number of steps");
  evolve_cmd->add_option("--format", evolve.format, "csv or json");
  evolve_cmd->add_option("--out,-o", evolve.out, "output path");

  SpectrumArgs spectrum;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Predict and verify the spectrum of W");
  spectrum_cmd->add_option("file", spectrum.input, ".hg file")->required();
  spectrum_cmd->add_option("--class-tol", spectrum.class_tol, "singular value classification tolerance");
  spectrum_cmd->add_option("--tol", spectrum.tol, "verification tolerance");
  spectrum_cmd->add_option("--format", spectrum.format, "json or csv");
  spectrum_cmd->add_option("--out,-o", spectrum.out, "output path");

  FuzzArgs fuzz;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Verify the spectrum on random instances");
  fuzz_cmd->add_option("--count", fuzz.count, "number of instances");
  fuzz_cmd->add_option("--max-n", fuzz.max_n, "largest vertex count");
  fuzz_cmd->add_option("--seed", fuzz.seed, "campaign seed");
  fuzz_cmd->add_option("--report", fuzz.report, "JSON summary path");
  fuzz_cmd->add_option("--class-tol", fuzz.class_tol, "classification tolerance");
  fuzz_cmd->add_option("--tol", fuzz.tol, "verification tolerance");
  fuzz_cmd->add_option("--n", fuzz.n, "force vertex count");
  fuzz_cmd->add_option("--m", fuzz.m, "force hyperedge count");
  fuzz_cmd->add_option("--k", fuzz.k, "force hyperedge size");
  fuzz_cmd->add_option("--d", fuzz.d, "force vertex degree");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return RunGen(gen, out);
    if (*info_cmd) return RunInfo(info, out);
    if (*classical_cmd) return RunClassical(classical, out);
    if (*evolve_cmd) return RunEvolve(evolve, out);
    if (*spectrum_cmd) return RunSpectrum(spectrum, out);
    if (*fuzz_cmd) return RunFuzz(fuzz, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hyperwalk::cli
