// Copyright 2026 The phasenoise Authors
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

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json_writer.h"
#include "phasenoise/classical_witness.h"
#include "phasenoise/errors.h"
#include "phasenoise/extremal.h"
#include "phasenoise/number_format.h"
#include "phasenoise/phase_noise.h"
#include "phasenoise/state_factories.h"
#include "phasenoise/state_io.h"
#include "phasenoise/verify_identities.h"

namespace phasenoise::cli {

namespace {

enum class Format { kJson, kCsv };

struct GlobalOptions {
  std::string output_path;
  std::string format;  // empty: command default
  std::uint64_t seed = 0;
  double tail_tol = kDefaultTailTolerance;
  std::size_t max_dim = kDefaultMaxDim;
  int precision = kDefaultSignificantDigits;
  unsigned threads = 1;

  RealizeDefaults realize() const { return {tail_tol, max_dim}; }
};

// Thrown for invalid flag combinations; maps to exit code 2.
struct UsageError {
  std::string message;
};

Format resolve_format(const GlobalOptions& g, Format fallback, bool csv_allowed,
                      const std::string& command) {
  if (g.format.empty()) return fallback;
  if (g.format == "json") return Format::kJson;
  if (g.format == "csv") {
    if (!csv_allowed) throw UsageError{"--format csv is not available for '" + command + "'"};
    return Format::kCsv;
  }
  throw UsageError{"unknown format '" + g.format + "'"};
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json moments_json(const Moments& m) {
  Json j;
  j["mean_n"] = m.mean_n;
  j["var_n"] = m.var_n;
  j["e_minus"] = complex_json(m.e_minus);
  j["abs_e_minus"] = std::abs(m.e_minus);
  j["p0"] = m.p0;
  j["c_mean"] = complex_json(m.c_mean);
  j["s_mean"] = complex_json(m.s_mean);
  j["c_var"] = m.c_var;
  j["s_var"] = m.s_var;
  return j;
}

Json noise_json(const NoiseReport& r) {
  Json j;
  j["moments"] = moments_json(r.moments);
  j["phase_noise"] = r.phase_noise;
  j["lhs_eq8"] = r.lhs_eq8;
  j["rhs_eq8"] = r.rhs_eq8;
  j["rhs_eq7"] = r.rhs_eq7;
  j["slack_eq8"] = r.slack_eq8;
  j["slack_eq7"] = r.slack_eq7;
  j["cs_slacks"] = Json::array({r.cs_slacks.first, r.cs_slacks.second});
  return j;
}

Json witness_json(const WitnessReport& w) {
  Json j;
  j["mean_n"] = w.mean_n;
  j["e_minus"] = complex_json(w.e_minus);
  j["phase_noise"] = w.phase_noise;
  j["classical_bound"] = w.classical_bound;
  j["witness"] = w.witness;
  j["nonclassical"] = w.nonclassical;
  return j;
}

Json ensemble_json(const CoherentEnsemble& e) {
  Json components = Json::array();
  for (const EnsembleComponent& c : e.components()) {
    Json item;
    item["weight"] = c.weight;
    item["alpha"] = complex_json(c.alpha);
    components.push_back(std::move(item));
  }
  Json j;
  j["components"] = std::move(components);
  return j;
}

Json state_json(const PureState& s) {
  Json amplitudes = Json::array();
  for (const Complex& c : s.amplitudes()) amplitudes.push_back(complex_json(c));
  Json j;
  j["dim"] = s.dim();
  j["amplitudes"] = std::move(amplitudes);
  return j;
}

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, int precision) : out_(out), precision_(precision) {}

  void header(std::initializer_list<const char*> columns) {
    bool first = true;
    for (const char* c : columns) {
      if (!first) out_ << ',';
      first = false;
      out_ << c;
    }
    out_ << '\n';
  }

  CsvWriter& cell(double x) {
    sep();
    out_ << format_real(x, precision_);
    return *this;
  }
  CsvWriter& cell(std::size_t x) {
    sep();
    out_ << x;
    return *this;
  }
  CsvWriter& cell(int x) {
    sep();
    out_ << x;
    return *this;
  }
  CsvWriter& cell(bool x) {
    sep();
    out_ << (x ? "true" : "false");
    return *this;
  }
  CsvWriter& empty(int count) {
    for (int i = 0; i < count; ++i) sep();
    return *this;
  }
  void end() {
    out_ << '\n';
    first_ = true;
  }

 private:
  void sep() {
    if (!first_) out_ << ',';
    first_ = false;
  }

  std::ostream& out_;
  int precision_;
  bool first_ = true;
};

// ---------------------------------------------------------------- report

struct ReportArgs {
  std::string state;
  std::string ensemble_path;
};

int cmd_report(const GlobalOptions& g, const ReportArgs& a, std::ostream& out) {
  resolve_format(g, Format::kJson, false, "report");
  Json doc;
  if (!a.ensemble_path.empty()) {
    const CoherentEnsemble ensemble = read_ensemble_file(a.ensemble_path);
    const EnsembleMoments m = ensemble_moments(ensemble, g.realize());
    doc["ensemble"] = ensemble_json(ensemble);
    doc["witness"] = witness_json(witness(m.mean_n, m.e_minus));
  } else {
    const StateSpec spec = parse_spec(a.state);
    const PureState state = realize(spec, g.realize());
    const NoiseReport r = report(state);
    doc["state"] = to_string(spec);
    doc["dim"] = state.dim();
    Json noise = noise_json(r);
    for (auto& [key, value] : noise.items()) doc[key] = value;
    doc["witness"] = witness_json(witness(r.moments.mean_n, r.moments.e_minus));
  }
  out << dump_json(doc, g.precision);
  return kExitOk;
}

// ----------------------------------------------------------------- sweep

struct SweepArgs {
  std::string family;
  std::string n, n0, theta, alpha;
};

int cmd_sweep(const GlobalOptions& g, const SweepArgs& a, std::ostream& out,
              std::ostream& err) {
  const Format format = resolve_format(g, Format::kCsv, true, "sweep");

  const std::pair<const char*, const std::string*> candidates[] = {
      {"n", &a.n}, {"n0", &a.n0}, {"theta", &a.theta}, {"alpha", &a.alpha}};
  std::string key;
  std::string base_text = a.family + ":";
  bool first_param = true;
  for (const auto& [name, value] : candidates) {
    if (value->empty()) continue;
    if (value->find(':') != std::string::npos) {
      if (!key.empty()) throw UsageError{"only one parameter may be given as a range"};
      key = name;
      continue;
    }
    base_text += (first_param ? "" : ",") + std::string(name) + "=" + *value;
    first_param = false;
  }
  if (key.empty()) throw UsageError{"sweep needs one parameter given as start:step:end"};
  // The swept parameter needs a placeholder so the base spec validates.
  const std::string placeholder = (key == "theta" || key == "alpha") ? "0" : "2";
  base_text += (first_param ? "" : ",") + key + "=" + placeholder;

  const StateSpec base = parse_spec(base_text);
  const std::string& range_text = *std::find_if(std::begin(candidates), std::end(candidates),
                                                [&](const auto& c) { return c.first == key; })
                                       ->second;
  const ParameterRange range = parse_range(range_text);
  const std::vector<SweepPoint> points = sweep(base, key, range.values, g.realize(), g.threads);

  std::size_t failures = 0;
  for (const SweepPoint& p : points) {
    if (!p.error.empty()) {
      ++failures;
      err << "warning: " << key << "=" << format_real(p.parameter) << ": " << p.error << "\n";
    }
  }

  if (format == Format::kCsv) {
    CsvWriter csv(out, g.precision);
    csv.header({"parameter", "mean_n", "var_n", "abs_e_minus", "phase_noise", "lhs_eq8",
                "rhs_eq7", "classical_bound", "witness"});
    for (const SweepPoint& p : points) {
      csv.cell(p.parameter);
      if (p.report) {
        const NoiseReport& r = *p.report;
        const WitnessReport w = witness(r.moments.mean_n, r.moments.e_minus);
        csv.cell(r.moments.mean_n)
            .cell(r.moments.var_n)
            .cell(std::abs(r.moments.e_minus))
            .cell(r.phase_noise)
            .cell(r.lhs_eq8)
            .cell(r.rhs_eq7)
            .cell(w.classical_bound)
            .cell(w.witness);
      } else {
        csv.empty(8);
      }
      csv.end();
    }
  } else {
    Json rows = Json::array();
    for (const SweepPoint& p : points) {
      Json row;
      row["parameter"] = p.parameter;
      if (p.report) {
        row["report"] = noise_json(*p.report);
        row["witness"] =
            witness_json(witness(p.report->moments.mean_n, p.report->moments.e_minus));
      } else {
        row["error"] = p.error;
      }
      rows.push_back(std::move(row));
    }
    Json doc;
    doc["family"] = std::string(to_string(base.family));
    doc["parameter"] = key;
    doc["points"] = std::move(rows);
    out << dump_json(doc, g.precision);
  }
  return failures == 0 ? kExitOk : kExitRealization;
}

// ---------------------------------------------------------- mc-classical

struct McArgs {
  std::size_t samples = 1000;
  std::size_t max_components = 32;
  double max_alpha = 10.0;
  std::string dump_path;
};

int cmd_mc(const GlobalOptions& g, const McArgs& a, std::ostream& out, std::ostream& err) {
  resolve_format(g, Format::kJson, false, "mc-classical");
  McOptions options;
  options.seed = g.seed;
  options.samples = a.samples;
  options.max_components = a.max_components;
  options.max_alpha = a.max_alpha;
  options.truncation = g.realize();
  options.threads = g.threads;
  options.keep_samples = !a.dump_path.empty();
  const McSummary summary = mc_verify_classical(options);

  if (!a.dump_path.empty()) {
    std::ostringstream csv_text;
    CsvWriter csv(csv_text, g.precision);
    csv.header({"index", "components", "mean_n", "abs_e_minus", "phase_noise",
                "classical_bound", "margin", "nonclassical"});
    for (const McSample& s : summary.per_sample) {
      csv.cell(s.index).cell(s.ensemble.size());
      if (s.error.empty()) {
        csv.cell(s.report.mean_n)
            .cell(std::abs(s.report.e_minus))
            .cell(s.report.phase_noise)
            .cell(s.report.classical_bound)
            .cell(s.margin)
            .cell(s.report.nonclassical);
      } else {
        csv.empty(6);
      }
      csv.end();
    }
    write_text_file(a.dump_path, csv_text.str());
  }

  Json doc;
  doc["samples"] = summary.samples;
  doc["seed"] = g.seed;
  doc["max_components"] = a.max_components;
  doc["max_alpha"] = a.max_alpha;
  doc["violations"] = summary.violations;
  doc["failures"] = summary.failures;
  doc["min_margin"] = summary.min_margin;
  doc["worst_index"] = summary.worst_index;
  doc["worst_case"] = ensemble_json(summary.worst_case);
  out << dump_json(doc, g.precision);

  if (summary.violations > 0) {
    err << "error: " << summary.violations
        << " classical ensembles fell below the classical phase-noise bound\n";
    return kExitVerification;
  }
  if (summary.failures > 0) {
    err << "error: " << summary.failures << " samples could not be evaluated\n";
    return kExitRealization;
  }
  return kExitOk;
}

// -------------------------------------------------------------- extremal

struct ExtremalArgs {
  std::string mean_n;
  std::size_t dim = 0;
  double tol = ExtremalOptions{}.tol;
  std::string state_out;
  std::string sidecar_out;
};

Json extremal_json(const ExtremalResult& r) {
  Json j;
  j["target_n"] = r.target_n;
  j["mu"] = r.mu;
  j["mean_n"] = r.mean_n;
  j["phase_noise"] = r.phase_noise;
  j["eigenvalue"] = r.eigenvalue;
  j["eigen_residual"] = r.eigen_residual;
  j["constraint_residual"] = r.constraint_residual;
  j["iterations"] = r.iterations;
  j["degenerate"] = r.degenerate;
  j["truncation_suspect"] = r.truncation_suspect;
  return j;
}

void warn_extremal(const ExtremalResult& r, std::ostream& err) {
  if (r.degenerate) {
    err << "warning: DegenerateExtremal at target " << format_real(r.target_n)
        << ": top eigenvalue gap below 1e-12\n";
  }
  if (r.truncation_suspect) {
    err << "warning: TruncationSuspect at target " << format_real(r.target_n)
        << ": top amplitude exceeds 1e-8, consider a larger --dim\n";
  }
}

int cmd_extremal(const GlobalOptions& g, const ExtremalArgs& a, std::ostream& out,
                 std::ostream& err) {
  const ParameterRange targets = parse_range(a.mean_n);
  const bool single = a.mean_n.find(':') == std::string::npos;
  const Format format = resolve_format(g, single ? Format::kJson : Format::kCsv, !single,
                                       "extremal");
  ExtremalOptions options;
  options.tol = a.tol;
  options.threads = g.threads;

  if (single) {
    const ExtremalResult r = minimize_phase_noise(targets.values.front(), a.dim, options);
    warn_extremal(r, err);
    Json doc = extremal_json(r);
    doc["witness"] = witness_json(witness(r.state));
    doc["state"] = state_json(r.state);
    out << dump_json(doc, g.precision);
    if (!a.state_out.empty()) write_state_file(a.state_out, r.state, g.precision);
    if (!a.sidecar_out.empty()) {
      Json sidecar;
      sidecar["target_n"] = r.target_n;
      sidecar["mu"] = r.mu;
      sidecar["phase_noise"] = r.phase_noise;
      sidecar["eigen_residual"] = r.eigen_residual;
      sidecar["constraint_residual"] = r.constraint_residual;
      write_text_file(a.sidecar_out, dump_json(sidecar, g.precision));
    }
    return kExitOk;
  }

  if (!a.state_out.empty() || !a.sidecar_out.empty()) {
    throw UsageError{"--state-out/--sidecar-out need a single --mean-n value"};
  }
  const auto points = sweep_extremal(targets.values, a.dim, options);
  std::size_t failures = 0;
  for (const ExtremalSweepPoint& p : points) {
    if (!p.error.empty()) {
      ++failures;
      err << "warning: target " << format_real(p.target_n) << ": " << p.error << "\n";
    } else {
      warn_extremal(*p.result, err);
    }
  }
  if (format == Format::kCsv) {
    CsvWriter csv(out, g.precision);
    csv.header({"target_n", "mu", "mean_n", "phase_noise", "scaled_noise", "eigen_residual",
                "constraint_residual", "iterations", "classical_bound", "witness",
                "nonclassical"});
    for (const ExtremalSweepPoint& p : points) {
      csv.cell(p.target_n);
      if (p.result) {
        const ExtremalResult& r = *p.result;
        const double bound = classical_bound(r.mean_n);
        csv.cell(r.mu)
            .cell(r.mean_n)
            .cell(r.phase_noise)
            .cell(p.scaled_noise)
            .cell(r.eigen_residual)
            .cell(r.constraint_residual)
            .cell(r.iterations)
            .cell(bound)
            .cell(bound - r.phase_noise)
            .cell(bound - r.phase_noise > kWitnessTolerance);
      } else {
        csv.empty(10);
      }
      csv.end();
    }
  } else {
    Json rows = Json::array();
    for (const ExtremalSweepPoint& p : points) {
      Json row;
      row["target_n"] = p.target_n;
      if (p.result) {
        row = extremal_json(*p.result);
        row["scaled_noise"] = p.scaled_noise;
      } else {
        row["error"] = p.error;
      }
      rows.push_back(std::move(row));
    }
    Json doc;
    doc["dim"] = a.dim;
    doc["points"] = std::move(rows);
    out << dump_json(doc, g.precision);
  }
  return failures == 0 ? kExitOk : kExitConvergence;
}

// ----------------------------------------------------- verify-identities

struct VerifyArgs {
  std::size_t trials = 10000;
  bool canary = false;
};

int cmd_verify(const GlobalOptions& g, const VerifyArgs& a, std::ostream& out,
               std::ostream& err) {
  resolve_format(g, Format::kJson, false, "verify-identities");
  VerifyOptions options;
  options.trials = a.trials;
  options.seed = g.seed;
  options.truncation = g.realize();
  options.threads = g.threads;
  options.corrupt_variance_identity = a.canary;
  const VerifyReport report = verify_identities(options);

  Json checks = Json::array();
  for (const IdentityCheck& c : report.checks) {
    Json item;
    item["name"] = c.name;
    item["samples"] = c.samples;
    item["max_violation"] = c.max_violation;
    item["tolerance"] = c.tolerance;
    item["passed"] = c.passed;
    checks.push_back(std::move(item));
  }
  Json doc;
  doc["trials"] = a.trials;
  doc["seed"] = g.seed;
  doc["passed"] = report.passed;
  doc["checks"] = std::move(checks);
  out << dump_json(doc, g.precision);
  if (!report.passed) {
    for (const IdentityCheck& c : report.checks) {
      if (!c.passed) {
        err << "error: " << c.name << " max violation " << format_real(c.max_violation)
            << " exceeds " << format_real(c.tolerance) << "\n";
      }
    }
    return kExitVerification;
  }
  return kExitOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
    case ErrorKind::kUnknownFamily:
    case ErrorKind::kMissingParam:
    case ErrorKind::kBadValue:
      return kExitParse;
    case ErrorKind::kBisectionFailure:
    case ErrorKind::kConvergenceFailure:
      return kExitConvergence;
    default:
      return kExitRealization;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Phase noise, number-phase uncertainty and classicality checks for "
               "single-mode field states"};
  app.name("phasenoise");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--output,-o", g.output_path, "Write results to this file instead of stdout");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", g.seed, "Master seed for randomized commands");
  app.add_option("--tail-tol", g.tail_tol, "Discarded tail probability for coherent states")
      ->check(CLI::Range(1e-300, 1e-6));
  app.add_option("--max-dim", g.max_dim, "Largest Fock dimension for coherent states")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));
  app.add_option("--precision", g.precision, "Significant digits in text output")
      ->check(CLI::Range(1, 17));
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores); output is identical");

  ReportArgs report_args;
  CLI::App* report_cmd = app.add_subcommand("report", "Moments, uncertainty slacks and witness for one state");
  auto* state_opt = report_cmd->add_option("--state", report_args.state, "State spec, e.g. triangle:n0=100");
  auto* ensemble_opt = report_cmd->add_option("--ensemble", report_args.ensemble_path,
                                              "Coherent-ensemble document (witness only)");
  state_opt->excludes(ensemble_opt);
  report_cmd->require_option(1);

  SweepArgs sweep_args;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Reports over a parameter range");
  sweep_cmd->add_option("--family", sweep_args.family, "number, coherent, tps or triangle")
      ->required();
  sweep_cmd->add_option("--n", sweep_args.n, "Photon number (number family)");
  sweep_cmd->add_option("--n0", sweep_args.n0, "n0 (tps, triangle)");
  sweep_cmd->add_option("--theta", sweep_args.theta, "Phase ramp (tps)");
  sweep_cmd->add_option("--alpha", sweep_args.alpha, "Coherent amplitude (real when swept)");

  McArgs mc_args;
  CLI::App* mc_cmd = app.add_subcommand("mc-classical", "Monte Carlo check of the classical bound");
  mc_cmd->add_option("--samples", mc_args.samples, "Number of random ensembles")
      ->check(CLI::PositiveNumber);
  mc_cmd->add_option("--max-components", mc_args.max_components, "Largest ensemble size")
      ->check(CLI::PositiveNumber);
  mc_cmd->add_option("--max-alpha", mc_args.max_alpha, "Radius of the alpha disk")
      ->check(CLI::NonNegativeNumber);
  mc_cmd->add_option("--dump", mc_args.dump_path, "Write per-sample CSV to this file");

  ExtremalArgs extremal_args;
  CLI::App* extremal_cmd =
      app.add_subcommand("extremal", "Minimum phase noise at fixed mean photon number");
  extremal_cmd->add_option("--mean-n", extremal_args.mean_n, "Target <N>, or start:step:end")
      ->required();
  extremal_cmd->add_option("--dim", extremal_args.dim, "Fock dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  extremal_cmd->add_option("--tol", extremal_args.tol, "Relative tolerance on <N>")
      ->check(CLI::Range(1e-12, 1e-2));
  extremal_cmd->add_option("--state-out", extremal_args.state_out, "Write the state document here");
  extremal_cmd->add_option("--sidecar-out", extremal_args.sidecar_out,
                           "Write {target_n, mu, phase_noise, residuals} here");

  VerifyArgs verify_args;
  CLI::App* verify_cmd =
      app.add_subcommand("verify-identities", "Randomized check of all identities and bounds");
  verify_cmd->add_option("--trials", verify_args.trials, "Random states to test")
      ->check(CLI::PositiveNumber);
  // Checker self-test; deliberately undocumented.
  verify_cmd->add_flag("--canary-flip-variance", verify_args.canary)->group("");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("phasenoise");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (*report_cmd) {
      code = cmd_report(g, report_args, buffer);
    } else if (*sweep_cmd) {
      code = cmd_sweep(g, sweep_args, buffer, err);
    } else if (*mc_cmd) {
      code = cmd_mc(g, mc_args, buffer, err);
    } else if (*extremal_cmd) {
      code = cmd_extremal(g, extremal_args, buffer, err);
    } else if (*verify_cmd) {
      code = cmd_verify(g, verify_args, buffer, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
    return kExitParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }

  try {
    if (g.output_path.empty()) {
      out << buffer.str();
    } else {
      write_text_file(g.output_path, buffer.str());
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitRealization;
  }
  return code;
}

}  // namespace phasenoise::cli
