// Copyright 2026 The qinstr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <optional>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "qinstr/bounds.h"
#include "qinstr/error.h"
#include "qinstr/io.h"
#include "qinstr/randgen.h"
#include "qinstr/suite.h"

#ifndef QINSTR_VERSION
#define QINSTR_VERSION "unknown"
#endif

namespace qinstr::cli {

namespace {

using io::Json;

constexpr int kDefaultOzawaTrials = 200;

struct Common {
  std::string units_name;
  double tol_nats = kDefaultToleranceNats;
  std::uint64_t seed = 0;
  std::string out_path;
  bool skip_validate = false;
  std::vector<std::string> inputs;  // files whose digests go into the manifest
};

struct Context {
  const std::vector<std::string>& args;
  std::ostream& out;
  std::ostream& err;
  Common common;
  Units units = Units::kBits;
};

int ExitFor(const Error& e) { return e.code() == ErrorCode::kParse ? kExitParse : kExitInvariant; }

std::string Fixed(double x, int digits = 6) {
  if (std::isinf(x)) return x > 0 ? "+inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string Fixed(ExtendedReal x, int digits = 6) { return Fixed(x.value(), digits); }

// Shortest representation that reads back to the same double.
std::string Exact(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string Timestamp() {
  const char* epoch = std::getenv("SOURCE_DATE_EPOCH");
  if (epoch == nullptr || *epoch == '\0') return "unset";
  std::time_t t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json Manifest(const Context& ctx) {
  std::string line = "qinstr";
  for (const auto& a : ctx.args) line += " " + a;
  Json inputs = Json::array();
  for (const auto& path : ctx.common.inputs) {
    inputs.push_back({{"path", path}, {"sha256", Sha256Hex(io::ReadFileBytes(path))}});
  }
  return {{"command_line", line},
          {"inputs", std::move(inputs)},
          {"seed", ctx.common.seed},
          {"units", std::string(UnitsName(ctx.units))},
          {"tolerance_nats", ctx.common.tol_nats},
          {"version", QINSTR_VERSION},
          {"timestamp", Timestamp()}};
}

void Emit(const Context& ctx, const std::string& text) {
  if (ctx.common.out_path.empty()) {
    ctx.out << text;
    return;
  }
  std::ofstream f(ctx.common.out_path, std::ios::binary);
  f << text;
  if (!f) throw Error(ErrorCode::kParse, "cannot write '" + ctx.common.out_path + "'");
}

void EmitJson(const Context& ctx, const Json& j) { Emit(ctx, j.dump(2) + "\n"); }

Instrument LoadInstrument(Context& ctx, const std::string& path) {
  ctx.common.inputs.push_back(path);
  return io::InstrumentFromJson(io::ReadJsonFile(path));
}

Ensemble LoadEnsemble(Context& ctx, const std::string& path) {
  ctx.common.inputs.push_back(path);
  return io::EnsembleFromJson(io::ReadJsonFile(path));
}

DensityMatrix LoadState(Context& ctx, const std::string& path) {
  ctx.common.inputs.push_back(path);
  return io::StateFromJson(io::ReadJsonFile(path));
}

void PrintViolations(std::ostream& os, const std::string& what, const ValidationReport& v) {
  for (const auto& x : v.violations) {
    os << what << ": " << x.kind;
    if (!x.outcome.empty()) os << " [" << x.outcome << "]";
    os << ": " << x.message << "\n";
  }
}

Json SuiteToJson(const Context& ctx, const SuiteReport& suite) {
  Json chains = Json::array();
  for (const auto& c : suite.chains) chains.push_back(io::ToJson(c));
  Json ids = Json::array();
  for (const auto& id : suite.Identities()) ids.push_back(io::ToJson(id));
  return {{"manifest", Manifest(ctx)},
          {"units", std::string(UnitsName(ctx.units))},
          {"satisfied", suite.satisfied()},
          {"identities_ok", suite.identities_ok()},
          {"chains", std::move(chains)},
          {"identities", std::move(ids)}};
}

// ---------------------------------------------------------------------------
// validate

int CmdValidate(Context& ctx, const std::vector<std::string>& paths) {
  int code = kExitOk;
  for (const auto& path : paths) {
    try {
      Json j = io::ReadJsonFile(path);
      switch (io::DetectKind(j)) {
        case io::FileKind::kInstrument: {
          ValidationReport v = Validate(io::InstrumentFromJson(j));
          if (v.ok) {
            ctx.out << path << ": ok (instrument, max deviation " << Exact(v.max_deviation) << ")\n";
          } else {
            ctx.out << path << ": invalid instrument\n";
            PrintViolations(ctx.out, path, v);
            code = std::max(code, static_cast<int>(kExitInvariant));
          }
          break;
        }
        case io::FileKind::kEnsemble:
          io::EnsembleFromJson(j);
          ctx.out << path << ": ok (ensemble)\n";
          break;
        case io::FileKind::kState:
          io::StateFromJson(j);
          ctx.out << path << ": ok (state)\n";
          break;
      }
    } catch (const Error& e) {
      ctx.out << path << ": " << (e.code() == ErrorCode::kParse ? "unreadable" : "invalid") << ": "
              << e.what() << "\n";
      code = std::max(code, ExitFor(e));
    }
  }
  return code;
}

// ---------------------------------------------------------------------------
// verify / fundamental

// Checks the instrument unless skipped; a skipped failure is still reported
// and turns into a nonzero exit once the run is done.
std::optional<ValidationReport> Precheck(Context& ctx, const Instrument& instr, const std::string& path) {
  ValidationReport v = Validate(instr);
  if (v.ok) return std::nullopt;
  PrintViolations(ctx.err, path, v);
  if (!ctx.common.skip_validate) RequireValid(instr);
  return v;
}

int CmdVerify(Context& ctx, const std::string& instr_path, const std::string& ens_path) {
  Instrument instr = LoadInstrument(ctx, instr_path);
  Ensemble ens = LoadEnsemble(ctx, ens_path);
  std::optional<ValidationReport> bad = Precheck(ctx, instr, instr_path);
  int code = kExitOk;
  try {
    SuiteReport suite = RunBoundSuite(ens, instr, ctx.units, ctx.common.tol_nats);
    Json report = SuiteToJson(ctx, suite);
    report["validation"] = io::ToJson(Validate(instr));
    EmitJson(ctx, report);
    if (!suite.satisfied() || !suite.identities_ok()) code = kExitViolation;
  } catch (const Error& e) {
    if (!bad) throw;
    ctx.err << "evaluation failed on the unvalidated instrument: " << e.what() << "\n";
  }
  return bad ? static_cast<int>(kExitInvariant) : code;
}

int CmdFundamental(Context& ctx, const std::string& instr_path, const std::string& rho_path,
                   const std::string& phi_path) {
  Instrument instr = LoadInstrument(ctx, instr_path);
  DensityMatrix rho = LoadState(ctx, rho_path);
  DensityMatrix phi = LoadState(ctx, phi_path);
  std::optional<ValidationReport> bad = Precheck(ctx, instr, instr_path);
  try {
    SuiteReport suite;
    suite.units = ctx.units;
    suite.tol_nats = ctx.common.tol_nats;
    suite.chains.push_back(FundamentalChain(rho, phi, instr, ctx.units, ctx.common.tol_nats));
    EmitJson(ctx, SuiteToJson(ctx, suite));
    if (bad) return kExitInvariant;
    return suite.satisfied() && suite.identities_ok() ? kExitOk : kExitViolation;
  } catch (const Error& e) {
    if (!bad) throw;
    ctx.err << "evaluation failed on the unvalidated instrument: " << e.what() << "\n";
    return kExitInvariant;
  }
}

// ---------------------------------------------------------------------------
// random

struct RandomArgs {
  std::string kind;
  GeneratorConfig config;
  std::optional<int> rank;
};

int CmdRandom(Context& ctx, RandomArgs& a) {
  a.config.seed = ctx.common.seed;
  a.config.Validate();
  Json obj;
  if (a.kind == "instrument") {
    obj = io::InstrumentToJson(
        RandomInstrument(a.config.dim, a.config.num_outcomes, a.config.kraus_per_outcome, a.config.seed));
  } else if (a.kind == "ensemble") {
    obj = io::EnsembleToJson(RandomEnsemble(a.config.dim, a.config.num_letters, a.config.pure_letters,
                                            a.config.seed));
  } else {
    const int rank = a.rank.value_or(a.config.dim);
    obj = io::StateToJson(RandomState(a.config.dim, rank, a.config.seed));
    obj["rank"] = rank;
  }
  obj["config"] = io::GeneratorConfigToJson(a.config);
  obj["manifest"] = Manifest(ctx);
  EmitJson(ctx, obj);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  std::size_t count = 100;
  std::string dim = "2:4";
  std::string outcomes = "2:4";
  std::string kraus = "1:3";
  std::string letters = "2:4";
};

int CmdSweep(Context& ctx, const SweepArgs& a) {
  SweepConfig config;
  config.seed = ctx.common.seed;
  config.dim = ParseIntRange(a.dim);
  config.outcomes = ParseIntRange(a.outcomes);
  config.kraus = ParseIntRange(a.kraus);
  config.letters = ParseIntRange(a.letters);
  config.units = ctx.units;
  config.tol_nats = ctx.common.tol_nats;
  config.Validate();

  const std::vector<std::string> cols = SweepColumns();
  const std::size_t first_gap = 6;
  const std::size_t num_gaps = cols.size() - first_gap - 5;
  std::vector<double> min_gap(num_gaps, INFINITY);
  bool all_ok = true;

  std::string text;
  Json manifest = Manifest(ctx);
  for (const auto& [key, value] : manifest.items()) text += "# " + key + ": " + value.dump() + "\n";
  for (std::size_t c = 0; c < cols.size(); ++c) text += (c ? "," : "") + cols[c];
  text += "\n";
  for (std::size_t i = 0; i < a.count; ++i) {
    SweepRow row = EvaluateSweepInstance(config, i);
    all_ok = all_ok && row.report.satisfied() && row.report.identities_ok();
    std::vector<double> v = SweepRowValues(row);
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (c >= first_gap && c < first_gap + num_gaps) {
        min_gap[c - first_gap] = std::min(min_gap[c - first_gap], v[c]);
      }
      text += (c ? "," : "") + Exact(v[c]);
    }
    text += "\n";
  }
  text += "min";
  for (std::size_t c = 1; c < cols.size(); ++c) {
    text += ",";
    if (c >= first_gap && c < first_gap + num_gaps) text += Exact(min_gap[c - first_gap]);
  }
  text += "\n";
  Emit(ctx, text);

  const double tol = ctx.common.tol_nats * NatsTo(ctx.units);
  for (double g : min_gap) all_ok = all_ok && g >= -tol;
  return all_ok ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// demo

Ensemble NamedEnsemble(std::vector<double> probs, std::vector<DensityMatrix> states) {
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < probs.size(); ++a) labels.push_back("a" + std::to_string(a));
  return Ensemble(ClassicalDensity(std::move(labels), std::move(probs)), std::move(states));
}

DensityMatrix PlusState() {
  ComplexMatrix m(2, 2);
  m << 0.5, 0.5, 0.5, 0.5;
  return DensityMatrix(m);
}

Instrument NoisyFlip() {
  const double s = std::sqrt(0.5);
  ComplexMatrix x(2, 2);
  x << 0, 1, 1, 0;
  return Instrument(2, {Outcome{"0", {s * Identity(2), s * x}}});
}

void PrintChain(std::ostream& os, const BoundChainReport& r) {
  os << "  chain " << r.name << " (" << UnitsName(r.units) << ")\n";
  for (const auto& t : r.terms) os << "    " << t.name << " = " << Fixed(t.value) << "\n";
  for (const auto& t : r.auxiliary) os << "    " << t.name << " = " << Fixed(t.value) << "\n";
  for (const auto* list : {&r.links, &r.extra}) {
    for (const auto& l : *list) {
      os << "    " << (l.satisfied ? "PASS " : "FAIL ") << l.name << ": " << Fixed(l.lhs)
         << " >= " << Fixed(l.rhs) << " (gap " << Fixed(l.gap, 9) << ")\n";
    }
  }
}

int DemoChains(Context& ctx, const std::string& title, const Ensemble& ens, const Instrument& instr,
               bool with_scutaru) {
  ctx.out << title << "\n";
  for (std::size_t a = 0; a < ens.size(); ++a) {
    ctx.out << "  letter " << ens.letters()[a] << " p = " << Fixed(ens.priors()[a], 3) << "\n";
  }
  ctx.out << "  instrument: " << instr.size() << " outcomes on C^" << instr.dim() << "\n";
  BoundChainReport holevo = HolevoChain(ens, instr, ctx.units, ctx.common.tol_nats);
  PrintChain(ctx.out, holevo);
  bool ok = holevo.satisfied() && holevo.identities_ok();
  if (with_scutaru) {
    BoundChainReport scutaru = ScutaruChain(ens, instr, ctx.units, ctx.common.tol_nats);
    PrintChain(ctx.out, scutaru);
    ok = ok && scutaru.satisfied() && scutaru.identities_ok();
  }
  ctx.out << (ok ? "result: PASS\n" : "result: FAIL\n");
  return ok ? kExitOk : kExitViolation;
}

int DemoNegativeGain(Context& ctx) {
  Instrument instr = NoisyFlip();
  DensityMatrix ket0 = DensityMatrix::Basis(2, 0);
  DensityMatrix post = Posterior(instr, 0, ket0);
  const double gain = InfoGain(instr, ket0, ctx.units);
  ctx.out << "negative information gain\n"
          << "  instrument: one outcome, Kraus sqrt(1/2) I and sqrt(1/2) X\n"
          << "  input |0><0|, posterior diag(" << Fixed(post.matrix()(0, 0).real(), 3) << ", "
          << Fixed(post.matrix()(1, 1).real(), 3) << ")\n"
          << "  posterior impurity = " << Fixed(1.0 - post.Purity()) << "\n"
          << "  I_q = " << Fixed(gain) << " " << UnitsName(ctx.units) << "\n";
  const bool ok = gain < 0.0;
  ctx.out << (ok ? "result: PASS (I_q < 0)\n" : "result: FAIL\n");
  return ok ? kExitOk : kExitViolation;
}

void PrintOzawa(std::ostream& os, const std::string& name, const OzawaReport& r) {
  os << "  " << name << ": pure_preserving = " << (r.pure_preserving ? "true" : "false")
     << ", max impurity = " << Fixed(r.max_posterior_impurity, 9)
     << ", min info gain = " << Fixed(r.min_info_gain, 9)
     << ", implication " << (r.implication_holds ? "holds" : "FAILS") << "\n";
}

int DemoOzawa(Context& ctx) {
  ctx.out << "pure-state preservation and information gain (" << kDefaultOzawaTrials
          << " pure + " << kDefaultOzawaTrials << " mixed trials, seed " << ctx.common.seed << ")\n";
  OzawaReport projective = OzawaCheck(Instrument::ComputationalBasis(2), kDefaultOzawaTrials,
                                      ctx.common.seed, ctx.common.tol_nats, ctx.units);
  OzawaReport noisy = OzawaCheck(NoisyFlip(), kDefaultOzawaTrials, ctx.common.seed, ctx.common.tol_nats,
                                 ctx.units);
  PrintOzawa(ctx.out, "projective Z", projective);
  PrintOzawa(ctx.out, "noisy flip", noisy);
  const bool ok = projective.pure_preserving && projective.implication_holds && !noisy.pure_preserving &&
                  noisy.implication_holds;
  ctx.out << (ok ? "result: PASS\n" : "result: FAIL\n");
  return ok ? kExitOk : kExitViolation;
}

int CmdDemo(Context& ctx, const std::string& name) {
  if (name == "holevo-saturation") {
    Ensemble ens = NamedEnsemble({0.5, 0.5}, {DensityMatrix::Basis(2, 0), DensityMatrix::Basis(2, 1)});
    return DemoChains(ctx, "Holevo saturation: orthogonal letters, matched projective measurement", ens,
                      Instrument::ComputationalBasis(2), false);
  }
  if (name == "sww-demo") {
    Ensemble ens = NamedEnsemble({0.5, 0.5}, {DensityMatrix::Basis(2, 0), PlusState()});
    return DemoChains(ctx, "Letters |0> and |+>, projective Z measurement", ens,
                      Instrument::ComputationalBasis(2), true);
  }
  if (name == "negative-gain") return DemoNegativeGain(ctx);
  if (name == "ozawa") return DemoOzawa(ctx);
  ctx.err << "unknown demo '" << name << "'; expected holevo-saturation, sww-demo, negative-gain or ozawa\n";
  return kExitInvariant;
}

}  // namespace

std::string Sha256Hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* kHex = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[digest[i] >> 4];
    hex += kHex[digest[i] & 15];
  }
  return hex;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{args, out, err, {}, Units::kBits};
  const char* env_units = std::getenv("QINSTR_UNITS");
  ctx.common.units_name = env_units != nullptr && *env_units != '\0' ? env_units : "bits";

  CLI::App app{"Entropy bounds for finite quantum instruments", "qinstr"};
  app.set_version_flag("--version", QINSTR_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--units", ctx.common.units_name, "bits or nats (default: $QINSTR_UNITS, else bits)");
  app.add_option("--tol", ctx.common.tol_nats, "inequality tolerance in nats")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", ctx.common.seed, "generator seed");
  app.add_option("--out", ctx.common.out_path, "output file (default: stdout)");
  app.add_flag("--skip-validate", ctx.common.skip_validate, "do not stop on an invalid instrument");

  std::function<int()> run;

  std::vector<std::string> validate_paths;
  auto* validate = app.add_subcommand("validate", "check instrument, ensemble and state files");
  validate->add_option("paths", validate_paths)->required();
  validate->callback([&] { run = [&] { return CmdValidate(ctx, validate_paths); }; });

  std::string instr_path, ens_path, rho_path, phi_path;
  auto* verify = app.add_subcommand("verify", "run the full bound suite on an instrument and ensemble");
  verify->add_option("--instrument", instr_path)->required();
  verify->add_option("--ensemble", ens_path)->required();
  verify->callback([&] { run = [&] { return CmdVerify(ctx, instr_path, ens_path); }; });

  auto* fundamental = app.add_subcommand("fundamental", "relative entropy chain for a pair of states");
  fundamental->add_option("--instrument", instr_path)->required();
  fundamental->add_option("--rho", rho_path)->required();
  fundamental->add_option("--phi", phi_path)->required();
  fundamental->callback([&] { run = [&] { return CmdFundamental(ctx, instr_path, rho_path, phi_path); }; });

  RandomArgs random_args;
  auto* random = app.add_subcommand("random", "generate a random instrument, ensemble or state");
  random->add_option("kind", random_args.kind)->required()->check(CLI::IsMember({"instrument", "ensemble", "state"}));
  random->add_option("--dim", random_args.config.dim);
  random->add_option("--outcomes", random_args.config.num_outcomes);
  random->add_option("--kraus", random_args.config.kraus_per_outcome);
  random->add_option("--letters", random_args.config.num_letters);
  random->add_flag("--pure", random_args.config.pure_letters);
  random->add_option("--rank", random_args.rank);
  random->callback([&] { run = [&] { return CmdRandom(ctx, random_args); }; });

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "evaluate the bound suite over seeded random pairs (CSV)");
  sweep->add_option("--seeds", sweep_args.count, "number of instances");
  sweep->add_option("--dim", sweep_args.dim, "N or LO:HI");
  sweep->add_option("--outcomes", sweep_args.outcomes, "N or LO:HI");
  sweep->add_option("--kraus", sweep_args.kraus, "N or LO:HI");
  sweep->add_option("--letters", sweep_args.letters, "N or LO:HI");
  sweep->callback([&] { run = [&] { return CmdSweep(ctx, sweep_args); }; });

  std::string demo_name;
  auto* demo = app.add_subcommand("demo", "holevo-saturation, sww-demo, negative-gain or ozawa");
  demo->add_option("name", demo_name)->required();
  demo->callback([&] { run = [&] { return CmdDemo(ctx, demo_name); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvariant;
  }

  try {
    ctx.units = ParseUnits(ctx.common.units_name);
    return run();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitFor(e);
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

}  // namespace qinstr::cli
