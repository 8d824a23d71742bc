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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qinstr/bounds.h"
#include "qinstr/entropy.h"
#include "qinstr/io.h"
#include "qinstr/randgen.h"
#include "qinstr/suite.h"
#include "test_util.h"

namespace qinstr {
namespace {

using testing::BinaryEntropyBits;
using Clock = std::chrono::steady_clock;

constexpr double kTolNats = 1e-9;
constexpr std::size_t kSweepSize = 500;

struct Verdict {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

SweepConfig AcceptanceSweep() {
  SweepConfig c;
  c.seed = 20260101;
  c.dim = {2, 4};
  c.outcomes = {2, 4};
  c.kraus = {1, 3};
  c.letters = {2, 4};
  c.units = Units::kNats;
  c.tol_nats = kTolNats;
  return c;
}

// Shared by criteria 3 through 6.
struct SweepData {
  std::vector<SweepRow> rows;
  double seconds = 0;
};

const SweepData& Sweep() {
  static const SweepData data = [] {
    SweepData d;
    SweepConfig c = AcceptanceSweep();
    auto start = Clock::now();
    for (std::size_t i = 0; i < kSweepSize; ++i) d.rows.push_back(EvaluateSweepInstance(c, i));
    d.seconds = Seconds(start);
    return d;
  }();
  return data;
}

Verdict DemoScenario() {
  Verdict o;
  auto start = Clock::now();
  Ensemble ens = testing::DemoEnsemble();
  Instrument z = testing::ProjectiveZ();
  BoundChainReport holevo = HolevoChain(ens, z);
  BoundChainReport scutaru = ScutaruChain(ens, z);
  const double secs = Seconds(start);

  const double chi = BinaryEntropyBits((2.0 - std::sqrt(2.0)) / 4.0);
  const double ic = BinaryEntropyBits(0.25) - 0.5;
  const double chi_tau = chi - 0.75 * BinaryEntropyBits((1.0 - std::sqrt(5.0) / 3.0) / 2.0);
  const double tol = 1e-3;
  auto near = [&](const BoundChainReport& r, const char* name, double want) {
    double got = r.Term(name).value();
    o.Require(std::abs(got - want) <= tol, std::string(name) + " = " + Num(got) + ", expected " + Num(want));
  };
  near(holevo, "chi_initial", chi);
  near(holevo, "mutual_information", ic);
  near(holevo, "posterior_chi", 0.0);
  near(holevo, "chi_final", ic);
  near(scutaru, "chi_tau", chi_tau);
  o.Require(std::abs(holevo.Link("a_priori_lower").gap.value()) <= tol, "a priori link not tight");
  o.Require(holevo.satisfied() && scutaru.satisfied(), "chain ordering violated");
  o.Require(holevo.Term("chi_initial").value() >= holevo.Term("mutual_information").value(), "chi < I_c");
  o.Require(scutaru.Term("mutual_information").value() >= scutaru.Term("chi_tau").value(), "I_c < chi_tau");
  o.Require(secs < 1.0, "runtime " + Num(secs) + " s");
  if (o.pass) {
    o.detail = "chi " + Num(chi) + " >= I_c " + Num(ic) + " >= chi_final " + Num(ic) + "; I_c >= chi_tau " +
               Num(scutaru.Term("chi_tau").value()) + " in " + Num(secs) + " s";
  }
  return o;
}

Verdict HolevoSaturation() {
  Verdict o;
  BoundChainReport r = HolevoChain(testing::OrthogonalEnsemble(), testing::ProjectiveZ());
  o.Require(std::abs(r.Term("chi_initial").value() - 1.0) <= 1e-9, "chi != 1");
  o.Require(std::abs(r.Term("mutual_information").value() - 1.0) <= 1e-9, "I_c != 1");
  for (const auto* list : {&r.links, &r.extra}) {
    for (const auto& l : *list) o.Require(std::abs(l.gap.value()) <= 1e-9, l.name + " gap " + Num(l.gap.value()));
  }
  if (o.pass) o.detail = "chi = I_c = 1 bit, all links tight";
  return o;
}

Verdict PropertySweep() {
  Verdict o;
  const SweepData& d = Sweep();
  std::size_t links = 0;
  double min_gap = INFINITY;
  for (const auto& row : d.rows) {
    for (const auto& chain : row.report.chains) {
      for (const auto* list : {&chain.links, &chain.extra}) {
        for (const auto& l : *list) {
          ++links;
          min_gap = std::min(min_gap, l.gap.value());
          o.Require(l.gap.value() >= -kTolNats,
                    "instance " + std::to_string(row.instance.index) + " " + chain.name + "/" + l.name + " gap " +
                        Num(l.gap.value()));
        }
      }
    }
  }
  o.Require(d.seconds < 60.0, "runtime " + Num(d.seconds) + " s");
  if (o.pass) {
    o.detail = std::to_string(kSweepSize) + " instances, " + std::to_string(links) + " inequalities, min gap " +
               Num(min_gap) + " nats, " + Num(d.seconds) + " s";
  }
  return o;
}

Verdict Equivalence() {
  Verdict o;
  double worst = 0;
  for (const auto& row : Sweep().rows) {
    const BoundChainReport& g = row.report.Chain("groenewold_lindblad");
    const BoundChainReport& h = row.report.Chain("holevo");
    double diff = std::abs(g.Link("groenewold_lindblad").gap.value() - h.Link("sww").gap.value());
    worst = std::max(worst, diff);
    o.Require(diff <= kTolNats, "instance " + std::to_string(row.instance.index) + " differs by " + Num(diff));
  }
  if (o.pass) o.detail = "max |gap difference| " + Num(worst) + " nats";
  return o;
}

bool StartsWith(const std::string& s, const char* p) { return s.rfind(p, 0) == 0; }

Verdict ChannelIdentities() {
  Verdict o;
  double channel = 0, formula = 0;
  for (const auto& row : Sweep().rows) {
    for (const auto& chain : row.report.chains) {
      for (const auto& id : chain.identities) {
        if (StartsWith(id.name, "outcome_distribution_is_classical_part") ||
            StartsWith(id.name, "total_channel_is_quantum_part")) {
          channel = std::max(channel, id.residual);
          o.Require(id.residual <= 1e-12, chain.name + "/" + id.name + " residual " + Num(id.residual));
        } else if (StartsWith(id.name, "hybrid_decomposition")) {
          formula = std::max(formula, id.residual);
          o.Require(id.residual <= 1e-9, chain.name + "/" + id.name + " residual " + Num(id.residual));
        }
      }
    }
  }
  if (o.pass) o.detail = "channel residual " + Num(channel) + ", two-formula residual " + Num(formula);
  return o;
}

bool IsProjective(const Instrument& instr) {
  for (std::size_t w = 0; w < instr.size(); ++w) {
    if (instr.outcomes()[w].kraus.size() != 1) return false;
    ComplexMatrix e = Effect(instr, w);
    if (MaxAbsDiff(e * e, e) > 1e-9) return false;
  }
  return true;
}

Verdict SwwStrictness() {
  Verdict o;
  std::size_t eligible = 0, strict = 0;
  for (const auto& row : Sweep().rows) {
    if (IsProjective(row.instance.instrument)) continue;
    ++eligible;
    double bits = row.report.Chain("holevo").Term("posterior_chi").value() * NatsTo(Units::kBits);
    strict += bits > 1e-3;
  }
  const double frac = eligible ? static_cast<double>(strict) / eligible : 0.0;
  o.Require(eligible > 0 && frac >= 0.9, "fraction " + Num(frac));
  if (o.pass) {
    o.detail = std::to_string(strict) + "/" + std::to_string(eligible) + " non-projective instances with posterior chi > 1e-3 bits";
  }
  return o;
}

Verdict OzawaTheorem() {
  Verdict o;
  double worst_impurity = 0, worst_gain = INFINITY;
  for (std::uint64_t k = 0; k < 50; ++k) {
    SplitMix64 rng(SplitSeed(777, k));
    const int dim = 2 + static_cast<int>(rng.Next() % 3);
    const int outcomes = 2 + static_cast<int>(rng.Next() % 3);
    Instrument instr = RandomInstrument(dim, outcomes, 1, SplitSeed(778, k));
    OzawaReport r = OzawaCheck(instr, 200, SplitSeed(779, k), kTolNats, Units::kNats);
    worst_impurity = std::max(worst_impurity, r.max_posterior_impurity);
    worst_gain = std::min(worst_gain, r.min_info_gain);
    o.Require(r.pure_preserving && r.max_posterior_impurity <= 1e-9,
              "instrument " + std::to_string(k) + " impurity " + Num(r.max_posterior_impurity));
    o.Require(r.min_info_gain >= -1e-9, "instrument " + std::to_string(k) + " gain " + Num(r.min_info_gain));
  }
  Instrument noisy = testing::NoisyFlip();
  DensityMatrix ket0 = testing::Ket0();
  const double impurity = 1.0 - Posterior(noisy, 0, ket0).Purity();
  const double gain = InfoGain(noisy, ket0, Units::kBits);
  o.Require(std::abs(impurity - 0.5) <= 1e-9, "noisy impurity " + Num(impurity));
  o.Require(std::abs(gain + 1.0) <= 1e-9, "noisy gain " + Num(gain));
  o.Require(!OzawaCheck(noisy, 200, 1, kTolNats, Units::kBits).pure_preserving, "noisy flip judged pure-preserving");
  if (o.pass) {
    o.detail = "50 instruments: max impurity " + Num(worst_impurity) + ", min gain " + Num(worst_gain) +
               " nats; noisy flip impurity " + Num(impurity) + ", gain " + Num(gain) + " bits";
  }
  return o;
}

Verdict EntropyKernel() {
  Verdict o;
  int assertions = 0;
  auto check = [&](bool ok, const std::string& what) {
    ++assertions;
    o.Require(ok, what);
  };
  for (std::uint64_t s = 0; s < 250; ++s) {
    const int n = 2 + static_cast<int>(s % 4);
    DensityMatrix rho = RandomState(n, 1 + static_cast<int>(s % n), SplitSeed(s, 0));
    DensityMatrix phi = RandomState(n, n, SplitSeed(s, 1));
    ComplexMatrix u = RandomInstrument(n, 1, 1, SplitSeed(s, 2)).outcomes()[0].kraus[0];
    const double srho = VonNeumannEntropy(rho, Units::kNats);
    DensityMatrix rotated(u * rho.matrix() * u.adjoint());
    check(std::abs(VonNeumannEntropy(rotated, Units::kNats) - srho) <= 1e-9, "unitary invariance, seed " + std::to_string(s));
    ExtendedReal rel = QuantumRelativeEntropy(rho, phi, Units::kNats);
    check(srho >= -1e-12 && rel.is_finite() && rel.value() >= -1e-9, "nonnegativity, seed " + std::to_string(s));
    check(std::abs(QuantumRelativeEntropy(phi, phi, Units::kNats).value()) <= 1e-9, "S(rho|rho), seed " + std::to_string(s));
    // Disjoint supports: first k and last n - k rotated basis vectors.
    const int k = 1 + static_cast<int>(s % (n - 1));
    ComplexMatrix p = ComplexMatrix::Zero(n, n), q = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) (i < k ? p : q)(i, i) = 1.0 / (i < k ? k : n - k);
    DensityMatrix a(u * p * u.adjoint()), b(u * q * u.adjoint());
    check(QuantumRelativeEntropy(a, b, Units::kNats).is_pos_inf(), "disjoint supports, seed " + std::to_string(s));
  }
  if (o.pass) o.detail = std::to_string(assertions) + " assertions, 0 failures";
  o.Require(assertions == 1000, "assertion count " + std::to_string(assertions));
  return o;
}

bool RunTwice(const std::string& args, const std::filesystem::path& dir, std::string* diff) {
  std::string outputs[2];
  for (int k = 0; k < 2; ++k) {
    std::filesystem::path file = dir / ("run" + std::to_string(k) + ".out");
    std::string cmd = std::string(QINSTR_BINARY) + " " + args + " > " + file.string();
    if (std::system(cmd.c_str()) != 0) {
      *diff = "'" + args + "' failed";
      return false;
    }
    outputs[k] = io::ReadFileBytes(file.string());
  }
  if (outputs[0] != outputs[1] || outputs[0].empty()) {
    *diff = "'" + args + "' output differs";
    return false;
  }
  return true;
}

Verdict Determinism() {
  Verdict o;
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "qinstr_acceptance";
  std::filesystem::create_directories(dir);
  for (const char* args : {"random instrument --seed 42 --dim 3 --outcomes 3 --kraus 2",
                           "random ensemble --seed 42 --dim 4 --letters 5", "random state --seed 42 --dim 3 --rank 2",
                           "sweep --seeds 50 --seed 9"}) {
    std::string why;
    o.Require(RunTwice(args, dir, &why), why);
  }
  std::filesystem::remove_all(dir);
  if (o.pass) o.detail = "random and sweep outputs byte-identical across two runs";
  return o;
}

}  // namespace
}  // namespace qinstr

int main() {
  using qinstr::Verdict;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"1 demo scenario", qinstr::DemoScenario},
      {"2 holevo saturation", qinstr::HolevoSaturation},
      {"3 property sweep", qinstr::PropertySweep},
      {"4 sww/groenewold equivalence", qinstr::Equivalence},
      {"5 channel identities", qinstr::ChannelIdentities},
      {"6 sww strictness", qinstr::SwwStrictness},
      {"7 ozawa theorem", qinstr::OzawaTheorem},
      {"8 entropy kernel", qinstr::EntropyKernel},
      {"9 determinism", qinstr::Determinism},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Verdict o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
