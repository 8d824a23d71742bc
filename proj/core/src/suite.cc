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

#include "qinstr/suite.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "qinstr/error.h"
#include "qinstr/randgen.h"

namespace qinstr {

namespace {

constexpr double kEquivalenceTolerance = 1e-9;

bool StartsWith(const std::string& s, const std::string& prefix) {
  return s.compare(0, prefix.size(), prefix) == 0;
}

BoundChainReport GroenewoldChain(const Ensemble& ens, const Instrument& instr, Units units,
                                 double tol_nats) {
  GroenewoldReport g = GroenewoldInequality(ens, instr, units, tol_nats);
  BoundChainReport chain;
  chain.name = "groenewold_lindblad";
  chain.units = units;
  chain.terms = {{"info_gain_average", g.inequality.lhs},
                 {"mutual_information_plus_mean_info_gain", g.inequality.rhs}};
  chain.links.push_back(g.inequality);
  chain.auxiliary = {{"sww_gap", g.sww_gap}};
  // The residual lives in report units; the tolerance is the nats one scaled
  // alike.
  chain.identities.push_back({"gap_equals_sww_gap", g.equivalence_residual,
                              kEquivalenceTolerance * NatsTo(units)});
  return chain;
}

}  // namespace

bool SuiteReport::satisfied() const {
  return std::all_of(chains.begin(), chains.end(), [](const auto& c) { return c.satisfied(); });
}

bool SuiteReport::identities_ok() const {
  return std::all_of(chains.begin(), chains.end(), [](const auto& c) { return c.identities_ok(); });
}

std::vector<IdentityResidual> SuiteReport::Identities() const {
  std::vector<IdentityResidual> out;
  for (const auto& c : chains) {
    for (const auto& id : c.identities) out.push_back({c.name + "/" + id.name, id.residual, id.tolerance});
  }
  return out;
}

const BoundChainReport& SuiteReport::Chain(const std::string& name) const {
  for (const auto& c : chains) {
    if (c.name == name) return c;
  }
  throw Error(ErrorCode::kInvalidParams, "no chain '" + name + "'");
}

double SuiteReport::MinGap(const std::string& chain_prefix, const std::string& link_prefix) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : chains) {
    if (!StartsWith(c.name, chain_prefix)) continue;
    for (const auto* list : {&c.links, &c.extra}) {
      for (const auto& r : *list) {
        if (StartsWith(r.name, link_prefix)) best = std::min(best, r.gap.value());
      }
    }
  }
  return best;
}

void AddFundamentalPair(SuiteReport& report, const std::string& tag, const DensityMatrix& rho,
                        const DensityMatrix& phi, const Instrument& instr) {
  BoundChainReport chain = FundamentalChain(rho, phi, instr, report.units, report.tol_nats);
  chain.name = "fundamental[" + tag + "]";
  report.chains.push_back(std::move(chain));
}

SuiteReport RunBoundSuite(const Ensemble& ens, const Instrument& instr, Units units,
                          double tol_nats) {
  if (ens.dim() != instr.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "ensemble and instrument dimensions differ");
  }
  SuiteReport report;
  report.units = units;
  report.tol_nats = tol_nats;
  DensityMatrix eta = AverageState(ens);
  for (std::size_t a = 0; a < ens.size(); ++a) {
    if (ens.priors()[a] <= 0.0) continue;
    AddFundamentalPair(report, ens.letters()[a], ens.states()[a], eta, instr);
  }
  report.chains.push_back(HolevoChain(ens, instr, units, tol_nats));
  report.chains.push_back(ScutaruChain(ens, instr, units, tol_nats));
  report.chains.push_back(GroenewoldChain(ens, instr, units, tol_nats));
  return report;
}

void SweepConfig::Validate() const {
  auto check = [](const char* name, IntRange r, int lo, int hi) {
    if (r.lo > r.hi || r.lo < lo || r.hi > hi) {
      throw Error(ErrorCode::kInvalidParams, std::string(name) + " range " + std::to_string(r.lo) +
                                                 ":" + std::to_string(r.hi) + " outside [" +
                                                 std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
  };
  check("dim", dim, 2, 8);
  check("outcomes", outcomes, 1, 8);
  check("kraus", kraus, 1, 4);
  check("letters", letters, 1, 8);
}

SweepInstance MakeSweepInstance(const SweepConfig& config, std::size_t index) {
  const std::uint64_t s = SplitSeed(config.seed, index);
  SplitMix64 rng(s);
  auto draw = [&rng](IntRange r) {
    return r.lo + static_cast<int>(rng.Next() % static_cast<std::uint64_t>(r.hi - r.lo + 1));
  };
  GeneratorConfig gc;
  gc.seed = s;
  gc.dim = draw(config.dim);
  gc.num_outcomes = draw(config.outcomes);
  gc.kraus_per_outcome = draw(config.kraus);
  gc.num_letters = draw(config.letters);
  gc.pure_letters = (rng.Next() & 1) != 0;
  gc.Validate();

  Instrument instr = RandomInstrument(gc.dim, gc.num_outcomes, gc.kraus_per_outcome, SplitSeed(s, 1));
  Ensemble ens = RandomEnsemble(gc.dim, gc.num_letters, gc.pure_letters, SplitSeed(s, 2));
  auto random_rank_state = [&](std::uint64_t sub) {
    int rank = 1 + static_cast<int>(SplitSeed(sub, 0) % static_cast<std::uint64_t>(gc.dim));
    return RandomState(gc.dim, rank, sub);
  };
  DensityMatrix rho = random_rank_state(SplitSeed(s, 3));
  DensityMatrix phi = random_rank_state(SplitSeed(s, 4));
  return SweepInstance{index, s, gc, std::move(instr), std::move(ens), std::move(rho), std::move(phi)};
}

SweepRow EvaluateSweepInstance(const SweepConfig& config, std::size_t index) {
  SweepInstance inst = MakeSweepInstance(config, index);
  SuiteReport report = RunBoundSuite(inst.ensemble, inst.instrument, config.units, config.tol_nats);
  AddFundamentalPair(report, "random_pair", inst.rho, inst.phi, inst.instrument);
  return SweepRow{std::move(inst), std::move(report)};
}

namespace {

struct GapColumn {
  const char* column;
  const char* chain_prefix;
  const char* link_prefix;
};

constexpr GapColumn kGapColumns[] = {
    {"gap_fundamental", "fundamental", "fundamental"},
    {"gap_outcome_statistics", "fundamental", "outcome_statistics"},
    {"gap_total_channel", "fundamental", "total_channel_coarse_graining"},
    {"gap_holevo", "holevo", "holevo"},
    {"gap_sww", "holevo", "sww"},
    {"gap_a_priori_lower", "holevo", "a_priori_lower"},
    {"gap_compound_refinement", "scutaru", "compound_refinement"},
    {"gap_compound_vs_scutaru", "scutaru", "compound_vs_scutaru"},
    {"gap_scutaru", "scutaru", "scutaru"},
    {"gap_outcome_compound", "scutaru", "outcome_compound"},
    {"gap_outcome_scutaru", "scutaru", "outcome_scutaru"},
    {"gap_groenewold_lindblad", "groenewold_lindblad", "groenewold_lindblad"},
};

}  // namespace

std::vector<std::string> SweepColumns() {
  std::vector<std::string> cols = {"index", "dim", "outcomes", "kraus", "letters", "pure"};
  for (const auto& g : kGapColumns) cols.emplace_back(g.column);
  cols.insert(cols.end(), {"chi_initial", "mutual_information", "posterior_chi",
                           "equivalence_residual", "max_identity_excess"});
  return cols;
}

std::vector<double> SweepRowValues(const SweepRow& row) {
  const GeneratorConfig& c = row.instance.config;
  std::vector<double> v = {static_cast<double>(row.instance.index), static_cast<double>(c.dim),
                           static_cast<double>(c.num_outcomes), static_cast<double>(c.kraus_per_outcome),
                           static_cast<double>(c.num_letters), c.pure_letters ? 1.0 : 0.0};
  for (const auto& g : kGapColumns) v.push_back(row.report.MinGap(g.chain_prefix, g.link_prefix));
  const BoundChainReport& holevo = row.report.Chain("holevo");
  v.push_back(holevo.Term("chi_initial").value());
  v.push_back(holevo.Term("mutual_information").value());
  v.push_back(holevo.Term("posterior_chi").value());
  v.push_back(row.report.Chain("groenewold_lindblad").identities.front().residual);
  // Largest residual / tolerance ratio over all identities; <= 1 means all
  // identities hold.
  double excess = 0.0;
  for (const auto& id : row.report.Identities()) excess = std::max(excess, id.residual / id.tolerance);
  v.push_back(excess);
  return v;
}

IntRange ParseIntRange(const std::string& text) {
  auto parse = [&text](std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw Error(ErrorCode::kInvalidParams, "bad integer range '" + text + "'");
    }
    return value;
  };
  std::string_view view(text);
  auto colon = view.find(':');
  if (colon == std::string_view::npos) {
    int v = parse(view);
    return {v, v};
  }
  return {parse(view.substr(0, colon)), parse(view.substr(colon + 1))};
}

}  // namespace qinstr
