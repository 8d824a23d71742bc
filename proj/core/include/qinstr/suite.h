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

// The full bound suite for one (ensemble, instrument) pair, and the seeded
// random instances used by sweeps.

#ifndef QINSTR_SUITE_H_
#define QINSTR_SUITE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qinstr/bounds.h"
#include "qinstr/randgen.h"

namespace qinstr {

struct SuiteReport {
  Units units = Units::kBits;
  double tol_nats = kDefaultToleranceNats;
  // "fundamental[<letter>]" (letter state against the average), any extra
  // fundamental pairs, then "holevo", "scutaru", "groenewold_lindblad".
  std::vector<BoundChainReport> chains;

  bool satisfied() const;
  bool identities_ok() const;
  // Every identity residual, prefixed with its chain name.
  std::vector<IdentityResidual> Identities() const;
  const BoundChainReport& Chain(const std::string& name) const;
  // Smallest gap among inequalities whose name starts with `prefix`, across
  // all chains, in report units. +inf when none matches.
  double MinGap(const std::string& chain_prefix, const std::string& link_prefix) const;
};

SuiteReport RunBoundSuite(const Ensemble& ens, const Instrument& instr, Units units = Units::kBits,
                          double tol_nats = kDefaultToleranceNats);

// Adds a "fundamental[<tag>]" chain for an arbitrary state pair.
void AddFundamentalPair(SuiteReport& report, const std::string& tag, const DensityMatrix& rho,
                        const DensityMatrix& phi, const Instrument& instr);

struct IntRange {
  int lo;
  int hi;
};

struct SweepConfig {
  std::uint64_t seed = 0;
  IntRange dim{2, 4};
  IntRange outcomes{2, 4};
  IntRange kraus{1, 3};
  IntRange letters{2, 4};
  Units units = Units::kBits;
  double tol_nats = kDefaultToleranceNats;

  void Validate() const;
};

// One seeded random instance. Instance i draws its parameters from
// SplitMix64(SplitSeed(seed, i)) in the order dim, outcomes, kraus, letters,
// purity bit; the instrument uses SplitSeed(s_i, 1), the ensemble
// SplitSeed(s_i, 2) and the extra fundamental pair SplitSeed(s_i, 3) and
// SplitSeed(s_i, 4), with s_i = SplitSeed(seed, i).
struct SweepInstance {
  std::size_t index = 0;
  std::uint64_t instance_seed = 0;
  GeneratorConfig config;
  Instrument instrument;
  Ensemble ensemble;
  DensityMatrix rho;
  DensityMatrix phi;
};

SweepInstance MakeSweepInstance(const SweepConfig& config, std::size_t index);

struct SweepRow {
  SweepInstance instance;
  SuiteReport report;
};

SweepRow EvaluateSweepInstance(const SweepConfig& config, std::size_t index);

// Column names of the sweep table, matching SweepRowValues.
std::vector<std::string> SweepColumns();
std::vector<double> SweepRowValues(const SweepRow& row);

// "3" or "2:4".
IntRange ParseIntRange(const std::string& text);

}  // namespace qinstr

#endif  // QINSTR_SUITE_H_
