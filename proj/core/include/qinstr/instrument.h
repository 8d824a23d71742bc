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

// Finite quantum instruments in Kraus form.
//
// An instrument on C^n with outcome set Omega assigns to each outcome w a
// nonempty family of Kraus operators V_k^w. The outcome operation is
// V(w)[rho] = sum_k V_k^w rho V_k^w^dagger and the associated effect is
// E(w) = sum_k V_k^w^dagger V_k^w; a valid instrument has sum_w E(w) = 1.

#ifndef QINSTR_INSTRUMENT_H_
#define QINSTR_INSTRUMENT_H_

#include <string>
#include <vector>

#include "qinstr/linops.h"
#include "qinstr/states.h"

namespace qinstr {

// Allowed entrywise deviation of the summed effects from the identity.
inline constexpr double kNormalizationTolerance = 1e-9;

struct Outcome {
  std::string label;
  std::vector<ComplexMatrix> kraus;
};

class Instrument {
 public:
  // Checks shapes only (square dim x dim Kraus matrices, nonempty Kraus
  // lists, distinct labels, finite entries). Normalization is checked by
  // Validate.
  Instrument(int dim, std::vector<Outcome> outcomes);

  // Single outcome "0" with one Kraus operator.
  static Instrument Unitary(const ComplexMatrix& u);
  // Outcome "k" with the single Kraus operator |k><k| for each basis vector.
  static Instrument ComputationalBasis(int dim);

  int dim() const { return dim_; }
  std::size_t size() const { return outcomes_.size(); }
  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  std::vector<std::string> labels() const;
  // Raises kUnknownOutcome.
  std::size_t IndexOf(const std::string& label) const;

 private:
  int dim_;
  std::vector<Outcome> outcomes_;
};

struct Violation {
  std::string kind;     // "normalization" or "effect_not_psd"
  std::string outcome;  // empty for instrument-wide violations
  double magnitude;
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  // max |(sum_w E(w) - 1)_{ij}|
  double max_deviation = 0.0;
  std::vector<Violation> violations;
};

ValidationReport Validate(const Instrument& instr);
// Throws kInvalidParams with the report text when Validate fails.
void RequireValid(const Instrument& instr);

struct Povm {
  std::vector<std::string> outcomes;
  std::vector<ComplexMatrix> effects;
};

Povm MakePovm(const Instrument& instr);
ComplexMatrix Effect(const Instrument& instr, std::size_t outcome);

// Unnormalized V(w)[rho].
ComplexMatrix ApplyOutcome(const Instrument& instr, std::size_t outcome, const DensityMatrix& rho);
ComplexMatrix ApplyOutcome(const Instrument& instr, const std::string& outcome,
                           const DensityMatrix& rho);

// p_rho(w) = Tr E(w) rho.
ClassicalDensity OutcomeDistribution(const Instrument& instr, const DensityMatrix& rho);

// V(w)[rho] / p_rho(w), completed with I/n when p_rho(w) <= kSupportCutoff.
DensityMatrix Posterior(const Instrument& instr, std::size_t outcome, const DensityMatrix& rho);
DensityMatrix Posterior(const Instrument& instr, const std::string& outcome,
                        const DensityMatrix& rho);

// The unconditional post-measurement state sum_w V(w)[rho].
DensityMatrix ApplyTotal(const Instrument& instr, const DensityMatrix& rho);

// The instrument viewed as a channel into hybrid states: w -> V(w)[rho].
HybridState LambdaI(const Instrument& instr, const DensityMatrix& rho);

}  // namespace qinstr

#endif  // QINSTR_INSTRUMENT_H_
