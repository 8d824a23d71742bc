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

// Ensembles of letter states {p_i, rho_i} decoded by an instrument, and the
// distributions and derived state families built from them.

#ifndef QINSTR_ENSEMBLE_H_
#define QINSTR_ENSEMBLE_H_

#include <string>
#include <vector>

#include "qinstr/entropy.h"
#include "qinstr/instrument.h"
#include "qinstr/states.h"

namespace qinstr {

class Ensemble {
 public:
  Ensemble(ClassicalDensity priors, std::vector<DensityMatrix> states);

  int dim() const { return states_.front().dim(); }
  std::size_t size() const { return states_.size(); }
  const std::vector<std::string>& letters() const { return priors_.labels(); }
  const ClassicalDensity& priors() const { return priors_; }
  const std::vector<DensityMatrix>& states() const { return states_; }

 private:
  ClassicalDensity priors_;
  std::vector<DensityMatrix> states_;
};

// eta_i = sum_a p_i(a) rho_i(a).
DensityMatrix AverageState(const Ensemble& ens);

// Holevo chi-quantity sum_a p(a) S(rho(a) | eta) with eta the p-average.
// Letters of zero weight are dropped first.
ExtendedReal Chi(const ClassicalDensity& priors, const std::vector<DensityMatrix>& states,
                 Units units = Units::kBits);
// The same quantity as S(eta) - sum_a p(a) S(rho(a)).
double ChiEntropyForm(const ClassicalDensity& priors, const std::vector<DensityMatrix>& states,
                      Units units = Units::kBits);

// Joint input/output statistics p(a, w) = p_{f|i}(w|a) p_i(a).
class JointDistribution {
 public:
  // conditional(a, w) = p_{f|i}(w|a); each row must be a distribution.
  JointDistribution(ClassicalDensity priors, std::vector<std::string> outcomes,
                    Eigen::MatrixXd conditional);

  const std::vector<std::string>& letters() const { return priors_.labels(); }
  const std::vector<std::string>& outcomes() const { return outcomes_; }
  const ClassicalDensity& priors() const { return priors_; }
  double joint(std::size_t a, std::size_t w) const { return priors_[a] * conditional_(a, w); }
  double conditional(std::size_t a, std::size_t w) const { return conditional_(a, w); }

  // p_f.
  ClassicalDensity OutcomeMarginal() const;
  // p_{f|i}(. | a).
  ClassicalDensity OutcomesGivenLetter(std::size_t a) const;
  // p_{i|f}(. | w) by Bayes; the prior p_i when p_f(w) <= kSupportCutoff.
  ClassicalDensity LettersGivenOutcome(std::size_t w) const;
  // p and the product p_i (x) p_f, flattened letter-major with labels
  // "a,w" built from indices.
  ClassicalDensity Flattened() const;
  ClassicalDensity FlattenedProduct() const;

 private:
  ClassicalDensity priors_;
  std::vector<std::string> outcomes_;
  Eigen::MatrixXd conditional_;
  std::vector<double> marginal_;
};

JointDistribution MakeJointDistribution(const Ensemble& ens, const Instrument& instr);

struct MutualInformationForms {
  double joint;    // S_c(p | p_i (x) p_f)
  double letters;  // sum_a p_i(a) S_c(p_{f|i}(.|a) | p_f)
  double outcomes; // sum_w p_f(w) S_c(p_{i|f}(.|w) | p_i)
};

// Classical input/output mutual information, from the joint form.
double MutualInformation(const JointDistribution& jd, Units units = Units::kBits);
MutualInformationForms MutualInformationAllForms(const JointDistribution& jd,
                                                 Units units = Units::kBits);

struct PosteriorEnsemble {
  std::string outcome;
  double weight;                             // p_f(w)
  ClassicalDensity posterior_priors;         // p_{i|f}(. | w)
  std::vector<DensityMatrix> posterior_states;  // rho(a, w)
  DensityMatrix outcome_posterior;           // rho_f(w), the posterior of eta_i
};

std::vector<PosteriorEnsemble> PosteriorEnsembles(const Ensemble& ens, const Instrument& instr);

struct FinalStates {
  std::vector<DensityMatrix> per_letter;  // eta_f^a = I(Omega)[rho_i(a)]
  DensityMatrix overall;                  // sum_a p_i(a) eta_f^a
};

FinalStates MakeFinalStates(const Ensemble& ens, const Instrument& instr);

// tau(w) = sum_a p_{i|f}(a|w) rho_i(a), one per outcome of jd.
std::vector<DensityMatrix> ScutaruTau(const Ensemble& ens, const JointDistribution& jd);

struct CompoundStates {
  // eps(w) = sum_a p_{i|f}(a|w) rho_i(a) (x) eta_f^a on C^n (x) C^n, factor
  // order (initial, final).
  std::vector<DensityMatrix> per_outcome;
  DensityMatrix average;  // eta_if = sum_w p_f(w) eps(w)
};

CompoundStates MakeCompoundStates(const Ensemble& ens, const JointDistribution& jd,
                                  const FinalStates& finals);

}  // namespace qinstr

#endif  // QINSTR_ENSEMBLE_H_
