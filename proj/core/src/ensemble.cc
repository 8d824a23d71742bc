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

#include "qinstr/ensemble.h"

#include <cmath>

#include "qinstr/error.h"

namespace qinstr {

Ensemble::Ensemble(ClassicalDensity priors, std::vector<DensityMatrix> states)
    : priors_(std::move(priors)), states_(std::move(states)) {
  if (priors_.size() != states_.size()) {
    throw Error(ErrorCode::kLabelMismatch, "ensemble has " + std::to_string(priors_.size()) +
                                               " priors but " + std::to_string(states_.size()) +
                                               " letter states");
  }
  for (const auto& s : states_) {
    if (s.dim() != states_.front().dim()) {
      throw Error(ErrorCode::kDimensionMismatch, "letter states differ in dimension");
    }
  }
}

DensityMatrix AverageState(const Ensemble& ens) {
  return Mixture(ens.priors().probs(), ens.states());
}

namespace {

struct Support {
  std::vector<double> weights;
  std::vector<DensityMatrix> states;
};

Support DropZeroWeights(const ClassicalDensity& priors, const std::vector<DensityMatrix>& states) {
  if (priors.size() != states.size()) {
    throw Error(ErrorCode::kLabelMismatch, "chi needs one state per prior");
  }
  Support s;
  for (std::size_t a = 0; a < states.size(); ++a) {
    if (priors[a] <= 0.0) continue;
    s.weights.push_back(priors[a]);
    s.states.push_back(states[a]);
  }
  return s;
}

}  // namespace

ExtendedReal Chi(const ClassicalDensity& priors, const std::vector<DensityMatrix>& states,
                 Units units) {
  Support s = DropZeroWeights(priors, states);
  DensityMatrix eta = Mixture(s.weights, s.states);
  ExtendedReal total = 0.0;
  for (std::size_t a = 0; a < s.states.size(); ++a) {
    total = total + s.weights[a] * QuantumRelativeEntropy(s.states[a], eta, units);
  }
  return total;
}

double ChiEntropyForm(const ClassicalDensity& priors, const std::vector<DensityMatrix>& states,
                      Units units) {
  Support s = DropZeroWeights(priors, states);
  double value = VonNeumannEntropy(Mixture(s.weights, s.states), units);
  for (std::size_t a = 0; a < s.states.size(); ++a) {
    value -= s.weights[a] * VonNeumannEntropy(s.states[a], units);
  }
  return value;
}

JointDistribution::JointDistribution(ClassicalDensity priors, std::vector<std::string> outcomes,
                                     Eigen::MatrixXd conditional)
    : priors_(std::move(priors)), outcomes_(std::move(outcomes)), conditional_(std::move(conditional)) {
  if (conditional_.rows() != static_cast<Eigen::Index>(priors_.size()) ||
      conditional_.cols() != static_cast<Eigen::Index>(outcomes_.size())) {
    throw Error(ErrorCode::kDimensionMismatch, "conditional table has the wrong shape");
  }
  CheckDistinct(outcomes_, "outcome");
  for (Eigen::Index a = 0; a < conditional_.rows(); ++a) {
    // Row validation and clamping happen in ClassicalDensity.
    std::vector<double> probs(outcomes_.size());
    for (Eigen::Index w = 0; w < conditional_.cols(); ++w) probs[w] = conditional_(a, w);
    ClassicalDensity row(outcomes_, std::move(probs));
    for (Eigen::Index w = 0; w < conditional_.cols(); ++w) conditional_(a, w) = row[w];
  }
  marginal_.assign(outcomes_.size(), 0.0);
  for (std::size_t w = 0; w < outcomes_.size(); ++w) {
    for (std::size_t a = 0; a < priors_.size(); ++a) marginal_[w] += joint(a, w);
  }
}

ClassicalDensity JointDistribution::OutcomeMarginal() const {
  return ClassicalDensity(outcomes_, marginal_);
}

ClassicalDensity JointDistribution::OutcomesGivenLetter(std::size_t a) const {
  std::vector<double> row(outcomes_.size());
  for (std::size_t w = 0; w < row.size(); ++w) row[w] = conditional_(a, w);
  return ClassicalDensity(outcomes_, std::move(row));
}

ClassicalDensity JointDistribution::LettersGivenOutcome(std::size_t w) const {
  if (marginal_.at(w) <= kSupportCutoff) return priors_;
  std::vector<double> col(priors_.size());
  for (std::size_t a = 0; a < col.size(); ++a) col[a] = joint(a, w) / marginal_[w];
  return ClassicalDensity(letters(), std::move(col));
}

ClassicalDensity JointDistribution::Flattened() const {
  std::vector<std::string> labels;
  std::vector<double> p;
  for (std::size_t a = 0; a < priors_.size(); ++a) {
    for (std::size_t w = 0; w < outcomes_.size(); ++w) {
      labels.push_back(std::to_string(a) + "," + std::to_string(w));
      p.push_back(joint(a, w));
    }
  }
  return ClassicalDensity(std::move(labels), std::move(p));
}

ClassicalDensity JointDistribution::FlattenedProduct() const {
  std::vector<std::string> labels;
  std::vector<double> p;
  for (std::size_t a = 0; a < priors_.size(); ++a) {
    for (std::size_t w = 0; w < outcomes_.size(); ++w) {
      labels.push_back(std::to_string(a) + "," + std::to_string(w));
      p.push_back(priors_[a] * marginal_[w]);
    }
  }
  return ClassicalDensity(std::move(labels), std::move(p));
}

namespace {

void CheckDims(const Ensemble& ens, const Instrument& instr) {
  if (ens.dim() != instr.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "ensemble on C^" + std::to_string(ens.dim()) +
                                                   ", instrument on C^" + std::to_string(instr.dim()));
  }
}

void CheckLetters(const Ensemble& ens, const JointDistribution& jd) {
  if (ens.letters() != jd.letters()) {
    throw Error(ErrorCode::kLabelMismatch, "joint distribution built from a different ensemble");
  }
}

}  // namespace

JointDistribution MakeJointDistribution(const Ensemble& ens, const Instrument& instr) {
  CheckDims(ens, instr);
  Eigen::MatrixXd cond(ens.size(), instr.size());
  for (std::size_t a = 0; a < ens.size(); ++a) {
    ClassicalDensity row = OutcomeDistribution(instr, ens.states()[a]);
    for (std::size_t w = 0; w < instr.size(); ++w) cond(a, w) = row[w];
  }
  return JointDistribution(ens.priors(), instr.labels(), std::move(cond));
}

double MutualInformation(const JointDistribution& jd, Units units) {
  return KlDivergence(jd.Flattened(), jd.FlattenedProduct(), units).value();
}

MutualInformationForms MutualInformationAllForms(const JointDistribution& jd, Units units) {
  MutualInformationForms forms{MutualInformation(jd, units), 0.0, 0.0};
  ClassicalDensity pf = jd.OutcomeMarginal();
  for (std::size_t a = 0; a < jd.letters().size(); ++a) {
    if (jd.priors()[a] <= 0.0) continue;
    forms.letters += jd.priors()[a] * KlDivergence(jd.OutcomesGivenLetter(a), pf, units).value();
  }
  for (std::size_t w = 0; w < jd.outcomes().size(); ++w) {
    if (pf[w] <= 0.0) continue;
    forms.outcomes += pf[w] * KlDivergence(jd.LettersGivenOutcome(w), jd.priors(), units).value();
  }
  return forms;
}

std::vector<PosteriorEnsemble> PosteriorEnsembles(const Ensemble& ens, const Instrument& instr) {
  JointDistribution jd = MakeJointDistribution(ens, instr);
  DensityMatrix eta = AverageState(ens);
  ClassicalDensity pf = jd.OutcomeMarginal();
  std::vector<PosteriorEnsemble> out;
  for (std::size_t w = 0; w < instr.size(); ++w) {
    std::vector<DensityMatrix> states;
    for (const auto& rho : ens.states()) states.push_back(Posterior(instr, w, rho));
    out.push_back({instr.outcomes()[w].label, pf[w], jd.LettersGivenOutcome(w), std::move(states),
                   Posterior(instr, w, eta)});
  }
  return out;
}

FinalStates MakeFinalStates(const Ensemble& ens, const Instrument& instr) {
  CheckDims(ens, instr);
  std::vector<DensityMatrix> per_letter;
  for (const auto& rho : ens.states()) per_letter.push_back(ApplyTotal(instr, rho));
  DensityMatrix overall = Mixture(ens.priors().probs(), per_letter);
  return {std::move(per_letter), std::move(overall)};
}

std::vector<DensityMatrix> ScutaruTau(const Ensemble& ens, const JointDistribution& jd) {
  CheckLetters(ens, jd);
  std::vector<DensityMatrix> tau;
  for (std::size_t w = 0; w < jd.outcomes().size(); ++w) {
    tau.push_back(Mixture(jd.LettersGivenOutcome(w).probs(), ens.states()));
  }
  return tau;
}

CompoundStates MakeCompoundStates(const Ensemble& ens, const JointDistribution& jd,
                                  const FinalStates& finals) {
  CheckLetters(ens, jd);
  if (finals.per_letter.size() != ens.size()) {
    throw Error(ErrorCode::kLabelMismatch, "one final state per letter expected");
  }
  std::vector<DensityMatrix> products;
  for (std::size_t a = 0; a < ens.size(); ++a) {
    products.emplace_back(Tensor(ens.states()[a].matrix(), finals.per_letter[a].matrix()));
  }
  std::vector<DensityMatrix> per_outcome;
  for (std::size_t w = 0; w < jd.outcomes().size(); ++w) {
    per_outcome.push_back(Mixture(jd.LettersGivenOutcome(w).probs(), products));
  }
  DensityMatrix average = Mixture(jd.OutcomeMarginal().probs(), per_outcome);
  return {std::move(per_outcome), std::move(average)};
}

}  // namespace qinstr
