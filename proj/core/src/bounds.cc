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

#include "qinstr/bounds.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qinstr/error.h"
#include "qinstr/randgen.h"

namespace qinstr {

namespace {

constexpr double kChannelIdentityTolerance = 1e-12;
constexpr double kFormulaTolerance = 1e-9;
constexpr double kMixtureTolerance = 1e-9;
// Outcomes rarer than this are skipped in the posterior mixture identity;
// dividing by p_f amplifies rounding.
constexpr double kMixtureMinWeight = 1e-6;
constexpr double kImpurityMinWeight = 1e-6;

double MaxResidual(std::span<const double> a, std::span<const double> b) {
  double r = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, std::abs(a[i] - b[i]));
  return r;
}

ComplexMatrix Weighted(std::span<const double> w, std::span<const DensityMatrix> s) {
  ComplexMatrix sum = ComplexMatrix::Zero(s.front().dim(), s.front().dim());
  for (std::size_t k = 0; k < s.size(); ++k) sum += w[k] * s[k].matrix();
  return sum;
}

}  // namespace

double ExtendedResidual(ExtendedReal a, ExtendedReal b) {
  if (a.is_pos_inf() && b.is_pos_inf()) return 0.0;
  if (!a.is_finite() || !b.is_finite()) return std::numeric_limits<double>::infinity();
  return std::abs(a.value() - b.value());
}

InequalityReport CompareGreaterEqual(std::string name, ExtendedReal lhs, ExtendedReal rhs,
                                     double tol_nats, Units units) {
  InequalityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.units = units;
  r.tolerance = tol_nats * NatsTo(units);
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (lhs.is_pos_inf()) {
    r.gap = kInf;
  } else if (rhs.is_pos_inf()) {
    r.gap = -kInf;
    r.support_review = true;
  } else {
    r.gap = lhs.value() - rhs.value();
  }
  r.satisfied = r.gap.value() >= -r.tolerance;
  return r;
}

bool BoundChainReport::satisfied() const {
  auto ok = [](const InequalityReport& r) { return r.satisfied; };
  return std::all_of(links.begin(), links.end(), ok) && std::all_of(extra.begin(), extra.end(), ok);
}

bool BoundChainReport::identities_ok() const {
  return std::all_of(identities.begin(), identities.end(),
                     [](const IdentityResidual& r) { return r.ok(); });
}

const InequalityReport& BoundChainReport::Link(const std::string& link_name) const {
  for (const auto* list : {&links, &extra}) {
    for (const auto& r : *list) {
      if (r.name == link_name) return r;
    }
  }
  throw Error(ErrorCode::kInvalidParams, "no inequality '" + link_name + "' in " + name);
}

ExtendedReal BoundChainReport::Term(const std::string& term_name) const {
  for (const auto* list : {&terms, &auxiliary}) {
    for (const auto& q : *list) {
      if (q.name == term_name) return q.value;
    }
  }
  throw Error(ErrorCode::kInvalidParams, "no quantity '" + term_name + "' in " + name);
}

BoundChainReport FundamentalChain(const DensityMatrix& rho, const DensityMatrix& phi,
                                  const Instrument& instr, Units units, double tol_nats) {
  if (rho.dim() != phi.dim() || rho.dim() != instr.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "fundamental chain needs equal dimensions");
  }
  BoundChainReport report;
  report.name = "fundamental";
  report.units = units;

  ExtendedReal quantum = QuantumRelativeEntropy(rho, phi, units);

  HybridState lambda_rho = LambdaI(instr, rho);
  HybridState lambda_phi = LambdaI(instr, phi);
  ExtendedReal hybrid = HybridRelativeEntropy(lambda_rho, lambda_phi, units);
  ExtendedReal hybrid_blocks = HybridRelativeEntropyDirect(lambda_rho, lambda_phi, units);

  // The same middle term assembled from outcome statistics and posteriors.
  ClassicalDensity p_rho = OutcomeDistribution(instr, rho);
  ClassicalDensity p_phi = OutcomeDistribution(instr, phi);
  ExtendedReal classical = KlDivergence(p_rho, p_phi, units);
  ExtendedReal posterior_form = classical;
  for (std::size_t w = 0; w < instr.size() && posterior_form.is_finite(); ++w) {
    if (p_rho[w] <= kSupportCutoff) continue;
    posterior_form =
        posterior_form + p_rho[w] * QuantumRelativeEntropy(Posterior(instr, w, rho),
                                                           Posterior(instr, w, phi), units);
  }

  DensityMatrix total_rho = ApplyTotal(instr, rho);
  DensityMatrix total_phi = ApplyTotal(instr, phi);
  ExtendedReal total = QuantumRelativeEntropy(total_rho, total_phi, units);

  report.terms = {{"quantum_relative_entropy", quantum},
                  {"hybrid_relative_entropy", hybrid},
                  {"total_channel_relative_entropy", total}};
  report.links.push_back(CompareGreaterEqual("fundamental", quantum, hybrid, tol_nats, units));
  report.links.push_back(
      CompareGreaterEqual("total_channel_coarse_graining", hybrid, total, tol_nats, units));
  report.extra.push_back(CompareGreaterEqual("outcome_statistics", quantum, classical, tol_nats, units));
  report.auxiliary = {{"classical_relative_entropy", classical}};

  report.identities.push_back({"hybrid_decomposition_vs_posterior_form",
                               ExtendedResidual(hybrid, posterior_form), kFormulaTolerance});
  report.identities.push_back({"hybrid_decomposition_vs_block_form",
                               ExtendedResidual(hybrid, hybrid_blocks), kFormulaTolerance});
  for (const auto* pair : {&rho, &phi}) {
    const char* tag = pair == &rho ? "rho" : "phi";
    HybridState lambda = LambdaI(instr, *pair);
    report.identities.push_back(
        {std::string("outcome_distribution_is_classical_part[") + tag + "]",
         MaxResidual(OutcomeDistribution(instr, *pair).probs(), ClassicalPart(lambda).probs()),
         kChannelIdentityTolerance});
    report.identities.push_back(
        {std::string("total_channel_is_quantum_part[") + tag + "]",
         MaxAbsDiff(ApplyTotal(instr, *pair).matrix(), QuantumPart(lambda).matrix()),
         kChannelIdentityTolerance});
  }
  return report;
}

BoundChainReport HolevoChain(const Ensemble& ens, const Instrument& instr, Units units,
                             double tol_nats) {
  JointDistribution jd = MakeJointDistribution(ens, instr);
  ClassicalDensity pf = jd.OutcomeMarginal();
  DensityMatrix eta_i = AverageState(ens);

  ExtendedReal chi = Chi(ens.priors(), ens.states(), units);
  MutualInformationForms ic = MutualInformationAllForms(jd, units);

  std::vector<PosteriorEnsemble> posts = PosteriorEnsembles(ens, instr);
  double posterior_chi = 0.0;
  for (const auto& post : posts) {
    if (post.weight <= 0.0) continue;
    posterior_chi += post.weight * Chi(post.posterior_priors, post.posterior_states, units).value();
  }

  FinalStates finals = MakeFinalStates(ens, instr);
  ExtendedReal chi_final = Chi(ens.priors(), finals.per_letter, units);
  ExtendedReal middle = ic.joint + posterior_chi;

  BoundChainReport report;
  report.name = "holevo";
  report.units = units;
  report.terms = {{"chi_initial", chi},
                  {"mutual_information_plus_posterior_chi", middle},
                  {"chi_final", chi_final}};
  report.links.push_back(CompareGreaterEqual("sww", chi, middle, tol_nats, units));
  report.links.push_back(CompareGreaterEqual("a_priori_lower", middle, chi_final, tol_nats, units));
  report.extra.push_back(CompareGreaterEqual("holevo", chi, ic.joint, tol_nats, units));
  report.auxiliary = {{"mutual_information", ic.joint}, {"posterior_chi", posterior_chi}};

  report.identities.push_back({"chi_relative_entropy_vs_entropy_form",
                               ExtendedResidual(chi, ChiEntropyForm(ens.priors(), ens.states(), units)),
                               kFormulaTolerance});
  report.identities.push_back(
      {"mutual_information_joint_vs_letter_form", std::abs(ic.joint - ic.letters), kFormulaTolerance});
  report.identities.push_back(
      {"mutual_information_joint_vs_outcome_form", std::abs(ic.joint - ic.outcomes), kFormulaTolerance});
  report.identities.push_back(
      {"outcome_marginal_is_distribution_of_average",
       MaxResidual(pf.probs(), OutcomeDistribution(instr, eta_i).probs()), kMixtureTolerance});

  double mixture = 0.0;
  ComplexMatrix eta_f_posteriors = ComplexMatrix::Zero(ens.dim(), ens.dim());
  ComplexMatrix eta_f_joint = ComplexMatrix::Zero(ens.dim(), ens.dim());
  for (std::size_t w = 0; w < posts.size(); ++w) {
    const auto& post = posts[w];
    eta_f_posteriors += post.weight * post.outcome_posterior.matrix();
    for (std::size_t a = 0; a < ens.size(); ++a) {
      eta_f_joint += jd.joint(a, w) * post.posterior_states[a].matrix();
    }
    if (post.weight <= kMixtureMinWeight) continue;
    mixture = std::max(mixture, MaxAbsDiff(Weighted(post.posterior_priors.probs(), post.posterior_states),
                                           post.outcome_posterior.matrix()));
  }
  report.identities.push_back({"posterior_mixture", mixture, kMixtureTolerance});

  const ComplexMatrix eta_f_total = ApplyTotal(instr, eta_i).matrix();
  const ComplexMatrix& eta_f_letters = finals.overall.matrix();
  double final_residual = std::max({MaxAbsDiff(eta_f_total, eta_f_posteriors),
                                    MaxAbsDiff(eta_f_total, eta_f_joint),
                                    MaxAbsDiff(eta_f_total, eta_f_letters),
                                    MaxAbsDiff(eta_f_posteriors, eta_f_joint),
                                    MaxAbsDiff(eta_f_posteriors, eta_f_letters),
                                    MaxAbsDiff(eta_f_joint, eta_f_letters)});
  report.identities.push_back({"final_state_four_ways", final_residual, kMixtureTolerance});
  return report;
}

BoundChainReport ScutaruChain(const Ensemble& ens, const Instrument& instr, Units units,
                              double tol_nats) {
  JointDistribution jd = MakeJointDistribution(ens, instr);
  ClassicalDensity pf = jd.OutcomeMarginal();
  DensityMatrix eta_i = AverageState(ens);
  FinalStates finals = MakeFinalStates(ens, instr);
  std::vector<DensityMatrix> tau = ScutaruTau(ens, jd);
  CompoundStates compound = MakeCompoundStates(ens, jd, finals);

  double ic = MutualInformation(jd, units);
  ExtendedReal chi_compound = Chi(pf, compound.per_outcome, units);
  ExtendedReal chi_tau = Chi(pf, tau, units);

  BoundChainReport report;
  report.name = "scutaru";
  report.units = units;
  report.terms = {{"mutual_information", ic},
                  {"chi_compound", chi_compound},
                  {"chi_tau", chi_tau}};
  report.links.push_back(CompareGreaterEqual("compound_refinement", ic, chi_compound, tol_nats, units));
  report.links.push_back(CompareGreaterEqual("compound_vs_scutaru", chi_compound, chi_tau, tol_nats, units));
  report.extra.push_back(CompareGreaterEqual("scutaru", ic, chi_tau, tol_nats, units));

  const int n = ens.dim();
  double marginal_residual = 0.0;
  for (std::size_t w = 0; w < jd.outcomes().size(); ++w) {
    const std::string& label = jd.outcomes()[w];
    ExtendedReal kl = KlDivergence(jd.LettersGivenOutcome(w), ens.priors(), units);
    ExtendedReal s_compound = QuantumRelativeEntropy(compound.per_outcome[w], compound.average, units);
    ExtendedReal s_tau = QuantumRelativeEntropy(tau[w], eta_i, units);
    report.extra.push_back(
        CompareGreaterEqual("outcome_compound[" + label + "]", kl, s_compound, tol_nats, units));
    report.extra.push_back(
        CompareGreaterEqual("outcome_scutaru[" + label + "]", s_compound, s_tau, tol_nats, units));
    marginal_residual = std::max(
        marginal_residual,
        MaxAbsDiff(PartialTrace(compound.per_outcome[w].matrix(), Factor::kSecond, n, n), tau[w].matrix()));
  }
  report.identities.push_back({"tau_average_is_initial_average",
                               MaxAbsDiff(Weighted(pf.probs(), tau), eta_i.matrix()), kMixtureTolerance});
  report.identities.push_back({"compound_initial_marginal_is_tau", marginal_residual, kMixtureTolerance});
  report.identities.push_back(
      {"compound_average_initial_marginal",
       MaxAbsDiff(PartialTrace(compound.average.matrix(), Factor::kSecond, n, n), eta_i.matrix()),
       kMixtureTolerance});
  return report;
}

double InfoGain(const Instrument& instr, const DensityMatrix& eta, Units units) {
  ClassicalDensity p = OutcomeDistribution(instr, eta);
  double gain = VonNeumannEntropy(eta, units);
  for (std::size_t w = 0; w < instr.size(); ++w) {
    if (p[w] <= kSupportCutoff) continue;
    gain -= p[w] * VonNeumannEntropy(Posterior(instr, w, eta), units);
  }
  return gain;
}

GroenewoldReport GroenewoldInequality(const Ensemble& ens, const Instrument& instr, Units units,
                                      double tol_nats) {
  JointDistribution jd = MakeJointDistribution(ens, instr);
  double ic = MutualInformation(jd, units);
  double lhs = InfoGain(instr, AverageState(ens), units);
  double mean_gain = 0.0;
  for (std::size_t a = 0; a < ens.size(); ++a) {
    if (ens.priors()[a] <= 0.0) continue;
    mean_gain += ens.priors()[a] * InfoGain(instr, ens.states()[a], units);
  }
  GroenewoldReport report;
  report.inequality = CompareGreaterEqual("groenewold_lindblad", lhs, ic + mean_gain, tol_nats, units);

  ExtendedReal chi = Chi(ens.priors(), ens.states(), units);
  double posterior_chi = 0.0;
  for (const auto& post : PosteriorEnsembles(ens, instr)) {
    if (post.weight <= 0.0) continue;
    posterior_chi += post.weight * Chi(post.posterior_priors, post.posterior_states, units).value();
  }
  report.sww_gap = chi.value() - ic - posterior_chi;
  report.equivalence_residual = ExtendedResidual(report.inequality.gap, report.sww_gap);
  return report;
}

OzawaReport OzawaCheck(const Instrument& instr, int trials, std::uint64_t seed, double tol_nats,
                       Units units) {
  if (trials <= 0) throw Error(ErrorCode::kInvalidParams, "trials must be positive");
  OzawaReport report;
  report.trials = trials;
  report.seed = seed;
  report.units = units;
  report.tolerance = tol_nats * NatsTo(units);
  const int n = instr.dim();

  for (int t = 0; t < trials; ++t) {
    DensityMatrix psi = RandomState(n, 1, SplitSeed(seed, static_cast<std::uint64_t>(t)));
    ClassicalDensity p = OutcomeDistribution(instr, psi);
    for (std::size_t w = 0; w < instr.size(); ++w) {
      if (p[w] <= kImpurityMinWeight) continue;
      double impurity = 1.0 - Posterior(instr, w, psi).Purity();
      report.max_posterior_impurity = std::max(report.max_posterior_impurity, impurity);
    }
  }
  report.pure_preserving = report.max_posterior_impurity <= tol_nats;

  report.min_info_gain = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    std::uint64_t sub = SplitSeed(seed, static_cast<std::uint64_t>(trials + t));
    // Ranks 2..n; dimension one has no mixed states.
    int rank = n == 1 ? 1 : 2 + static_cast<int>(SplitSeed(sub, 0) % static_cast<std::uint64_t>(n - 1));
    DensityMatrix eta = RandomState(n, rank, sub);
    report.min_info_gain = std::min(report.min_info_gain, InfoGain(instr, eta, units));
  }
  report.implication_holds = !report.pure_preserving || report.min_info_gain >= -report.tolerance;
  return report;
}

}  // namespace qinstr
