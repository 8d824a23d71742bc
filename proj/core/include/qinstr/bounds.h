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

// Both sides of the entropic inequalities satisfied by instruments, with
// structured gap reports.
//
// Every bound follows from monotonicity of relative entropy under channels:
// the instrument as a channel into hybrid states, its coarse grainings to the
// outcome distribution and to the unconditional post-measurement state, the
// classical-to-quantum channel built from letter states and its refinement
// through compound states.

#ifndef QINSTR_BOUNDS_H_
#define QINSTR_BOUNDS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "qinstr/ensemble.h"
#include "qinstr/entropy.h"
#include "qinstr/instrument.h"
#include "qinstr/states.h"

namespace qinstr {

inline constexpr double kDefaultToleranceNats = 1e-9;

// One inequality lhs >= rhs. Values and tolerance are in `units`.
struct InequalityReport {
  std::string name;
  ExtendedReal lhs;
  ExtendedReal rhs;
  ExtendedReal gap;  // lhs - rhs; +inf when lhs is +inf, -inf when only rhs is
  bool satisfied = false;
  // rhs is +inf while lhs is finite; the link is reported as violated.
  bool support_review = false;
  double tolerance = 0.0;
  Units units = Units::kBits;
};

// Builds the report for lhs >= rhs given both sides already in `units` and
// the tolerance in nats.
InequalityReport CompareGreaterEqual(std::string name, ExtendedReal lhs, ExtendedReal rhs,
                                     double tol_nats, Units units);

struct NamedQuantity {
  std::string name;
  ExtendedReal value;
};

// A numerical identity that must hold up to rounding.
struct IdentityResidual {
  std::string name;
  double residual;
  double tolerance;
  bool ok() const { return residual <= tolerance; }
};

// |a - b| with inf == inf treated as agreement.
double ExtendedResidual(ExtendedReal a, ExtendedReal b);

struct BoundChainReport {
  std::string name;
  Units units = Units::kBits;
  // Nonincreasing chain; links[k] compares terms[k] >= terms[k + 1].
  std::vector<NamedQuantity> terms;
  std::vector<InequalityReport> links;
  // Inequalities checked alongside the chain that are not adjacent links.
  std::vector<InequalityReport> extra;
  std::vector<NamedQuantity> auxiliary;
  std::vector<IdentityResidual> identities;

  bool satisfied() const;
  bool identities_ok() const;
  const InequalityReport& Link(const std::string& name) const;
  ExtendedReal Term(const std::string& name) const;
};

// S(rho|phi) >= S(Lambda_I rho | Lambda_I phi) >= S(I(Omega) rho | I(Omega) phi),
// with the outcome-statistics bound S(rho|phi) >= S_c(p_rho|p_phi) as an extra
// link. The middle term is the hybrid relative entropy, cross-checked against
// S_c(p_rho|p_phi) + sum_w p_rho(w) S(posterior(w;rho) | posterior(w;phi)).
BoundChainReport FundamentalChain(const DensityMatrix& rho, const DensityMatrix& phi,
                                  const Instrument& instr, Units units = Units::kBits,
                                  double tol_nats = kDefaultToleranceNats);

// chi{p_i, rho_i} >= I_c + sum_w p_f(w) chi{p_{i|f}(.|w), rho(., w)}
//                 >= chi{p_i, eta_f^.}, plus Holevo's I_c <= chi{p_i, rho_i}.
BoundChainReport HolevoChain(const Ensemble& ens, const Instrument& instr,
                             Units units = Units::kBits,
                             double tol_nats = kDefaultToleranceNats);

// I_c >= chi{p_f, eps_if} >= chi{p_f, tau}, and per outcome
// S_c(p_{i|f}(.|w) | p_i) >= S(eps_if(w) | eta_if) >= S(tau(w) | eta_i).
BoundChainReport ScutaruChain(const Ensemble& ens, const Instrument& instr,
                              Units units = Units::kBits,
                              double tol_nats = kDefaultToleranceNats);

// I_q(eta; I) = S(eta) - sum_w p_eta(w) S(posterior(w; eta)). Can be negative.
double InfoGain(const Instrument& instr, const DensityMatrix& eta, Units units = Units::kBits);

struct GroenewoldReport {
  // I_q(eta_i) >= I_c + sum_a p_i(a) I_q(rho_i(a)).
  InequalityReport inequality;
  // chi - I_c - posterior chi, evaluated independently.
  ExtendedReal sww_gap;
  // |inequality.gap - sww_gap|; the two inequalities are equivalent.
  double equivalence_residual = 0.0;
};

GroenewoldReport GroenewoldInequality(const Ensemble& ens, const Instrument& instr,
                                      Units units = Units::kBits,
                                      double tol_nats = kDefaultToleranceNats);

struct OzawaReport {
  int trials = 0;
  std::uint64_t seed = 0;
  Units units = Units::kBits;
  double tolerance = 0.0;  // in units; impurity is compared against tol_nats
  bool pure_preserving = false;
  double max_posterior_impurity = 0.0;  // max of 1 - Tr posterior^2 over pure trials
  double min_info_gain = 0.0;           // min of InfoGain over mixed trials
  // pure_preserving implies min_info_gain >= -tolerance.
  bool implication_holds = false;
};

// Sampling check of the statement "pure inputs give pure posteriors iff the
// information gain is nonnegative", in the (a) => (b) direction. Trial t uses
// seed SplitSeed(seed, t) for pure states and SplitSeed(seed, trials + t) for
// mixed ones, so the report depends only on the arguments.
OzawaReport OzawaCheck(const Instrument& instr, int trials, std::uint64_t seed,
                       double tol_nats = kDefaultToleranceNats, Units units = Units::kBits);

}  // namespace qinstr

#endif  // QINSTR_BOUNDS_H_
