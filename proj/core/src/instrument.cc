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

#include "qinstr/instrument.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qinstr/error.h"

namespace qinstr {

Instrument::Instrument(int dim, std::vector<Outcome> outcomes)
    : dim_(dim), outcomes_(std::move(outcomes)) {
  if (dim_ <= 0) throw Error(ErrorCode::kInvalidParams, "instrument dimension must be positive");
  if (outcomes_.empty()) throw Error(ErrorCode::kInvalidParams, "instrument without outcomes");
  std::vector<std::string> names;
  for (const auto& o : outcomes_) {
    names.push_back(o.label);
    if (o.kraus.empty()) {
      throw Error(ErrorCode::kInvalidParams, "outcome '" + o.label + "' has no Kraus operators");
    }
    for (const auto& v : o.kraus) {
      if (v.rows() != dim_ || v.cols() != dim_) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "Kraus operator of outcome '" + o.label + "' is not " +
                        std::to_string(dim_) + "x" + std::to_string(dim_));
      }
      if (!IsFinite(v)) throw Error(ErrorCode::kNotFinite, "non-finite Kraus entry");
    }
  }
  CheckDistinct(names, "outcome");
}

Instrument Instrument::Unitary(const ComplexMatrix& u) {
  return Instrument(static_cast<int>(u.rows()), {Outcome{"0", {u}}});
}

Instrument Instrument::ComputationalBasis(int dim) {
  std::vector<Outcome> outcomes;
  for (int k = 0; k < dim; ++k) {
    ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
    p(k, k) = 1.0;
    outcomes.push_back({std::to_string(k), {p}});
  }
  return Instrument(dim, std::move(outcomes));
}

std::vector<std::string> Instrument::labels() const {
  std::vector<std::string> out;
  for (const auto& o : outcomes_) out.push_back(o.label);
  return out;
}

std::size_t Instrument::IndexOf(const std::string& label) const {
  for (std::size_t i = 0; i < outcomes_.size(); ++i) {
    if (outcomes_[i].label == label) return i;
  }
  throw Error(ErrorCode::kUnknownOutcome, "no outcome '" + label + "'");
}

ComplexMatrix Effect(const Instrument& instr, std::size_t outcome) {
  ComplexMatrix e = ComplexMatrix::Zero(instr.dim(), instr.dim());
  for (const auto& v : instr.outcomes().at(outcome).kraus) e += v.adjoint() * v;
  return 0.5 * (e + e.adjoint());
}

ValidationReport Validate(const Instrument& instr) {
  ValidationReport report;
  ComplexMatrix sum = ComplexMatrix::Zero(instr.dim(), instr.dim());
  for (std::size_t w = 0; w < instr.size(); ++w) {
    ComplexMatrix e = Effect(instr, w);
    sum += e;
    double min_eig = HermitianEig(e).eigenvalues.minCoeff();
    if (min_eig < -kSupportCutoff) {
      report.violations.push_back({"effect_not_psd", instr.outcomes()[w].label, -min_eig,
                                   "effect has eigenvalue " + std::to_string(min_eig)});
    }
  }
  report.max_deviation = MaxAbsDiff(sum, Identity(instr.dim()));
  if (report.max_deviation > kNormalizationTolerance) {
    std::ostringstream msg;
    msg << "Kraus normalization violated: sum over outcomes of V^dagger V differs from the "
           "identity by "
        << report.max_deviation << " (tolerance " << kNormalizationTolerance << ")";
    report.violations.push_back({"normalization", "", report.max_deviation, msg.str()});
  }
  report.ok = report.violations.empty();
  return report;
}

void RequireValid(const Instrument& instr) {
  ValidationReport r = Validate(instr);
  if (r.ok) return;
  std::string msg;
  for (const auto& v : r.violations) msg += (msg.empty() ? "" : "; ") + v.message;
  throw Error(ErrorCode::kInvalidParams, msg);
}

Povm MakePovm(const Instrument& instr) {
  Povm povm;
  for (std::size_t w = 0; w < instr.size(); ++w) {
    povm.outcomes.push_back(instr.outcomes()[w].label);
    povm.effects.push_back(Effect(instr, w));
  }
  return povm;
}

namespace {

void CheckDim(const Instrument& instr, const DensityMatrix& rho) {
  if (instr.dim() != rho.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "instrument acts on C^" + std::to_string(instr.dim()) +
                                                   ", state lives on C^" + std::to_string(rho.dim()));
  }
}

}  // namespace

ComplexMatrix ApplyOutcome(const Instrument& instr, std::size_t outcome, const DensityMatrix& rho) {
  CheckDim(instr, rho);
  if (outcome >= instr.size()) throw Error(ErrorCode::kUnknownOutcome, "outcome index out of range");
  ComplexMatrix out = ComplexMatrix::Zero(instr.dim(), instr.dim());
  for (const auto& v : instr.outcomes()[outcome].kraus) out += v * rho.matrix() * v.adjoint();
  return 0.5 * (out + out.adjoint());
}

ComplexMatrix ApplyOutcome(const Instrument& instr, const std::string& outcome,
                           const DensityMatrix& rho) {
  return ApplyOutcome(instr, instr.IndexOf(outcome), rho);
}

ClassicalDensity OutcomeDistribution(const Instrument& instr, const DensityMatrix& rho) {
  CheckDim(instr, rho);
  std::vector<double> p;
  for (std::size_t w = 0; w < instr.size(); ++w) {
    p.push_back((Effect(instr, w) * rho.matrix()).trace().real());
  }
  return ClassicalDensity(instr.labels(), std::move(p));
}

DensityMatrix Posterior(const Instrument& instr, std::size_t outcome, const DensityMatrix& rho) {
  ComplexMatrix block = ApplyOutcome(instr, outcome, rho);
  double p = block.trace().real();
  if (p > kSupportCutoff) return DensityMatrix(block / p);
  return DensityMatrix::MaximallyMixed(instr.dim());
}

DensityMatrix Posterior(const Instrument& instr, const std::string& outcome,
                        const DensityMatrix& rho) {
  return Posterior(instr, instr.IndexOf(outcome), rho);
}

DensityMatrix ApplyTotal(const Instrument& instr, const DensityMatrix& rho) {
  ComplexMatrix sum = ComplexMatrix::Zero(instr.dim(), instr.dim());
  for (std::size_t w = 0; w < instr.size(); ++w) sum += ApplyOutcome(instr, w, rho);
  return DensityMatrix(sum);
}

HybridState LambdaI(const Instrument& instr, const DensityMatrix& rho) {
  std::vector<ComplexMatrix> blocks;
  for (std::size_t w = 0; w < instr.size(); ++w) blocks.push_back(ApplyOutcome(instr, w, rho));
  return HybridState(instr.labels(), std::move(blocks));
}

}  // namespace qinstr
