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

#include "qinstr/states.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "qinstr/error.h"

namespace qinstr {

void CheckDistinct(const std::vector<std::string>& labels, const char* what) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw Error(ErrorCode::kInvalidState, std::string("duplicate ") + what + " label '" + l + "'");
    }
  }
}

DensityMatrix::DensityMatrix(const ComplexMatrix& m) {
  EigenDecomposition eig = HermitianEig(m);
  if (eig.eigenvalues.minCoeff() < -kSupportCutoff) {
    throw Error(ErrorCode::kNotPsd, "density matrix has eigenvalue " +
                                        std::to_string(eig.eigenvalues.minCoeff()));
  }
  double tr = m.trace().real();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    throw Error(ErrorCode::kInvalidState, "density matrix trace " + std::to_string(tr));
  }
  matrix_ = 0.5 * (m + m.adjoint());
}

DensityMatrix DensityMatrix::MaximallyMixed(int dim) {
  if (dim <= 0) throw Error(ErrorCode::kInvalidParams, "dimension must be positive");
  return DensityMatrix(Identity(dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::Pure(const Eigen::VectorXcd& psi) {
  double norm2 = psi.squaredNorm();
  if (!(norm2 > 0.0)) throw Error(ErrorCode::kInvalidState, "zero state vector");
  ComplexMatrix m = psi * psi.adjoint() / norm2;
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::Basis(int dim, int k) {
  if (k < 0 || k >= dim) throw Error(ErrorCode::kInvalidParams, "basis index out of range");
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  m(k, k) = 1.0;
  return DensityMatrix(m);
}

double DensityMatrix::Purity() const { return (matrix_ * matrix_).trace().real(); }

ClassicalDensity::ClassicalDensity(std::vector<std::string> labels, std::vector<double> probs)
    : labels_(std::move(labels)), probs_(std::move(probs)) {
  if (labels_.size() != probs_.size()) {
    throw Error(ErrorCode::kLabelMismatch, "label and probability counts differ");
  }
  if (labels_.empty()) throw Error(ErrorCode::kInvalidState, "empty distribution");
  CheckDistinct(labels_, "distribution");
  double total = 0.0;
  for (double& p : probs_) {
    if (!std::isfinite(p)) throw Error(ErrorCode::kNotFinite, "non-finite probability");
    if (p < -kProbabilityClamp) {
      throw Error(ErrorCode::kInvalidState, "negative probability " + std::to_string(p));
    }
    if (p < 0.0) p = 0.0;
    total += p;
  }
  if (std::abs(total - 1.0) > kTraceTolerance) {
    throw Error(ErrorCode::kInvalidState, "probabilities sum to " + std::to_string(total));
  }
}

ClassicalDensity ClassicalDensity::PointMass(std::vector<std::string> labels, std::size_t index) {
  std::vector<double> p(labels.size(), 0.0);
  if (index >= p.size()) throw Error(ErrorCode::kInvalidParams, "point mass index out of range");
  p[index] = 1.0;
  return ClassicalDensity(std::move(labels), std::move(p));
}

ClassicalDensity ClassicalDensity::Uniform(std::vector<std::string> labels) {
  std::vector<double> p(labels.size(), labels.empty() ? 0.0 : 1.0 / labels.size());
  return ClassicalDensity(std::move(labels), std::move(p));
}

std::size_t ClassicalDensity::IndexOf(const std::string& label) const {
  return static_cast<std::size_t>(std::find(labels_.begin(), labels_.end(), label) -
                                  labels_.begin());
}

HybridState::HybridState(std::vector<std::string> labels, std::vector<ComplexMatrix> blocks)
    : labels_(std::move(labels)), blocks_(std::move(blocks)) {
  if (labels_.size() != blocks_.size()) {
    throw Error(ErrorCode::kLabelMismatch, "label and block counts differ");
  }
  if (blocks_.empty()) throw Error(ErrorCode::kInvalidState, "hybrid state without outcomes");
  CheckDistinct(labels_, "outcome");
  dim_ = static_cast<int>(blocks_.front().rows());
  double total = 0.0;
  for (auto& b : blocks_) {
    if (b.rows() != dim_ || b.cols() != dim_) {
      throw Error(ErrorCode::kDimensionMismatch, "hybrid blocks differ in dimension");
    }
    if (!IsPsd(b)) throw Error(ErrorCode::kNotPsd, "hybrid block not PSD");
    b = 0.5 * (b + b.adjoint()).eval();
    total += b.trace().real();
  }
  if (std::abs(total - 1.0) > kTraceTolerance) {
    throw Error(ErrorCode::kInvalidState, "hybrid state trace " + std::to_string(total));
  }
}

ClassicalDensity ClassicalPart(const HybridState& sigma) {
  std::vector<double> p;
  p.reserve(sigma.size());
  for (const auto& b : sigma.blocks()) p.push_back(b.trace().real());
  return ClassicalDensity(sigma.labels(), std::move(p));
}

DensityMatrix QuantumPart(const HybridState& sigma) {
  ComplexMatrix sum = ComplexMatrix::Zero(sigma.dim(), sigma.dim());
  for (const auto& b : sigma.blocks()) sum += b;
  return DensityMatrix(sum);
}

std::vector<ConditionalBlock> Decompose(const HybridState& sigma) {
  std::vector<ConditionalBlock> out;
  out.reserve(sigma.size());
  for (std::size_t w = 0; w < sigma.size(); ++w) {
    const ComplexMatrix& b = sigma.blocks()[w];
    double p = b.trace().real();
    if (p > kSupportCutoff) {
      out.push_back({sigma.labels()[w], p, DensityMatrix(b / p)});
    } else {
      out.push_back({sigma.labels()[w], std::max(p, 0.0), DensityMatrix::MaximallyMixed(sigma.dim())});
    }
  }
  return out;
}

DensityMatrix Mixture(std::span<const double> weights, std::span<const DensityMatrix> states) {
  if (weights.size() != states.size() || states.empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "weights and states differ in count");
  }
  const int n = states.front().dim();
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (states[k].dim() != n) throw Error(ErrorCode::kDimensionMismatch, "mixed dimensions");
    sum += weights[k] * states[k].matrix();
  }
  return DensityMatrix(sum);
}

}  // namespace qinstr
