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

// Quantum, classical and hybrid (classical-quantum) states.

#ifndef QINSTR_STATES_H_
#define QINSTR_STATES_H_

#include <span>
#include <string>
#include <vector>

#include "qinstr/linops.h"

namespace qinstr {

inline constexpr double kTraceTolerance = 1e-9;
// Probabilities in [-kProbabilityClamp, 0) are rounding noise and become 0.
inline constexpr double kProbabilityClamp = 1e-12;

// A statistical operator on C^dim: Hermitian, PSD and of unit trace. The
// stored matrix is exactly Hermitian (symmetrized on construction).
class DensityMatrix {
 public:
  // Validates and symmetrizes; raises kInvalidState (or the linops error
  // codes) on violation.
  explicit DensityMatrix(const ComplexMatrix& m);

  static DensityMatrix MaximallyMixed(int dim);
  // |psi><psi| / <psi|psi> for a nonzero vector.
  static DensityMatrix Pure(const Eigen::VectorXcd& psi);
  // e_k e_k^dagger in the computational basis.
  static DensityMatrix Basis(int dim, int k);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  double Purity() const;

 private:
  ComplexMatrix matrix_;
};

// A probability vector over ordered, distinct labels.
class ClassicalDensity {
 public:
  ClassicalDensity(std::vector<std::string> labels, std::vector<double> probs);

  static ClassicalDensity PointMass(std::vector<std::string> labels, std::size_t index);
  static ClassicalDensity Uniform(std::vector<std::string> labels);

  std::size_t size() const { return probs_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<double>& probs() const { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }
  // Index of label, or size() when absent.
  std::size_t IndexOf(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  std::vector<double> probs_;
};

// A state on C(Omega; M_n): one PSD block per outcome, total trace one.
class HybridState {
 public:
  HybridState(std::vector<std::string> labels, std::vector<ComplexMatrix> blocks);

  int dim() const { return dim_; }
  std::size_t size() const { return blocks_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<ComplexMatrix>& blocks() const { return blocks_; }

 private:
  std::vector<std::string> labels_;
  std::vector<ComplexMatrix> blocks_;
  int dim_ = 0;
};

struct ConditionalBlock {
  std::string label;
  double prob;         // Tr of the block
  DensityMatrix state;  // block / prob, or I/n when prob <= kSupportCutoff
};

ClassicalDensity ClassicalPart(const HybridState& sigma);
DensityMatrix QuantumPart(const HybridState& sigma);
std::vector<ConditionalBlock> Decompose(const HybridState& sigma);

// Convex combination sum_k w_k rho_k over a common dimension. Weights must
// form a probability vector.
DensityMatrix Mixture(std::span<const double> weights,
                      std::span<const DensityMatrix> states);

void CheckDistinct(const std::vector<std::string>& labels, const char* what);

}  // namespace qinstr

#endif  // QINSTR_STATES_H_
