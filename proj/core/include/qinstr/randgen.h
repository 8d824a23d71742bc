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

// Seeded generators for random states, instruments and ensembles.
//
// The bit source is SplitMix64: with state s and gamma 0x9e3779b97f4a7c15,
// each draw sets s += gamma and returns Mix(s), where
//   Mix(z): z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9;
//           z = (z ^ (z >> 27)) * 0x94d049bb133111eb;
//           return z ^ (z >> 31).
// Output k of a generator seeded with s is Mix(s + (k + 1) * gamma), so
// every draw is a function of (seed, counter).
//
// Uniform doubles are (draw >> 11) * 2^-53. Standard normals come from the
// Marsaglia polar method: draw u, v uniform in (-1, 1) until
// 0 < s = u^2 + v^2 < 1, then emit u * f and v * f (in that order) with
// f = sqrt(-2 ln s / s). Complex Gaussians take the real part first, each
// part N(0, 1). Matrices are filled row-major.
//
// Object i of a composite draw is generated from SplitSeed(seed, i) =
// Mix(seed + Mix((i + 1) * gamma)).

#ifndef QINSTR_RANDGEN_H_
#define QINSTR_RANDGEN_H_

#include <cstdint>
#include <optional>

#include "qinstr/ensemble.h"
#include "qinstr/instrument.h"
#include "qinstr/linops.h"
#include "qinstr/states.h"

namespace qinstr {

std::uint64_t Mix64(std::uint64_t z);
std::uint64_t SplitSeed(std::uint64_t seed, std::uint64_t index);

class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next() {
    state_ += kGamma;
    return Mix64(state_);
  }
  double Uniform();  // [0, 1)
  double Gaussian();
  Complex ComplexGaussian();
  // rows x cols matrix of complex Gaussians.
  ComplexMatrix GaussianMatrix(int rows, int cols);

 private:
  std::uint64_t state_;
  std::optional<double> spare_;
};

// Parameter ranges accepted by the generators.
struct GeneratorConfig {
  std::uint64_t seed = 0;
  int dim = 2;                // 2..8
  int num_outcomes = 2;       // 1..8
  int kraus_per_outcome = 1;  // 1..4
  int num_letters = 2;        // 1..8
  bool pure_letters = false;

  // Raises kInvalidParams naming the first out-of-range field.
  void Validate() const;
};

// G G^dagger / Tr(G G^dagger) with G a dim x rank complex Gaussian matrix.
// Requires 1 <= rank <= dim (kInvalidRank) and 1 <= dim <= 64.
DensityMatrix RandomState(int dim, int rank, std::uint64_t seed);

// Kraus operators sliced from a random (K n) x n isometry, K =
// num_outcomes * kraus_per_outcome, obtained from a complex Gaussian matrix
// by Householder QR with the phases of R's diagonal absorbed into Q.
// Outcome labels are "0", "1", ...; operator j of outcome w is block
// w * kraus_per_outcome + j of the isometry.
Instrument RandomInstrument(int dim, int num_outcomes, int kraus_per_outcome, std::uint64_t seed);

// Priors from normalized -log(1 - u) draws (seed SplitSeed(seed, 0)); letter a
// uses SplitSeed(seed, a + 1), rank 1 when pure and otherwise
// 1 + SplitSeed(sub, 0) mod dim. Letters are labelled "a0", "a1", ...
Ensemble RandomEnsemble(int dim, int num_letters, bool pure, std::uint64_t seed);

}  // namespace qinstr

#endif  // QINSTR_RANDGEN_H_
