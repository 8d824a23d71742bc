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

#include "qinstr/randgen.h"

#include <cmath>
#include <string>

#include "qinstr/error.h"

namespace qinstr {

std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitSeed(std::uint64_t seed, std::uint64_t index) {
  return Mix64(seed + Mix64((index + 1) * SplitMix64::kGamma));
}

double SplitMix64::Uniform() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

double SplitMix64::Gaussian() {
  if (spare_) {
    double v = *spare_;
    spare_.reset();
    return v;
  }
  double u, v, s;
  do {
    u = 2.0 * Uniform() - 1.0;
    v = 2.0 * Uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  return u * f;
}

Complex SplitMix64::ComplexGaussian() {
  double re = Gaussian();
  double im = Gaussian();
  return {re, im};
}

ComplexMatrix SplitMix64::GaussianMatrix(int rows, int cols) {
  ComplexMatrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = ComplexGaussian();
  return g;
}

namespace {

void RequireRange(const char* name, int value, int lo, int hi) {
  if (value < lo || value > hi) {
    throw Error(ErrorCode::kInvalidParams, std::string(name) + " = " + std::to_string(value) +
                                               " outside [" + std::to_string(lo) + ", " +
                                               std::to_string(hi) + "]");
  }
}

}  // namespace

void GeneratorConfig::Validate() const {
  RequireRange("dim", dim, 2, 8);
  RequireRange("num_outcomes", num_outcomes, 1, 8);
  RequireRange("kraus_per_outcome", kraus_per_outcome, 1, 4);
  RequireRange("num_letters", num_letters, 1, 8);
}

DensityMatrix RandomState(int dim, int rank, std::uint64_t seed) {
  RequireRange("dim", dim, 1, 64);
  if (rank < 1 || rank > dim) {
    throw Error(ErrorCode::kInvalidRank,
                "rank " + std::to_string(rank) + " for dimension " + std::to_string(dim));
  }
  SplitMix64 rng(seed);
  ComplexMatrix g = rng.GaussianMatrix(dim, rank);
  ComplexMatrix m = g * g.adjoint();
  return DensityMatrix(m / m.trace().real());
}

Instrument RandomInstrument(int dim, int num_outcomes, int kraus_per_outcome, std::uint64_t seed) {
  RequireRange("dim", dim, 2, 8);
  RequireRange("num_outcomes", num_outcomes, 1, 8);
  RequireRange("kraus_per_outcome", kraus_per_outcome, 1, 4);
  const int total = num_outcomes * kraus_per_outcome;
  SplitMix64 rng(seed);
  Eigen::MatrixXcd g = rng.GaussianMatrix(total * dim, dim);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(total * dim, dim);
  for (int j = 0; j < dim; ++j) {
    Complex r = qr.matrixQR()(j, j);
    double mag = std::abs(r);
    if (mag > 0.0) q.col(j) *= r / mag;
  }
  std::vector<Outcome> outcomes;
  for (int w = 0; w < num_outcomes; ++w) {
    Outcome o{std::to_string(w), {}};
    for (int k = 0; k < kraus_per_outcome; ++k) {
      o.kraus.emplace_back(q.block((w * kraus_per_outcome + k) * dim, 0, dim, dim));
    }
    outcomes.push_back(std::move(o));
  }
  return Instrument(dim, std::move(outcomes));
}

Ensemble RandomEnsemble(int dim, int num_letters, bool pure, std::uint64_t seed) {
  RequireRange("dim", dim, 2, 8);
  RequireRange("num_letters", num_letters, 1, 8);
  SplitMix64 rng(SplitSeed(seed, 0));
  std::vector<double> weights;
  double total = 0.0;
  for (int a = 0; a < num_letters; ++a) {
    // 1 - u is in (0, 1].
    weights.push_back(-std::log(1.0 - rng.Uniform()));
    total += weights.back();
  }
  std::vector<std::string> labels;
  std::vector<DensityMatrix> states;
  for (int a = 0; a < num_letters; ++a) {
    weights[a] /= total;
    labels.push_back("a" + std::to_string(a));
    std::uint64_t sub = SplitSeed(seed, static_cast<std::uint64_t>(a + 1));
    int rank = pure ? 1 : 1 + static_cast<int>(SplitSeed(sub, 0) % static_cast<std::uint64_t>(dim));
    states.push_back(RandomState(dim, rank, sub));
  }
  return Ensemble(ClassicalDensity(std::move(labels), std::move(weights)), std::move(states));
}

}  // namespace qinstr
