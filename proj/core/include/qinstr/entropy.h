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

// Entropies and relative entropies of quantum, classical and hybrid states.
//
// Everything is computed in nats and converted on return. Relative entropies
// return ExtendedReal because they are +infinity whenever the support of the
// first argument is not contained in the support of the second.

#ifndef QINSTR_ENTROPY_H_
#define QINSTR_ENTROPY_H_

#include <cmath>
#include <limits>
#include <string_view>

#include "qinstr/linops.h"
#include "qinstr/states.h"

namespace qinstr {

enum class Units { kBits, kNats };

std::string_view UnitsName(Units units);
// Accepts "bits" or "nats"; raises kInvalidParams otherwise.
Units ParseUnits(std::string_view name);
// Multiplier converting a value in nats to `units`.
double NatsTo(Units units);

// Squared overlap between a support eigenvector of the first argument and the
// kernel of the second above which the relative entropy is declared infinite.
inline constexpr double kSupportOverlapThreshold = 1e-9;

// A real number or +/- infinity. Finite raw values are kept as computed, so a
// nonnegative quantity may come back as -1e-16.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr ExtendedReal(double v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtendedReal Infinity() {
    return ExtendedReal(std::numeric_limits<double>::infinity());
  }

  constexpr double value() const { return value_; }
  bool is_finite() const { return std::isfinite(value_); }
  bool is_pos_inf() const { return std::isinf(value_) && value_ > 0; }
  bool is_neg_inf() const { return std::isinf(value_) && value_ < 0; }
  // max(value, 0) for display of quantities known to be nonnegative.
  double clamped() const { return value_ < 0.0 ? 0.0 : value_; }

  friend ExtendedReal operator+(ExtendedReal a, ExtendedReal b) { return a.value_ + b.value_; }
  friend ExtendedReal operator*(double s, ExtendedReal a) {
    // 0 * inf contributes nothing: zero-weight terms are dropped.
    if (s == 0.0) return 0.0;
    return s * a.value_;
  }
  friend bool operator==(ExtendedReal a, ExtendedReal b) { return a.value_ == b.value_; }

 private:
  double value_ = 0.0;
};

double VonNeumannEntropy(const DensityMatrix& rho, Units units = Units::kBits);
ExtendedReal QuantumRelativeEntropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                                    Units units = Units::kBits);

double ShannonEntropy(const ClassicalDensity& p, Units units = Units::kBits);
// Labels must match in order.
ExtendedReal KlDivergence(const ClassicalDensity& p, const ClassicalDensity& q,
                          Units units = Units::kBits);

// Computed through the classical/conditional decomposition of the
// blocks. The *Direct variants evaluate the block formula
// -sum Tr S(w) log S(w) (resp. sum Tr S1(w)(log S1(w) - log S2(w))) instead,
// and exist to cross-check the decomposition.
double HybridEntropy(const HybridState& sigma, Units units = Units::kBits);
double HybridEntropyDirect(const HybridState& sigma, Units units = Units::kBits);
ExtendedReal HybridRelativeEntropy(const HybridState& s1, const HybridState& s2,
                                   Units units = Units::kBits);
ExtendedReal HybridRelativeEntropyDirect(const HybridState& s1, const HybridState& s2,
                                         Units units = Units::kBits);

// Tr A (log A - log B) for PSD matrices of equal size with arbitrary trace,
// in nats. Building block for the functions above.
ExtendedReal RelativeEntropyNats(const ComplexMatrix& a, const ComplexMatrix& b);
// -Tr A log A for a PSD matrix, in nats.
double EntropyNats(const ComplexMatrix& a);

}  // namespace qinstr

#endif  // QINSTR_ENTROPY_H_
