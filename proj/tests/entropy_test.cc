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

#include "qinstr/entropy.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "qinstr/error.h"
#include "qinstr/instrument.h"
#include "qinstr/randgen.h"
#include "test_util.h"

namespace qinstr {
namespace {

using testing::BinaryEntropyBits;
using testing::Eig2x2;
using testing::Ket0;
using testing::Ket1;
using testing::Mat2;

ComplexMatrix RandomUnitary(int n, std::uint64_t seed) {
  return RandomInstrument(n, 1, 1, seed).outcomes()[0].kraus[0];
}

TEST(VonNeumannEntropy, Examples) {
  EXPECT_NEAR(VonNeumannEntropy(Ket0()), 0.0, 1e-15);
  EXPECT_NEAR(VonNeumannEntropy(DensityMatrix::MaximallyMixed(2)), 1.0, 1e-14);
  EXPECT_NEAR(VonNeumannEntropy(DensityMatrix::MaximallyMixed(5), Units::kNats), std::log(5.0), 1e-14);
  auto [lo, hi] = Eig2x2(0.75, 0.25, 0.25);
  double expected = BinaryEntropyBits(lo);
  EXPECT_NEAR(VonNeumannEntropy(DensityMatrix(Mat2(0.75, 0.25, 0.25, 0.25))), expected, 1e-12);
  EXPECT_NEAR(expected, 0.6008760366928562, 1e-12);
  (void)hi;
}

TEST(QuantumRelativeEntropy, Examples) {
  DensityMatrix rho = RandomState(3, 3, 5);
  EXPECT_NEAR(QuantumRelativeEntropy(rho, rho).value(), 0.0, 1e-12);
  EXPECT_TRUE(QuantumRelativeEntropy(Ket0(), Ket1()).is_pos_inf());
  EXPECT_NEAR(QuantumRelativeEntropy(Ket0(), DensityMatrix::MaximallyMixed(2)).value(), 1.0, 1e-14);
  // The reverse direction leaves the support of |0><0|.
  EXPECT_TRUE(QuantumRelativeEntropy(DensityMatrix::MaximallyMixed(2), Ket0()).is_pos_inf());
  EXPECT_THROW(QuantumRelativeEntropy(Ket0(), DensityMatrix::MaximallyMixed(3)), Error);
}

TEST(QuantumRelativeEntropy, RankDeficientButNestedSupportsAreFinite) {
  // rho = |0><0| inside the support of sigma = diag(1/2, 1/2, 0).
  ComplexMatrix s = ComplexMatrix::Zero(3, 3);
  s(0, 0) = s(1, 1) = 0.5;
  DensityMatrix sigma(s);
  DensityMatrix rho = DensityMatrix::Basis(3, 0);
  EXPECT_NEAR(QuantumRelativeEntropy(rho, sigma).value(), 1.0, 1e-14);
  EXPECT_TRUE(QuantumRelativeEntropy(DensityMatrix::Basis(3, 2), sigma).is_pos_inf());
}

TEST(ShannonEntropy, Examples) {
  EXPECT_EQ(ShannonEntropy(ClassicalDensity::PointMass({"a", "b"}, 0)), 0.0);
  EXPECT_NEAR(ShannonEntropy(ClassicalDensity::Uniform({"a", "b", "c", "d"})), 2.0, 1e-15);
  EXPECT_NEAR(ShannonEntropy(ClassicalDensity({"a", "b"}, {0.75, 0.25})), BinaryEntropyBits(0.25), 1e-15);
  EXPECT_NEAR(BinaryEntropyBits(0.25), 0.8112781244591328, 1e-15);
}

TEST(KlDivergence, Examples) {
  ClassicalDensity p({"a", "b"}, {0.5, 0.5});
  ClassicalDensity q({"a", "b"}, {0.75, 0.25});
  EXPECT_EQ(KlDivergence(p, p).value(), 0.0);
  EXPECT_TRUE(KlDivergence(ClassicalDensity({"a", "b"}, {1, 0}), ClassicalDensity({"a", "b"}, {0, 1})).is_pos_inf());
  double expected = 0.5 * std::log2(0.5 / 0.75) + 0.5 * std::log2(0.5 / 0.25);
  EXPECT_NEAR(KlDivergence(p, q).value(), expected, 1e-15);
  EXPECT_NEAR(expected, 0.20751874963942185, 1e-15);
  EXPECT_THROW(KlDivergence(p, ClassicalDensity({"a", "c"}, {0.5, 0.5})), Error);
}

TEST(KlDivergence, AgainstUniformIsEntropyDeficit) {
  SplitMix64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + trial % 6;
    std::vector<std::string> labels;
    std::vector<double> w;
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      labels.push_back(std::to_string(i));
      w.push_back(rng.Uniform());
      total += w.back();
    }
    for (double& x : w) x /= total;
    ClassicalDensity p(labels, w);
    EXPECT_NEAR(KlDivergence(p, ClassicalDensity::Uniform(labels)).value(),
                std::log2(static_cast<double>(n)) - ShannonEntropy(p), 1e-9);
  }
}

TEST(HybridEntropy, Examples) {
  EXPECT_NEAR(HybridEntropy(HybridState({"x"}, {Ket0().matrix()})), 0.0, 1e-15);
  HybridState classical({"a", "b"}, {0.5 * Ket0().matrix(), 0.5 * Ket1().matrix()});
  EXPECT_NEAR(HybridEntropy(classical), 1.0, 1e-14);
  HybridState mixed({"a", "b"}, {Identity(2) / 4.0, Identity(2) / 4.0});
  EXPECT_NEAR(HybridEntropy(mixed), 2.0, 1e-14);
  EXPECT_NEAR(HybridEntropyDirect(mixed), 2.0, 1e-14);
}

TEST(HybridRelativeEntropy, Examples) {
  HybridState s({"a", "b"}, {0.3 * Ket0().matrix(), 0.7 * Ket1().matrix()});
  EXPECT_NEAR(HybridRelativeEntropy(s, s).value(), 0.0, 1e-15);
  // Same conditionals, different weights: only the classical term survives.
  HybridState t({"a", "b"}, {0.6 * Ket0().matrix(), 0.4 * Ket1().matrix()});
  double kl = KlDivergence(ClassicalDensity({"a", "b"}, {0.3, 0.7}),
                           ClassicalDensity({"a", "b"}, {0.6, 0.4})).value();
  EXPECT_NEAR(HybridRelativeEntropy(s, t).value(), kl, 1e-14);
  HybridState other({"a", "c"}, {0.3 * Ket0().matrix(), 0.7 * Ket1().matrix()});
  EXPECT_THROW(HybridRelativeEntropy(s, other), Error);
}

TEST(EntropyProperties, UnitaryInvarianceAndNonnegativity) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    DensityMatrix rho = RandomState(n, 1 + static_cast<int>(seed % n), seed);
    ComplexMatrix u = RandomUnitary(n, seed + 1000);
    DensityMatrix rotated(u * rho.matrix() * u.adjoint());
    double s = VonNeumannEntropy(rho);
    EXPECT_NEAR(VonNeumannEntropy(rotated), s, 1e-9);
    EXPECT_GE(s, -1e-9);
    EXPECT_LE(s, std::log2(static_cast<double>(n)) + 1e-9);
    DensityMatrix sigma = RandomState(n, n, seed + 2000);
    ExtendedReal d = QuantumRelativeEntropy(rho, sigma);
    EXPECT_TRUE(d.is_finite());
    EXPECT_GE(d.value(), -1e-9);
  }
}

TEST(EntropyProperties, HybridTwoFormulaAgreement) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    Instrument instr = RandomInstrument(n, 2 + static_cast<int>(seed % 3), 1 + static_cast<int>(seed % 2), seed);
    HybridState s1 = LambdaI(instr, RandomState(n, 1 + static_cast<int>(seed % n), seed + 1));
    HybridState s2 = LambdaI(instr, RandomState(n, n, seed + 2));
    EXPECT_NEAR(HybridEntropy(s1), HybridEntropyDirect(s1), 1e-9);
    ExtendedReal a = HybridRelativeEntropy(s1, s2);
    ExtendedReal b = HybridRelativeEntropyDirect(s1, s2);
    ASSERT_TRUE(a.is_finite());
    EXPECT_NEAR(a.value(), b.value(), 1e-9);
    EXPECT_GE(a.value(), -1e-9);
  }
}

TEST(Units, ParseAndConvert) {
  EXPECT_EQ(ParseUnits("bits"), Units::kBits);
  EXPECT_EQ(ParseUnits("nats"), Units::kNats);
  EXPECT_THROW(ParseUnits("bans"), Error);
  EXPECT_DOUBLE_EQ(NatsTo(Units::kBits), 1.0 / std::numbers::ln2);
  DensityMatrix rho = RandomState(3, 2, 1);
  EXPECT_NEAR(VonNeumannEntropy(rho, Units::kBits),
              VonNeumannEntropy(rho, Units::kNats) / std::log(2.0), 1e-14);
}

TEST(ExtendedReal, Arithmetic) {
  ExtendedReal inf = ExtendedReal::Infinity();
  EXPECT_TRUE((inf + 2.0).is_pos_inf());
  EXPECT_EQ((0.0 * inf).value(), 0.0);
  EXPECT_EQ(ExtendedReal(-1e-16).clamped(), 0.0);
  EXPECT_FALSE(inf.is_finite());
}

}  // namespace
}  // namespace qinstr
