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
#include <string>

#include "qinstr/error.h"

namespace qinstr {

std::string_view UnitsName(Units units) { return units == Units::kBits ? "bits" : "nats"; }

Units ParseUnits(std::string_view name) {
  if (name == "bits") return Units::kBits;
  if (name == "nats") return Units::kNats;
  throw Error(ErrorCode::kInvalidParams, "unknown units '" + std::string(name) + "'");
}

double NatsTo(Units units) { return units == Units::kBits ? 1.0 / std::numbers::ln2 : 1.0; }

namespace {

double Convert(double nats, Units units) { return nats * NatsTo(units); }

ExtendedReal Convert(ExtendedReal nats, Units units) {
  if (!nats.is_finite()) return nats;
  return nats.value() * NatsTo(units);
}

double XLogX(double x) { return x > kSupportCutoff ? x * std::log(x) : 0.0; }

}  // namespace

double EntropyNats(const ComplexMatrix& a) {
  EigenDecomposition eig = HermitianEig(a);
  double s = 0.0;
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
    if (eig.eigenvalues[k] < -kSupportCutoff) {
      throw Error(ErrorCode::kNotPsd, "entropy of a non-PSD matrix");
    }
    s -= XLogX(eig.eigenvalues[k]);
  }
  return s;
}

ExtendedReal RelativeEntropyNats(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "relative entropy of differently sized matrices");
  }
  EigenDecomposition ea = HermitianEig(a);
  EigenDecomposition eb = HermitianEig(b);
  const Eigen::Index n = ea.eigenvalues.size();
  // supp a must lie inside supp b.
  for (Eigen::Index k = 0; k < n; ++k) {
    if (ea.eigenvalues[k] <= kSupportCutoff) continue;
    double overlap = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (eb.eigenvalues[j] > kSupportCutoff) continue;
      overlap += std::norm(eb.eigenvectors.col(j).dot(ea.eigenvectors.col(k)));
    }
    if (overlap > kSupportOverlapThreshold) return ExtendedReal::Infinity();
  }
  auto log = [](double x) { return std::log(x); };
  ComplexMatrix log_a = MatrixFnOnSupport(a, log);
  ComplexMatrix log_b = MatrixFnOnSupport(b, log);
  return (a * (log_a - log_b)).trace().real();
}

double VonNeumannEntropy(const DensityMatrix& rho, Units units) {
  return Convert(EntropyNats(rho.matrix()), units);
}

ExtendedReal QuantumRelativeEntropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                                    Units units) {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "states of different dimension");
  }
  return Convert(RelativeEntropyNats(rho.matrix(), sigma.matrix()), units);
}

double ShannonEntropy(const ClassicalDensity& p, Units units) {
  double s = 0.0;
  for (double x : p.probs()) s -= XLogX(x);
  return Convert(s, units);
}

ExtendedReal KlDivergence(const ClassicalDensity& p, const ClassicalDensity& q, Units units) {
  if (p.labels() != q.labels()) {
    throw Error(ErrorCode::kLabelMismatch, "distributions over different labels");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= kSupportCutoff) continue;
    if (q[i] <= kSupportCutoff) return ExtendedReal::Infinity();
    d += p[i] * std::log(p[i] / q[i]);
  }
  return Convert(d, units);
}

double HybridEntropy(const HybridState& sigma, Units units) {
  double nats = ShannonEntropy(ClassicalPart(sigma), Units::kNats);
  for (const auto& c : Decompose(sigma)) {
    if (c.prob > kSupportCutoff) nats += c.prob * EntropyNats(c.state.matrix());
  }
  return Convert(nats, units);
}

double HybridEntropyDirect(const HybridState& sigma, Units units) {
  double nats = 0.0;
  for (const auto& b : sigma.blocks()) nats += EntropyNats(b);
  return Convert(nats, units);
}

namespace {

void CheckCompatible(const HybridState& s1, const HybridState& s2) {
  if (s1.labels() != s2.labels()) {
    throw Error(ErrorCode::kLabelMismatch, "hybrid states over different outcomes");
  }
  if (s1.dim() != s2.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "hybrid states of different dimension");
  }
}

}  // namespace

ExtendedReal HybridRelativeEntropy(const HybridState& s1, const HybridState& s2, Units units) {
  CheckCompatible(s1, s2);
  ExtendedReal nats = KlDivergence(ClassicalPart(s1), ClassicalPart(s2), Units::kNats);
  if (!nats.is_finite()) return nats;
  auto c1 = Decompose(s1);
  auto c2 = Decompose(s2);
  for (std::size_t w = 0; w < c1.size(); ++w) {
    if (c1[w].prob <= kSupportCutoff) continue;
    nats = nats + c1[w].prob * RelativeEntropyNats(c1[w].state.matrix(), c2[w].state.matrix());
    if (!nats.is_finite()) return nats;
  }
  return Convert(nats, units);
}

ExtendedReal HybridRelativeEntropyDirect(const HybridState& s1, const HybridState& s2,
                                         Units units) {
  CheckCompatible(s1, s2);
  ExtendedReal nats = 0.0;
  for (std::size_t w = 0; w < s1.size(); ++w) {
    nats = nats + RelativeEntropyNats(s1.blocks()[w], s2.blocks()[w]);
    if (!nats.is_finite()) return nats;
  }
  return Convert(nats, units);
}

}  // namespace qinstr
