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

#include "qinstr/linops.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qinstr/error.h"

namespace qinstr {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonSquare: return "NonSquare";
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNotPsd: return "NotPSD";
    case ErrorCode::kConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kLabelMismatch: return "LabelMismatch";
    case ErrorCode::kInvalidState: return "InvalidState";
    case ErrorCode::kUnknownOutcome: return "UnknownOutcome";
    case ErrorCode::kInvalidRank: return "InvalidRank";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kNotFinite: return "NotFinite";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

namespace {

double MaxAsymmetry(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

EigenDecomposition HermitianEig(const ComplexMatrix& m) {
  if (!IsSquare(m)) {
    throw Error(ErrorCode::kNonSquare,
                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (!IsFinite(m)) throw Error(ErrorCode::kNotFinite, "matrix has NaN/Inf entries");
  double asym = MaxAsymmetry(m);
  if (asym > kHermitianTolerance) {
    throw Error(ErrorCode::kNotHermitian,
                "asymmetry " + std::to_string(asym) + " exceeds tolerance");
  }
  // SelfAdjointEigenSolver wants column-major storage.
  Eigen::MatrixXcd sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kConvergenceFailure, "Hermitian eigensolver did not converge");
  }
  return EigenDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix Dagger(const ComplexMatrix& m) { return m.adjoint(); }

Complex Trace(const ComplexMatrix& m) { return m.trace(); }

double FrobeniusNorm(const ComplexMatrix& m) { return m.norm(); }

ComplexMatrix Multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "inner dimensions differ");
  }
  return a * b;
}

double MaxAbsDiff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "shapes differ");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

bool IsSquare(const ComplexMatrix& m) { return m.rows() == m.cols() && m.rows() > 0; }

bool IsFinite(const ComplexMatrix& m) { return m.allFinite(); }

bool IsHermitian(const ComplexMatrix& m, double tol) {
  return IsSquare(m) && IsFinite(m) && MaxAsymmetry(m) <= tol;
}

bool IsPsd(const ComplexMatrix& m, double tol) {
  if (!IsHermitian(m)) return false;
  return HermitianEig(m).eigenvalues.minCoeff() >= -tol;
}

ComplexMatrix Tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix PartialTrace(const ComplexMatrix& m, Factor traced, int n, int m_dim) {
  if (n <= 0 || m_dim <= 0 || m.rows() != n * m_dim || m.cols() != n * m_dim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "partial trace expects a " + std::to_string(n * m_dim) + " square matrix");
  }
  if (traced == Factor::kSecond) {
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < m_dim; ++k) out(i, j) += m(i * m_dim + k, j * m_dim + k);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(m_dim, m_dim);
  for (int k = 0; k < m_dim; ++k)
    for (int l = 0; l < m_dim; ++l)
      for (int i = 0; i < n; ++i) out(k, l) += m(i * m_dim + k, i * m_dim + l);
  return out;
}

ComplexMatrix MatrixFnOnSupport(const ComplexMatrix& m,
                                const std::function<double(double)>& f, double cutoff) {
  EigenDecomposition eig = HermitianEig(m);
  const Eigen::Index n = eig.eigenvalues.size();
  RealVector mapped = RealVector::Zero(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    double lambda = eig.eigenvalues[k];
    if (lambda < -cutoff) {
      throw Error(ErrorCode::kNotPsd, "eigenvalue " + std::to_string(lambda) +
                                         " below -" + std::to_string(cutoff));
    }
    if (lambda > cutoff) mapped[k] = f(lambda);
  }
  const ComplexMatrix& u = eig.eigenvectors;
  return u * mapped.cast<Complex>().asDiagonal() * u.adjoint();
}

ComplexMatrix Identity(int n) { return ComplexMatrix::Identity(n, n); }

}  // namespace qinstr
