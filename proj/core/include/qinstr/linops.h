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

// Dense complex linear algebra used throughout the library. Matrices are
// small (a few dozen rows at most) and stored row-major.

#ifndef QINSTR_LINOPS_H_
#define QINSTR_LINOPS_H_

#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace qinstr {

using Complex = std::complex<double>;
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RealVector = Eigen::VectorXd;

// Eigenvalues at or below this magnitude are treated as exact zeros by every
// spectral function, in particular 0 log 0 = 0.
inline constexpr double kSupportCutoff = 1e-12;
// Entrywise asymmetry allowed before a matrix is rejected as non-Hermitian.
inline constexpr double kHermitianTolerance = 1e-10;

struct EigenDecomposition {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // column k belongs to eigenvalues[k]
};

// Spectral decomposition of a Hermitian matrix. The input is symmetrized as
// (M + M^dagger) / 2 before factoring; an asymmetry beyond
// kHermitianTolerance raises kNotHermitian instead of being repaired.
EigenDecomposition HermitianEig(const ComplexMatrix& m);

ComplexMatrix Dagger(const ComplexMatrix& m);
Complex Trace(const ComplexMatrix& m);
double FrobeniusNorm(const ComplexMatrix& m);
ComplexMatrix Multiply(const ComplexMatrix& a, const ComplexMatrix& b);
// Largest entrywise modulus of a - b. Shapes must agree.
double MaxAbsDiff(const ComplexMatrix& a, const ComplexMatrix& b);

bool IsSquare(const ComplexMatrix& m);
bool IsFinite(const ComplexMatrix& m);
bool IsHermitian(const ComplexMatrix& m, double tol = kHermitianTolerance);
// Hermitian within kHermitianTolerance with every eigenvalue >= -tol.
bool IsPsd(const ComplexMatrix& m, double tol = kSupportCutoff);

// Kronecker product: (A (x) B)[i*rb + k, j*cb + l] = A[i,j] B[k,l].
ComplexMatrix Tensor(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Factor { kFirst, kSecond };

// Traces out `traced` of a matrix acting on C^n (x) C^m, where
// dims = {n, m}. Tracing out kSecond leaves an n x n matrix.
ComplexMatrix PartialTrace(const ComplexMatrix& m, Factor traced, int n, int m_dim);

// Applies f to the eigenvalues of a PSD matrix that lie strictly above
// cutoff; eigenvalues in [-cutoff, cutoff] are mapped to 0. Raises kNotPsd
// when an eigenvalue lies below -cutoff.
ComplexMatrix MatrixFnOnSupport(const ComplexMatrix& m,
                                const std::function<double(double)>& f,
                                double cutoff = kSupportCutoff);

ComplexMatrix Identity(int n);

}  // namespace qinstr

#endif  // QINSTR_LINOPS_H_
