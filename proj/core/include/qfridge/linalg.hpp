// Copyright 2026 The qfridge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qfridge {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr int kNumQubits = 3;
inline constexpr int kHilbertDim = 8;   // 2^3
inline constexpr int kLiouvilleDim = kHilbertDim * kHilbertDim;

// Occupation labels |n1 n2 n3> of the three qubits, n1 most significant.
struct BasisLabel {
  int n1 = 0;
  int n2 = 0;
  int n3 = 0;
};

// index = 4 n1 + 2 n2 + n3; |010> <-> 2 and |101> <-> 5.
int basis_index(const BasisLabel& label);
BasisLabel basis_label(int index);

// Single-qubit operators in the {|0>, |1>} basis.
Matrix identity2();
Matrix lowering_op();   // a: |1> -> |0>
Matrix raising_op();    // a^dag
Matrix number_op();     // |1><1|

// Kronecker product, row-of-A-major: (A kron B)(i*Br+k, j*Bc+l) = A(i,j) B(k,l).
Matrix kron(const Matrix& a, const Matrix& b);

// Embed a 2x2 operator on one site (1, 2 or 3) of the three-qubit space,
// identity elsewhere, consistent with basis_index ordering.
Matrix embed_single(const Matrix& op2, int site);

// Tolerance-based entrywise comparison (max abs deviation <= tol).
bool approx_equal(const Matrix& a, const Matrix& b, double tol = 1e-12);

// Eigenvalues of a Hermitian matrix, ascending. Throws NumericalError if the
// input deviates from Hermiticity by more than herm_tol.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m, double herm_tol = 1e-10);

struct DensityDiagnostics {
  double trace_deviation = 0.0;   // |Tr(rho) - 1|
  double hermiticity_deviation = 0.0;  // max |rho - rho^dag|
  double min_eigenvalue = 0.0;
  bool valid = false;
};

inline constexpr double kDensityHermTol = 1e-10;
inline constexpr double kDensityTraceTol = 1e-9;
inline constexpr double kDensityEigFloor = -1e-9;

// Checks the density-matrix invariants (Hermitian within 1e-10, unit trace
// within 1e-9, min eigenvalue >= -1e-9). Never throws; the verdict is in
// the diagnostics.
DensityDiagnostics validate_density_matrix(const Matrix& rho);

// 1/2 * sum of singular values of (a - b); standard distinguishability metric.
double trace_distance(const Matrix& a, const Matrix& b);

// Column-major vectorization and its inverse.
Vector vectorize(const Matrix& m);
Matrix unvectorize(const Vector& v, int rows, int cols);

}  // namespace qfridge
