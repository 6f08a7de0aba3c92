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

#include "qfridge/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qfridge/errors.hpp"

namespace qfridge {

int basis_index(const BasisLabel& label) {
  for (int n : {label.n1, label.n2, label.n3}) {
    if (n != 0 && n != 1) throw ConfigError("occupation labels must be 0 or 1");
  }
  return 4 * label.n1 + 2 * label.n2 + label.n3;
}

BasisLabel basis_label(int index) {
  if (index < 0 || index >= kHilbertDim) {
    throw ConfigError("basis index out of range [0,7]");
  }
  return BasisLabel{(index >> 2) & 1, (index >> 1) & 1, index & 1};
}

Matrix identity2() { return Matrix::Identity(2, 2); }

Matrix lowering_op() {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 1) = 1.0;
  return a;
}

Matrix raising_op() { return lowering_op().adjoint(); }

Matrix number_op() {
  Matrix n = Matrix::Zero(2, 2);
  n(1, 1) = 1.0;
  return n;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      c.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return c;
}

Matrix embed_single(const Matrix& op2, int site) {
  if (op2.rows() != 2 || op2.cols() != 2) {
    throw ConfigError("embed_single expects a 2x2 operator");
  }
  if (site < 1 || site > kNumQubits) {
    throw ConfigError("site index must be 1, 2 or 3");
  }
  const Matrix id = identity2();
  const Matrix& m1 = (site == 1) ? op2 : id;
  const Matrix& m2 = (site == 2) ? op2 : id;
  const Matrix& m3 = (site == 3) ? op2 : id;
  return kron(kron(m1, m2), m3);
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m, double herm_tol) {
  const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > herm_tol) {
    throw NumericalError("matrix is not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigenvalue solve failed");
  }
  return solver.eigenvalues();
}

DensityDiagnostics validate_density_matrix(const Matrix& rho) {
  DensityDiagnostics diag;
  diag.trace_deviation = std::abs(rho.trace() - Complex(1.0, 0.0));
  diag.hermiticity_deviation = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  const Matrix herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  diag.min_eigenvalue = solver.eigenvalues().minCoeff();
  diag.valid = diag.hermiticity_deviation <= kDensityHermTol &&
               diag.trace_deviation <= kDensityTraceTol &&
               diag.min_eigenvalue >= kDensityEigFloor;
  return diag;
}

double trace_distance(const Matrix& a, const Matrix& b) {
  Eigen::JacobiSVD<Matrix> svd(a - b);
  return 0.5 * svd.singularValues().sum();
}

Vector vectorize(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unvectorize(const Vector& v, int rows, int cols) {
  if (v.size() != static_cast<Eigen::Index>(rows) * cols) {
    throw ConfigError("unvectorize: size mismatch");
  }
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

}  // namespace qfridge
