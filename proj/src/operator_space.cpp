// Copyright 2026 The qjc authors
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

#include "qjc/operator_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace qjc {

Complex hs_inner(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("hs_inner: dimension mismatch");
  }
  return (a.adjoint() * b).trace();
}

double hs_norm(const Matrix& a) { return a.norm(); }

double hermitian_operator_norm(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

bool is_hermitian(const Matrix& a, double tol) {
  return (a - a.adjoint()).norm() <= tol * std::max(a.norm(), 1e-300);
}

bool is_psd(const Matrix& a, double tol) {
  if (!is_hermitian(a)) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix((a + a.adjoint()) / 2.0),
                                           Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  const double scale = std::max(std::abs(ev(ev.size() - 1)), std::abs(ev(0)));
  return ev(0) >= -tol * std::max(scale, 1e-300);
}

OperatorSubspace orthonormalize(const std::vector<Matrix>& ops, double tol) {
  if (ops.empty()) throw std::invalid_argument("orthonormalize: empty input");
  const int n = static_cast<int>(ops.front().rows());
  double max_norm = 0.0;
  for (const auto& op : ops) {
    if (op.rows() != n || op.cols() != n) {
      throw std::invalid_argument("orthonormalize: inconsistent dimensions");
    }
    max_norm = std::max(max_norm, op.norm());
  }
  OperatorSubspace s;
  s.ambient_dim = n;
  s.rank_tol = tol;
  const double drop = tol * max_norm;
  for (const auto& op : ops) {
    Matrix r = op;
    // two MGS sweeps; one is not enough for nearly dependent generators
    for (int sweep = 0; sweep < 2; ++sweep) {
      for (const auto& q : s.basis) r -= hs_inner(q, r) * q;
    }
    const double rn = r.norm();
    if (rn >= drop && rn > 0.0) s.basis.push_back(r / rn);
  }
  return s;
}

Matrix project_onto(const OperatorSubspace& s, const Matrix& a) {
  if (a.rows() != s.ambient_dim || a.cols() != s.ambient_dim) {
    throw std::invalid_argument("project_onto: dimension mismatch");
  }
  Matrix p = Matrix::Zero(s.ambient_dim, s.ambient_dim);
  for (const auto& q : s.basis) p += hs_inner(q, a) * q;
  return p;
}

int subspace_dim(const OperatorSubspace& s) { return s.dim(); }

bool subspace_contains(const OperatorSubspace& s, const Matrix& a, double tol) {
  return (a - project_onto(s, a)).norm() <= tol * a.norm() + 1e-300;
}

double subspace_distance(const OperatorSubspace& s1, const OperatorSubspace& s2) {
  double d = 0.0;
  for (const auto& q : s1.basis) d = std::max(d, (q - project_onto(s2, q)).norm());
  for (const auto& q : s2.basis) d = std::max(d, (q - project_onto(s1, q)).norm());
  return d;
}

Matrix psd_sqrt(const Matrix& a, double tol) {
  if (!is_hermitian(a)) throw std::invalid_argument("psd_sqrt: not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix((a + a.adjoint()) / 2.0));
  const auto& ev = es.eigenvalues();
  const double scale = std::max(std::abs(ev(ev.size() - 1)), std::abs(ev(0)));
  RealVector roots(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -tol * std::max(scale, 1e-300)) {
      throw std::invalid_argument("psd_sqrt: input not positive semidefinite");
    }
    roots(i) = ev(i) > 0.0 ? std::sqrt(ev(i)) : 0.0;
  }
  return es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix projector_from_vectors(const std::vector<Vector>& vs, double ortho_tol) {
  if (vs.empty()) throw std::invalid_argument("projector_from_vectors: empty input");
  const Eigen::Index n = vs.front().size();
  for (size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].size() != n) {
      throw std::invalid_argument("projector_from_vectors: inconsistent dimensions");
    }
    for (size_t j = 0; j <= i; ++j) {
      const Complex g = vs[j].dot(vs[i]);
      const double target = (i == j) ? 1.0 : 0.0;
      if (std::abs(g - target) > ortho_tol) {
        throw std::invalid_argument("projector_from_vectors: input not orthonormal");
      }
    }
  }
  Matrix p = Matrix::Zero(n, n);
  for (const auto& v : vs) p += v * v.adjoint();
  return p;
}

}  // namespace qjc
