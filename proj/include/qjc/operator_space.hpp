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

#ifndef QJC_OPERATOR_SPACE_HPP_
#define QJC_OPERATOR_SPACE_HPP_

#include <vector>

#include "qjc/types.hpp"

namespace qjc {

// Dense complex operator algebra with the Hilbert-Schmidt geometry
// <A,B> = Tr(A^* B).  All spans are finite and explicitly orthonormalized.

// Tr(A^* B).  Throws std::invalid_argument on dimension mismatch.
Complex hs_inner(const Matrix& a, const Matrix& b);

// Frobenius norm (= Hilbert-Schmidt norm).
double hs_norm(const Matrix& a);

// Operator norm of a Hermitian matrix (largest eigenvalue magnitude).
double hermitian_operator_norm(const Matrix& a);

// ||A - A^*|| <= tol * ||A||, Frobenius norms.  A zero matrix is Hermitian.
bool is_hermitian(const Matrix& a, double tol = 1e-12);

// Hermitian and min eigenvalue >= -tol * ||A||_op.
bool is_psd(const Matrix& a, double tol = 1e-10);

// A finite operator span with a HS-orthonormal basis.
struct OperatorSubspace {
  int ambient_dim = 0;              // matrices are ambient_dim x ambient_dim
  std::vector<Matrix> basis;        // pairwise HS-orthonormal
  double rank_tol = 1e-9;

  int dim() const { return static_cast<int>(basis.size()); }
};

// Modified Gram-Schmidt with a mandatory re-orthogonalization pass.
// Inputs whose residual norm falls below tol * (largest input norm) are
// dropped; an empty subspace is a legal result.
OperatorSubspace orthonormalize(const std::vector<Matrix>& ops, double tol = 1e-9);

// HS-orthogonal projection of A onto the span.
Matrix project_onto(const OperatorSubspace& s, const Matrix& a);

int subspace_dim(const OperatorSubspace& s);

// ||A - proj_S(A)|| <= tol * ||A||.
bool subspace_contains(const OperatorSubspace& s, const Matrix& a, double tol);

// Mutual-containment distance: the largest residual of one basis projected
// onto the other span, both ways.  Zero iff the spans coincide.
double subspace_distance(const OperatorSubspace& s1, const OperatorSubspace& s2);

// Square root of a positive semidefinite matrix via spectral decomposition.
// Eigenvalues in [-tol * ||A||_op, 0) are clamped to zero; anything lower
// throws std::invalid_argument.
Matrix psd_sqrt(const Matrix& a, double tol = 1e-10);

// P = sum_i v_i v_i^* from vectors orthonormal to within ortho_tol.
Matrix projector_from_vectors(const std::vector<Vector>& vs, double ortho_tol = 1e-10);

}  // namespace qjc

#endif  // QJC_OPERATOR_SPACE_HPP_
