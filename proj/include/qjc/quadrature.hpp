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

#ifndef QJC_QUADRATURE_HPP_
#define QJC_QUADRATURE_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qjc/multiprec.hpp"
#include "qjc/types.hpp"

namespace qjc {

// Gauss rule reconstructed from power moments.  The first 2*order moments
// of the discrete measure sum_j weights_j delta(x - nodes_j) reproduce the
// input moments; moment_error records the worst relative deviation measured
// after rounding nodes and weights to double.
struct QuadratureRule {
  RealVector nodes;     // strictly increasing, > 0 for our moment sequences
  RealVector weights;   // > 0
  int order = 0;
  double moment_error = 0.0;
};

// Raised when a Hankel pivot of the moment matrix fails to be positive:
// either the input is not a moment sequence or the working precision is
// exhausted.  failing_order is the 0-based pivot index.
class HankelNotPositiveDefinite : public std::runtime_error {
 public:
  HankelNotPositiveDefinite(const std::string& what, int order)
      : std::runtime_error(what), failing_order(order) {}
  int failing_order;
};

namespace detail {

// Three-term recurrence coefficients of the orthonormal polynomials of the
// moment sequence: Jacobi diagonal alpha_0..alpha_{q-1} and off-diagonal
// beta_1..beta_{q-1}, extracted from a partial Cholesky factorization of the
// (q+1) x (q+1) Hankel matrix.  Only moments m_0..m_{2q-1} are read; the
// final pivot, which would need m_{2q}, is skipped.
template <class Real>
struct Recurrence {
  std::vector<Real> alpha;
  std::vector<Real> beta;  // off-diagonal entries, size q-1
};

template <class Real>
Recurrence<Real> recurrence_from_moments(const std::vector<Real>& m, int q) {
  if (q < 1) throw std::invalid_argument("recurrence_from_moments: order must be >= 1");
  if (static_cast<int>(m.size()) < 2 * q) {
    throw std::invalid_argument("recurrence_from_moments: need 2*order moments");
  }
  const int n = q + 1;
  std::vector<std::vector<Real>> r(n, std::vector<Real>(n, Real(0)));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i <= j; ++i) {
      if (i == j && j == q) continue;  // unneeded pivot, would read m_{2q}
      Real sum = m[static_cast<size_t>(i) + static_cast<size_t>(j)];
      for (int k = 0; k < i; ++k) sum -= r[k][i] * r[k][j];
      if (i == j) {
        if (!(sum > 0)) {
          throw HankelNotPositiveDefinite(
              "moment Hankel matrix is not positive definite", j);
        }
        r[j][j] = sqrt(sum);
      } else {
        r[i][j] = sum / r[i][i];
      }
    }
  }
  Recurrence<Real> rec;
  rec.alpha.reserve(q);
  rec.alpha.push_back(r[0][1] / r[0][0]);
  for (int j = 1; j < q; ++j) {
    rec.alpha.push_back(r[j][j + 1] / r[j][j] - r[j - 1][j] / r[j - 1][j - 1]);
    rec.beta.push_back(r[j][j] / r[j - 1][j - 1]);
  }
  return rec;
}

// Eigen-decomposition of a real symmetric matrix by cyclic Jacobi rotations,
// templated so it runs at extended precision.  Returns eigenvalues unsorted
// in the diagonal of a and the accumulated rotations in v (columns are
// eigenvectors).
template <class Real>
void jacobi_eigen_symmetric(DenseMatrix<Real>& a, DenseMatrix<Real>& v) {
  const int n = static_cast<int>(a.rows());
  v = DenseMatrix<Real>::Identity(n, n);
  if (n < 2) return;
  Real eps = Real(1);
  while (Real(1) + eps / 2 != Real(1)) eps /= 2;

  for (int sweep = 0; sweep < 200; ++sweep) {
    Real off(0);
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    Real scale(0);
    for (int p = 0; p < n; ++p) scale += a(p, p) * a(p, p);
    if (off <= eps * eps * (scale + off)) return;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (a(p, q) == 0) continue;
        const Real theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
        Real t;
        if (theta >= 0) {
          t = Real(1) / (theta + sqrt(theta * theta + 1));
        } else {
          t = Real(-1) / (-theta + sqrt(theta * theta + 1));
        }
        const Real c = Real(1) / sqrt(t * t + 1);
        const Real s = t * c;
        const Real tau = s / (1 + c);
        const Real apq = a(p, q);
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = Real(0);
        a(q, p) = Real(0);
        for (int k = 0; k < n; ++k) {
          if (k != p && k != q) {
            const Real akp = a(k, p);
            const Real akq = a(k, q);
            a(k, p) = akp - s * (akq + tau * akp);
            a(p, k) = a(k, p);
            a(k, q) = akq + s * (akp - tau * akq);
            a(q, k) = a(k, q);
          }
          const Real vkp = v(k, p);
          const Real vkq = v(k, q);
          v(k, p) = vkp - s * (vkq + tau * vkp);
          v(k, q) = vkq + s * (vkp - tau * vkq);
        }
      }
    }
  }
  throw std::runtime_error("jacobi_eigen_symmetric: no convergence");
}

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix, weights are
// m_0 times the squared first components of the normalized eigenvectors.
template <class Real>
void gauss_rule_from_recurrence(const Recurrence<Real>& rec, const Real& mass,
                                std::vector<Real>* nodes, std::vector<Real>* weights) {
  const int q = static_cast<int>(rec.alpha.size());
  DenseMatrix<Real> jm = DenseMatrix<Real>::Zero(q, q);
  for (int i = 0; i < q; ++i) jm(i, i) = rec.alpha[i];
  for (int i = 0; i + 1 < q; ++i) {
    jm(i, i + 1) = rec.beta[i];
    jm(i + 1, i) = rec.beta[i];
  }
  DenseMatrix<Real> v;
  jacobi_eigen_symmetric(jm, v);
  std::vector<int> idx(q);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return jm(a, a) < jm(b, b); });
  nodes->resize(q);
  weights->resize(q);
  for (int i = 0; i < q; ++i) {
    (*nodes)[i] = jm(idx[i], idx[i]);
    (*weights)[i] = mass * v(0, idx[i]) * v(0, idx[i]);
  }
}

}  // namespace detail

// Builds the order-q Gauss rule whose first 2q moments match c_0..c_{2q-1}.
// The recurrence construction and eigen-decomposition run at the precision
// configured through QJC_PRECISION_BITS (default 256 bits); the result is
// rounded to double and the achieved moment reproduction is recorded.
// Requires c.size() >= 2q and c_k > 0.
QuadratureRule moment_quadrature(const std::vector<mp::Real>& c, int q);

// Convenience overload lifting double moments to extended precision.
QuadratureRule moment_quadrature(const std::vector<double>& c, int q);

}  // namespace qjc

#endif  // QJC_QUADRATURE_HPP_
