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

#ifndef QJC_COHERENT_HPP_
#define QJC_COHERENT_HPP_

#include <vector>

#include "qjc/model.hpp"
#include "qjc/multiprec.hpp"
#include "qjc/types.hpp"

namespace qjc {

// Gazeau-Klauder coherent states over a strictly increasing energy sequence
// E_0 < E_1 < ...: with the dimensionless shifts eps_k = (E_k - E_0)/scale
// and weights c_0 = 1, c_k = eps_1 * ... * eps_k, the state at action x >= 0
// and angle y is
//
//   |x,y> = N(x)^{-1} sum_k x^{k/2} e^{-i E_k y} / sqrt(c_k) |level_k>,
//   N(x)^2 = sum_k x^k / c_k.
//
// The J branch rides the plus-branch ladder (level_k = |k+1,+>), the S
// branch the minus-branch ladder above the split (level_k = |k+K0,->).
// Sequences extend past the Fock truncation through the closed-form
// spectrum; only materialized vectors are capped by the truncation.

enum class CoherentBranch { J, S };

struct CoherentFamily {
  CoherentBranch branch = CoherentBranch::J;
  int k0 = 0;      // split parameter (dressed offset of the S ladder)
  int n_max = 0;   // truncation of the dressed space
  int depth = 0;   // eps/energies valid for k <= depth+1, c for k <= depth+1
  std::vector<double> energies;  // E_k, size depth+2
  std::vector<double> eps;       // shifted sequence, eps[0] = 0
  std::vector<mp::Real> c;       // extended-precision weights, size depth+2
  std::vector<double> c_d;       // double view of c

  // dressed index carrying series term k
  int dressed_index(int k) const {
    return branch == CoherentBranch::J ? dressed_index_plus(k + 1)
                                       : dressed_index_minus(k + k0, n_max);
  }
  // largest k whose dressed level exists under the truncation
  int max_materializable_depth() const {
    return branch == CoherentBranch::J ? n_max - 1 : n_max - k0;
  }
};

// eps_k = (seq_k - seq_0) / scale.  Requires seq strictly increasing and
// scale > 0; invariant under constant shifts of seq by construction.
std::vector<double> shifted_sequence(const std::vector<double>& seq, double scale);

// c_0 = 1, c_k = prod_{i<=k} eps_i, evaluated in extended precision
// (products reach factorial magnitudes).  Requires eps_i > 0 for i >= 1.
// Returns K+1 entries c_0..c_K.
std::vector<mp::Real> weights_c(const std::vector<double>& eps, int K);

// Family over the model's J or S ladder, sequences built to series depth K
// from the closed-form spectrum.
CoherentFamily build_family(CoherentBranch branch, const ModelParams& params,
                            int K0, int depth);

// N(x) truncated at K terms.  Requires the tail bound
// x^{K+1}/c_{K+1} <= 1e-14 * (partial sum); throws std::runtime_error when
// the requested depth cannot certify it.
double normalization(double x, const CoherentFamily& fam, int K);

// Unit vector in dressed coordinates with coefficients
// x^{k/2} e^{-i E_k y} / (N_K(x) sqrt(c_k)) on the family ladder, k <= K.
// The normalization is the depth-K partial sum, so the result has unit norm
// by construction.  Enforces the same tail bound as normalization() and the
// truncation cap on K.
Vector coherent_vector(const CoherentFamily& fam, double x, double y, int K);

namespace detail {
// Assembly without the tail-bound precondition; *tail_ratio receives
// x^{K+1}/c_{K+1} relative to the partial sum.  Used by the POVM builder,
// whose discretization error is reported rather than asserted.
Vector coherent_vector_unchecked(const CoherentFamily& fam, double x, double y,
                                 int K, double* tail_ratio, double* norm2);
}  // namespace detail

// Discretization of the angle average.
enum class YMode { exact_mean, finite_grid };

struct YGrid {
  YMode mode = YMode::exact_mean;
  std::vector<double> points;  // equal weights 1/M, finite_grid only
};

YGrid exact_mean_grid();
// y_m = (m + 1/2) * span / M for m = 0..M-1.
YGrid uniform_y_grid(int points, double span);
// span = factor / (smallest gap between distinct sorted energies)
double default_y_span(const std::vector<double>& energies, double factor = 50.0);

// Mean over y of e^{-iEy} A e^{+iEy} for A = a0, E = diag(energies):
// exact_mean keeps the entries between equal energies (the almost-periodic
// mean, a Kronecker delta on energy gaps); finite_grid averages over the
// grid, with leakage of order 1/(M * gap * spacing) per off-diagonal entry
// while gap * span/M stays below pi.  finite_grid requires >= 2 points.
Matrix y_average(const RealVector& energies, const Matrix& a0, const YGrid& grid);

}  // namespace qjc

#endif  // QJC_COHERENT_HPP_
