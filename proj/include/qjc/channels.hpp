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

#ifndef QJC_CHANNELS_HPP_
#define QJC_CHANNELS_HPP_

#include <functional>
#include <vector>

#include "qjc/operator_space.hpp"
#include "qjc/povm.hpp"

namespace qjc {

// The generalized channel attached to a POVM with density P(w) against the
// atom weights: the dual map
//
//   Phi*(x (x) f) = sum_w f(w) weight_w sqrt(d_w) x sqrt(d_w)
//
// is unital and completely positive up to the completeness defect of the
// discretization, its predual maps states to atom-indexed trace-class
// entries, and the restriction Psi-hat*(f) = Phi*(I (x) f) has the atom
// span {M(B)} as its image.  The complementary channel of the Stinespring
// dilation of the measurement channel Psi-hat recovers exactly that span as
// its operator graph, which is the property the whole construction exists
// to witness.

struct KrausChannel {
  int in_dim = 0;
  int out_dim = 0;
  std::vector<Matrix> kraus;  // out_dim x in_dim each
};

// f_rho: one trace-class entry per atom, point atom last.
struct DiscreteStateFunction {
  std::vector<Matrix> entries;

  double total_trace() const;
};

// Phi*(x, f).  f has one complex value per atom (point last).  Terms with
// f == 0 are skipped and the identity input short-circuits the square
// roots, so indicator evaluations reproduce povm_of_set bit for bit.
Matrix phi_star(const PovmAtlas& atlas, const Matrix& x, const std::vector<Complex>& f);

// Predual at a state: entries(w) = weight_w sqrt(d_w) rho sqrt(d_w).
// Requires rho Hermitian psd with unit trace (1e-10 tolerances).
DiscreteStateFunction phi_predual(const PovmAtlas& atlas, const Matrix& rho);

// Psi-hat*(f) = Phi*(I, f).
Matrix psi_hat_star(const PovmAtlas& atlas, const std::vector<Complex>& f);

// Measurement channel: outcome probabilities p_w = weight_w Tr(rho d_w).
RealVector psi_hat(const PovmAtlas& atlas, const Matrix& rho);

// Kraus form of the measurement channel: one operator |w><v| per spectral
// factor v of weight_w d_w, ordered by (atom id, factor index).  The output
// space is spanned by the atom outcomes, and sum A*A = M(Omega).
KrausChannel kraus_of_psi_hat(const PovmAtlas& atlas);

// Complementary channel from the Stinespring dilation with environment
// basis indexed by the Kraus list: B_m = sum_k |k><m| A_k for m over the
// output basis of ch.
KrausChannel complementary(const KrausChannel& ch);

// span{A_k^* A_j} over all Kraus pairs.  Quadratic in the Kraus count.
OperatorSubspace graph_of_channel(const KrausChannel& ch, double rank_tol = 1e-9);

Matrix apply_channel(const KrausChannel& ch, const Matrix& rho);

// Choi matrix assembled from the channel's action on matrix units,
// C[(i,a),(j,b)] = Phi(E_ij)[a,b]; psd iff the map is completely positive.
Matrix choi_matrix(const KrausChannel& ch);
Matrix choi_matrix_from_action(const std::function<Matrix(const Matrix&)>& action,
                               int in_dim, int out_dim);

struct CpReport {
  double min_choi_eigenvalue = 0.0;
  double trace_preservation_defect = 0.0;  // ||sum A*A - I||, operator norm
  bool cp_ok = false;
};

// Complete-positivity certificate: recomputes the Choi matrix from the
// channel action and checks its smallest eigenvalue against -cp_tol.  The
// trace-preservation defect is reported alongside; for channels built from
// an atlas it equals the completeness defect.
CpReport choi_cp_check(const KrausChannel& ch, double cp_tol = 1e-9);

}  // namespace qjc

#endif  // QJC_CHANNELS_HPP_
