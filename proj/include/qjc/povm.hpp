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

#ifndef QJC_POVM_HPP_
#define QJC_POVM_HPP_

#include <vector>

#include "qjc/coherent.hpp"
#include "qjc/model.hpp"
#include "qjc/quadrature.hpp"
#include "qjc/types.hpp"

namespace qjc {

// Discretized positive operator-valued measure over two coherent-state
// components plus the single point carrying the split projector P3.  The
// sigma-algebra is the power set of a finite atom list; every measure
// identity is then exact and testable, and refining the quadrature order
// converges to the continuum construction.

enum class PovmComponent { one, two, point };

struct PovmAtom {
  PovmComponent component = PovmComponent::point;
  double x = 0.0;
  double y = 0.0;                // unused for exact-mean and point atoms
  double weight = 1.0;
  Matrix density;                // psd, dressed coordinates
  Matrix sqrt_density;           // analytic square root of density
  std::vector<Vector> factors;   // density = sum_m f_m f_m^*
  double tail_ratio = 0.0;       // coherent series mass lost to the truncation
};

struct PovmAtlas {
  ModelParams params;
  int K0 = 0;
  int Q = 0;                     // quadrature order per component
  YMode y_mode = YMode::exact_mean;
  int y_points = 0;              // finite_grid only
  int depth_J = 0;               // materialized series depth per branch
  int depth_S = 0;
  int dressed_dim = 0;
  // Atom ordering: component one by ascending (x, y), component two, then
  // the point atom last.  This order fixes every summation in the library.
  std::vector<PovmAtom> atoms;
  // Dressed indices where the quadrature reproduces the identity exactly
  // (the first 2Q ladder levels of each component) plus the P3 block.
  std::vector<int> interior_indices;
  QuadratureRule quad_J, quad_S;

  int coherent_atom_count() const { return static_cast<int>(atoms.size()) - 1; }
  const PovmAtom& point_atom() const { return atoms.back(); }
};

// Measurable set: a subset of coherent atom ids plus optionally the point.
struct MeasurableSet {
  std::vector<int> atom_ids;
  bool include_pt = false;
};

// Assembles the atlas.  The families and split must share K0 (checked), the
// quadratures must be nonempty, and their nodes are consumed in ascending
// order.  In exact-mean mode the angle average collapses each node to one
// atom with a diagonal density whose ladder entries are x^k / c_k; in
// finite-grid mode each (node, grid point) pair carries the rank-one
// coherent projector scaled by the truncated normalization N_K(x)^2.
PovmAtlas build_povm_atlas(const ModelParams& params, const SubspaceSplit& split,
                           const CoherentFamily& fam_j, const CoherentFamily& fam_s,
                           const QuadratureRule& quad_j, const QuadratureRule& quad_s,
                           YMode y_mode, int y_points = 0);

// M(B) = sum_{id in B} weight * density + [include_pt] * P3, summed in
// ascending id order.  Ids must be valid, unique and must not address the
// point atom.
Matrix povm_of_set(const PovmAtlas& atlas, const MeasurableSet& set);

MeasurableSet everything(const PovmAtlas& atlas);

// Density of one atom (the point atom is the last id).
const Matrix& density_at(const PovmAtlas& atlas, int atom_id);

struct CompletenessReport {
  double interior_defect = 0.0;  // ||M(Omega) - I|| on the interior subspace
  double total_defect = 0.0;     // same on the full truncated space
};

// Operator-norm defects of M(Omega) against the identity.  The interior
// defect isolates implementation error from discretization error: moment
// matching pins the first 2Q ladder levels per component, the rest decays
// only as the quadrature order grows.
CompletenessReport completeness_check(const PovmAtlas& atlas);

// Interior subspace projector (diagonal in dressed coordinates).
Matrix interior_projector(const PovmAtlas& atlas);

}  // namespace qjc

#endif  // QJC_POVM_HPP_
