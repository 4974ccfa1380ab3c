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

#include "qjc/povm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qjc/operator_space.hpp"

namespace qjc {

namespace {

// one diagonal atom per node: the exact angle mean of the coherent projector,
// scaled by N_K(x)^2 so the quadrature weights resolve the identity levelwise
PovmAtom exact_mean_atom(const CoherentFamily& fam, PovmComponent comp, double x,
                         double w, int depth, int dim) {
  PovmAtom atom;
  atom.component = comp;
  atom.x = x;
  atom.weight = w;
  atom.density = Matrix::Zero(dim, dim);
  atom.sqrt_density = Matrix::Zero(dim, dim);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k <= depth; ++k) {
    if (k > 0) {
      term *= x / fam.eps[k];
      sum += term;
    }
    const int idx = fam.dressed_index(k);
    atom.density(idx, idx) = term;
    atom.sqrt_density(idx, idx) = std::sqrt(term);
    Vector f = Vector::Zero(dim);
    f(idx) = std::sqrt(term);
    atom.factors.push_back(std::move(f));
  }
  atom.tail_ratio = term * x / fam.eps[depth + 1] / sum;
  return atom;
}

PovmAtom finite_grid_atom(const CoherentFamily& fam, PovmComponent comp, double x,
                          double y, double w, int depth, int dim) {
  PovmAtom atom;
  atom.component = comp;
  atom.x = x;
  atom.y = y;
  atom.weight = w;
  double norm2 = 0.0;
  Vector v = detail::coherent_vector_unchecked(fam, x, y, depth, &atom.tail_ratio, &norm2);
  atom.density = norm2 * (v * v.adjoint());
  atom.sqrt_density = std::sqrt(norm2) * (v * v.adjoint());
  atom.factors.push_back(std::sqrt(norm2) * v);
  return atom;
}

}  // namespace

PovmAtlas build_povm_atlas(const ModelParams& params, const SubspaceSplit& split,
                           const CoherentFamily& fam_j, const CoherentFamily& fam_s,
                           const QuadratureRule& quad_j, const QuadratureRule& quad_s,
                           YMode y_mode, int y_points) {
  params.validate();
  if (fam_s.k0 != split.K0) {
    throw std::invalid_argument("build_povm_atlas: split and S family disagree on K0");
  }
  if (fam_j.n_max != params.n_max || fam_s.n_max != params.n_max ||
      split.n_max != params.n_max) {
    throw std::invalid_argument("build_povm_atlas: inconsistent truncation");
  }
  if (quad_j.order < 1 || quad_s.order < 1) {
    throw std::invalid_argument("build_povm_atlas: empty quadrature");
  }
  if (quad_j.order != quad_s.order) {
    throw std::invalid_argument("build_povm_atlas: component quadrature orders differ");
  }

  PovmAtlas atlas;
  atlas.params = params;
  atlas.K0 = split.K0;
  atlas.Q = quad_j.order;
  atlas.y_mode = y_mode;
  atlas.dressed_dim = dressed_dim(params.n_max);
  atlas.depth_J = std::min(fam_j.depth, fam_j.max_materializable_depth());
  atlas.depth_S = std::min(fam_s.depth, fam_s.max_materializable_depth());
  atlas.quad_J = quad_j;
  atlas.quad_S = quad_s;

  std::vector<YGrid> grids(2);
  if (y_mode == YMode::finite_grid) {
    if (y_points < 2) {
      throw std::invalid_argument("build_povm_atlas: finite grid needs >= 2 y points");
    }
    atlas.y_points = y_points;
    std::vector<double> ej(fam_j.energies.begin(),
                           fam_j.energies.begin() + atlas.depth_J + 1);
    std::vector<double> es(fam_s.energies.begin(),
                           fam_s.energies.begin() + atlas.depth_S + 1);
    grids[0] = uniform_y_grid(y_points, default_y_span(ej));
    grids[1] = uniform_y_grid(y_points, default_y_span(es));
  }

  const auto add_component = [&](const CoherentFamily& fam, PovmComponent comp,
                                 const QuadratureRule& quad, int depth,
                                 const YGrid& grid) {
    for (int j = 0; j < quad.order; ++j) {
      const double x = quad.nodes(j);
      const double w = quad.weights(j);
      if (y_mode == YMode::exact_mean) {
        atlas.atoms.push_back(exact_mean_atom(fam, comp, x, w, depth, atlas.dressed_dim));
      } else {
        for (double y : grid.points) {
          atlas.atoms.push_back(finite_grid_atom(
              fam, comp, x, y, w / static_cast<double>(grid.points.size()), depth,
              atlas.dressed_dim));
        }
      }
    }
  };
  add_component(fam_j, PovmComponent::one, quad_j, atlas.depth_J, grids[0]);
  add_component(fam_s, PovmComponent::two, quad_s, atlas.depth_S, grids[1]);

  PovmAtom pt;
  pt.component = PovmComponent::point;
  pt.weight = 1.0;
  pt.density = split.P3;
  pt.sqrt_density = split.P3;  // projector
  pt.factors.reserve(split.K0);
  {
    Vector f = Vector::Zero(atlas.dressed_dim);
    f(dressed_index_ground()) = 1.0;
    pt.factors.push_back(f);
    for (int n = 1; n < split.K0; ++n) {
      Vector g = Vector::Zero(atlas.dressed_dim);
      g(dressed_index_minus(n, params.n_max)) = 1.0;
      pt.factors.push_back(g);
    }
  }
  atlas.atoms.push_back(std::move(pt));

  const int levels_j = std::min(2 * atlas.Q, atlas.depth_J + 1);
  for (int k = 0; k < levels_j; ++k) {
    atlas.interior_indices.push_back(fam_j.dressed_index(k));
  }
  const int levels_s = std::min(2 * atlas.Q, atlas.depth_S + 1);
  for (int k = 0; k < levels_s; ++k) {
    atlas.interior_indices.push_back(fam_s.dressed_index(k));
  }
  atlas.interior_indices.push_back(dressed_index_ground());
  for (int n = 1; n < split.K0; ++n) {
    atlas.interior_indices.push_back(dressed_index_minus(n, params.n_max));
  }
  std::sort(atlas.interior_indices.begin(), atlas.interior_indices.end());
  return atlas;
}

Matrix povm_of_set(const PovmAtlas& atlas, const MeasurableSet& set) {
  const int nc = atlas.coherent_atom_count();
  std::vector<int> ids = set.atom_ids;
  std::sort(ids.begin(), ids.end());
  for (size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] < 0 || ids[i] >= nc) {
      throw std::invalid_argument("povm_of_set: atom id out of range");
    }
    if (i > 0 && ids[i] == ids[i - 1]) {
      throw std::invalid_argument("povm_of_set: duplicate atom id");
    }
  }
  Matrix m = Matrix::Zero(atlas.dressed_dim, atlas.dressed_dim);
  for (int id : ids) m += atlas.atoms[id].weight * atlas.atoms[id].density;
  if (set.include_pt) {
    m += atlas.point_atom().weight * atlas.point_atom().density;
  }
  return m;
}

MeasurableSet everything(const PovmAtlas& atlas) {
  MeasurableSet all;
  all.atom_ids.resize(atlas.coherent_atom_count());
  for (int i = 0; i < atlas.coherent_atom_count(); ++i) all.atom_ids[i] = i;
  all.include_pt = true;
  return all;
}

const Matrix& density_at(const PovmAtlas& atlas, int atom_id) {
  if (atom_id < 0 || atom_id >= static_cast<int>(atlas.atoms.size())) {
    throw std::invalid_argument("density_at: atom id out of range");
  }
  return atlas.atoms[atom_id].density;
}

Matrix interior_projector(const PovmAtlas& atlas) {
  Matrix p = Matrix::Zero(atlas.dressed_dim, atlas.dressed_dim);
  for (int idx : atlas.interior_indices) p(idx, idx) = 1.0;
  return p;
}

CompletenessReport completeness_check(const PovmAtlas& atlas) {
  const Matrix m = povm_of_set(atlas, everything(atlas));
  Matrix r = m - Matrix::Identity(atlas.dressed_dim, atlas.dressed_dim);
  r = (r + r.adjoint()) / 2.0;
  CompletenessReport report;
  report.total_defect = hermitian_operator_norm(r);
  const auto& idx = atlas.interior_indices;
  Matrix sub(idx.size(), idx.size());
  for (size_t a = 0; a < idx.size(); ++a) {
    for (size_t b = 0; b < idx.size(); ++b) sub(a, b) = r(idx[a], idx[b]);
  }
  report.interior_defect = hermitian_operator_norm(sub);
  return report;
}

}  // namespace qjc
