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

#include "qjc/graph.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace qjc {

namespace {

void append_dyadic_intervals(int lo, int hi, std::vector<MeasurableSet>* sets) {
  if (hi - lo < 1) return;
  MeasurableSet s;
  for (int i = lo; i < hi; ++i) s.atom_ids.push_back(i);
  sets->push_back(std::move(s));
  if (hi - lo >= 2) {
    const int mid = lo + (hi - lo) / 2;
    append_dyadic_intervals(lo, mid, sets);
    append_dyadic_intervals(mid, hi, sets);
  }
}

}  // namespace

SetFamily make_set_family(const PovmAtlas& atlas, FamilyKind kind,
                          std::uint64_t seed, int n_random) {
  const int nc = atlas.coherent_atom_count();
  if (nc < 1) throw std::invalid_argument("make_set_family: atlas has no coherent atoms");
  SetFamily family;
  family.kind = kind;
  family.seed = seed;
  MeasurableSet omega = everything(atlas);
  MeasurableSet pt_only;
  pt_only.include_pt = true;
  switch (kind) {
    case FamilyKind::atoms: {
      for (int i = 0; i < nc; ++i) {
        MeasurableSet s;
        s.atom_ids.push_back(i);
        family.sets.push_back(std::move(s));
      }
      family.sets.push_back(pt_only);
      family.sets.push_back(omega);
      break;
    }
    case FamilyKind::dyadic: {
      append_dyadic_intervals(0, nc, &family.sets);
      family.sets.push_back(pt_only);
      family.sets.push_back(omega);
      break;
    }
    case FamilyKind::random_unions: {
      for (int i = 0; i < nc; ++i) {
        MeasurableSet s;
        s.atom_ids.push_back(i);
        family.sets.push_back(std::move(s));
      }
      family.sets.push_back(omega);
      std::mt19937_64 rng(seed);
      for (int r = 0; r < n_random; ++r) {
        MeasurableSet s;
        for (int i = 0; i < nc; ++i) {
          if (rng() & 1u) s.atom_ids.push_back(i);
        }
        s.include_pt = (rng() & 1u) != 0;
        family.sets.push_back(std::move(s));
      }
      break;
    }
  }
  return family;
}

OperatorSubspace graph_from_atlas(const PovmAtlas& atlas, const SetFamily& family,
                                  double rank_tol) {
  if (family.sets.empty()) throw std::invalid_argument("graph_from_atlas: empty family");
  std::vector<Matrix> gens;
  gens.reserve(family.sets.size());
  for (const auto& s : family.sets) gens.push_back(povm_of_set(atlas, s));
  return orthonormalize(gens, rank_tol);
}

GraphAxiomReport verify_graph_axioms(const OperatorSubspace& v,
                                     const Matrix& interior_proj, double tol) {
  GraphAxiomReport report;
  for (const auto& b : v.basis) {
    const Matrix adj = b.adjoint();
    report.adjoint_defect =
        std::max(report.adjoint_defect, (adj - project_onto(v, adj)).norm());
  }
  const Matrix id = Matrix::Identity(v.ambient_dim, v.ambient_dim);
  report.identity_distance_full = (id - project_onto(v, id)).norm() / id.norm();
  const OperatorSubspace vi = compress(interior_proj, v, v.rank_tol);
  if (vi.dim() == 0) {
    report.identity_distance_interior = 1.0;
  } else {
    report.identity_distance_interior =
        (interior_proj - project_onto(vi, interior_proj)).norm() / interior_proj.norm();
  }
  report.adjoint_ok = report.adjoint_defect <= tol;
  report.identity_ok = report.identity_distance_interior <= tol;
  return report;
}

OperatorSubspace compress(const Matrix& p, const OperatorSubspace& v,
                          double rank_tol) {
  if (p.rows() != v.ambient_dim || p.cols() != v.ambient_dim) {
    throw std::invalid_argument("compress: dimension mismatch");
  }
  if (!is_hermitian(p, 1e-10) || (p * p - p).norm() > 1e-10 * std::max(1.0, p.norm())) {
    throw std::invalid_argument("compress: not an orthogonal projector");
  }
  if (std::abs(p.trace()) < 0.5) {
    throw std::invalid_argument("compress: projector has rank zero");
  }
  std::vector<Matrix> gens;
  gens.reserve(v.basis.size());
  for (const auto& b : v.basis) gens.push_back(p * b * p);
  return orthonormalize(gens, rank_tol);
}

KlResult kl_check(const Matrix& p, const OperatorSubspace& v, double tol) {
  KlResult result;
  const OperatorSubspace c = compress(p, v, v.rank_tol);
  result.dim = c.dim();
  if (result.dim != 1) {
    result.is_anticlique = false;
    result.proportionality_defect = std::numeric_limits<double>::infinity();
    return result;
  }
  const Matrix& a = c.basis.front();
  const Complex lambda = hs_inner(p, a) / hs_inner(p, p);
  result.proportionality_defect = (a - lambda * p).norm();
  result.is_anticlique = result.proportionality_defect <= tol;
  return result;
}

}  // namespace qjc
