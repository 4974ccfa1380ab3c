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

#ifndef QJC_GRAPH_HPP_
#define QJC_GRAPH_HPP_

#include <cstdint>
#include <vector>

#include "qjc/operator_space.hpp"
#include "qjc/povm.hpp"

namespace qjc {

// Operator graphs generated by a POVM atlas: the span of the measure values
// M(B) over a family of sets, and the Knill-Laflamme compression test
// dim(P V P) = 1 that certifies a projector as a quantum anticlique, i.e.
// its range as a zero-error code for any channel with graph V.

enum class FamilyKind { atoms, dyadic, random_unions };

struct SetFamily {
  FamilyKind kind = FamilyKind::atoms;
  std::vector<MeasurableSet> sets;
  std::uint64_t seed = 0;
};

// atoms:          every singleton, the point alone, and everything.
// dyadic:         dyadic index intervals down to singletons, the point
//                 alone, and everything.
// random_unions:  every singleton, everything, and n_random seeded unions
//                 (each atom kept with probability 1/2, point included at
//                 random).  All kinds cover the whole atom set.
SetFamily make_set_family(const PovmAtlas& atlas, FamilyKind kind,
                          std::uint64_t seed = 0, int n_random = 32);

// HS-orthonormalized span of {M(B) : B in family}.
OperatorSubspace graph_from_atlas(const PovmAtlas& atlas, const SetFamily& family,
                                  double rank_tol = 1e-9);

struct GraphAxiomReport {
  double adjoint_defect = 0.0;             // max residual of basis adjoints
  double identity_distance_full = 0.0;     // relative HS distance of I to V
  double identity_distance_interior = 0.0; // same after interior compression
  bool adjoint_ok = false;
  bool identity_ok = false;                // interior distance within tol
};

// Checks closure under adjoints and that the identity lies in the span.
// On the full truncated space the identity defect equals the completeness
// defect, so the asserted form is the interior one.
GraphAxiomReport verify_graph_axioms(const OperatorSubspace& v,
                                     const Matrix& interior_proj, double tol);

// HS-orthonormalized span of {P A P : A in basis(V)}.  P must be an
// orthogonal projector of rank >= 1.
OperatorSubspace compress(const Matrix& p, const OperatorSubspace& v,
                          double rank_tol = 1e-9);

struct KlResult {
  int dim = 0;
  bool is_anticlique = false;
  double proportionality_defect = 0.0;  // ||A - lambda P|| for the fitted lambda
};

// dim(P V P) with the quantitative rank-one test: the single compression
// basis element must match lambda P for lambda = <P,A>/<P,P>.
KlResult kl_check(const Matrix& p, const OperatorSubspace& v, double tol = 1e-10);

}  // namespace qjc

#endif  // QJC_GRAPH_HPP_
