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

#include "qjc/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace qjc {

double DiscreteStateFunction::total_trace() const {
  double t = 0.0;
  for (const auto& e : entries) t += e.trace().real();
  return t;
}

namespace {

bool is_exact_identity(const Matrix& x) {
  if (x.rows() != x.cols()) return false;
  return (x - Matrix::Identity(x.rows(), x.cols())).squaredNorm() == 0.0;
}

void check_state(const Matrix& rho, int dim, const char* where) {
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument(std::string(where) + ": dimension mismatch");
  }
  if (!is_hermitian(rho, 1e-10)) {
    throw std::invalid_argument(std::string(where) + ": state not Hermitian");
  }
  if (std::abs(rho.trace().real() - 1.0) > 1e-10 || std::abs(rho.trace().imag()) > 1e-10) {
    throw std::invalid_argument(std::string(where) + ": state trace differs from 1");
  }
  if (!is_psd(rho, 1e-10)) {
    throw std::invalid_argument(std::string(where) + ": state not positive");
  }
}

}  // namespace

Matrix phi_star(const PovmAtlas& atlas, const Matrix& x, const std::vector<Complex>& f) {
  const int dim = atlas.dressed_dim;
  if (x.rows() != dim || x.cols() != dim) {
    throw std::invalid_argument("phi_star: operator dimension mismatch");
  }
  if (f.size() != atlas.atoms.size()) {
    throw std::invalid_argument("phi_star: f must assign one value per atom");
  }
  const bool identity_input = is_exact_identity(x);
  Matrix out = Matrix::Zero(dim, dim);
  for (size_t id = 0; id < atlas.atoms.size(); ++id) {
    if (f[id] == Complex(0.0, 0.0)) continue;
    const PovmAtom& atom = atlas.atoms[id];
    if (identity_input) {
      // sqrt(d) I sqrt(d) = d; shares the summation with povm_of_set
      out += (f[id] * atom.weight) * atom.density;
    } else {
      out += (f[id] * atom.weight) * (atom.sqrt_density * x * atom.sqrt_density);
    }
  }
  return out;
}

DiscreteStateFunction phi_predual(const PovmAtlas& atlas, const Matrix& rho) {
  check_state(rho, atlas.dressed_dim, "phi_predual");
  DiscreteStateFunction f;
  f.entries.reserve(atlas.atoms.size());
  for (const auto& atom : atlas.atoms) {
    f.entries.push_back(atom.weight * (atom.sqrt_density * rho * atom.sqrt_density));
  }
  return f;
}

Matrix psi_hat_star(const PovmAtlas& atlas, const std::vector<Complex>& f) {
  return phi_star(atlas, Matrix::Identity(atlas.dressed_dim, atlas.dressed_dim), f);
}

RealVector psi_hat(const PovmAtlas& atlas, const Matrix& rho) {
  check_state(rho, atlas.dressed_dim, "psi_hat");
  RealVector p(atlas.atoms.size());
  for (size_t id = 0; id < atlas.atoms.size(); ++id) {
    const PovmAtom& atom = atlas.atoms[id];
    p(id) = atom.weight * (rho * atom.density).trace().real();
  }
  return p;
}

KrausChannel kraus_of_psi_hat(const PovmAtlas& atlas) {
  KrausChannel ch;
  ch.in_dim = atlas.dressed_dim;
  ch.out_dim = static_cast<int>(atlas.atoms.size());
  for (int id = 0; id < ch.out_dim; ++id) {
    const PovmAtom& atom = atlas.atoms[id];
    const double root_w = std::sqrt(atom.weight);
    for (const auto& v : atom.factors) {
      Matrix a = Matrix::Zero(ch.out_dim, ch.in_dim);
      a.row(id) = (root_w * v).adjoint();
      ch.kraus.push_back(std::move(a));
    }
  }
  return ch;
}

KrausChannel complementary(const KrausChannel& ch) {
  if (ch.kraus.empty()) throw std::invalid_argument("complementary: empty channel");
  const int env = static_cast<int>(ch.kraus.size());
  KrausChannel comp;
  comp.in_dim = ch.in_dim;
  comp.out_dim = env;
  comp.kraus.reserve(ch.out_dim);
  for (int m = 0; m < ch.out_dim; ++m) {
    Matrix b = Matrix::Zero(env, ch.in_dim);
    for (int k = 0; k < env; ++k) b.row(k) = ch.kraus[k].row(m);
    comp.kraus.push_back(std::move(b));
  }
  return comp;
}

OperatorSubspace graph_of_channel(const KrausChannel& ch, double rank_tol) {
  if (ch.kraus.empty()) throw std::invalid_argument("graph_of_channel: empty channel");
  std::vector<Matrix> products;
  products.reserve(ch.kraus.size() * ch.kraus.size());
  for (const auto& ak : ch.kraus) {
    for (const auto& aj : ch.kraus) {
      products.push_back(ak.adjoint() * aj);
    }
  }
  return orthonormalize(products, rank_tol);
}

Matrix apply_channel(const KrausChannel& ch, const Matrix& rho) {
  if (rho.rows() != ch.in_dim || rho.cols() != ch.in_dim) {
    throw std::invalid_argument("apply_channel: dimension mismatch");
  }
  Matrix out = Matrix::Zero(ch.out_dim, ch.out_dim);
  for (const auto& a : ch.kraus) out += a * rho * a.adjoint();
  return out;
}

Matrix choi_matrix(const KrausChannel& ch) {
  const int n = ch.in_dim;
  const int m = ch.out_dim;
  Matrix choi = Matrix::Zero(n * m, n * m);
  // action on the matrix unit E_ij is sum_k (col_i A_k)(col_j A_k)^*
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Matrix block = Matrix::Zero(m, m);
      for (const auto& a : ch.kraus) {
        block.noalias() += a.col(i) * a.col(j).adjoint();
      }
      choi.block(i * m, j * m, m, m) = block;
      if (j != i) choi.block(j * m, i * m, m, m) = block.adjoint();
    }
  }
  return choi;
}

Matrix choi_matrix_from_action(const std::function<Matrix(const Matrix&)>& action,
                               int in_dim, int out_dim) {
  Matrix choi = Matrix::Zero(in_dim * out_dim, in_dim * out_dim);
  for (int i = 0; i < in_dim; ++i) {
    for (int j = 0; j < in_dim; ++j) {
      Matrix unit = Matrix::Zero(in_dim, in_dim);
      unit(i, j) = 1.0;
      choi.block(i * out_dim, j * out_dim, out_dim, out_dim) = action(unit);
    }
  }
  return choi;
}

CpReport choi_cp_check(const KrausChannel& ch, double cp_tol) {
  CpReport report;
  Matrix choi = choi_matrix(ch);
  choi = (choi + choi.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(choi, Eigen::EigenvaluesOnly);
  report.min_choi_eigenvalue = es.eigenvalues()(0);
  Matrix gram = Matrix::Zero(ch.in_dim, ch.in_dim);
  for (const auto& a : ch.kraus) gram += a.adjoint() * a;
  report.trace_preservation_defect = hermitian_operator_norm(
      gram - Matrix::Identity(ch.in_dim, ch.in_dim));
  report.cp_ok = report.min_choi_eigenvalue >= -cp_tol;
  return report;
}

}  // namespace qjc
