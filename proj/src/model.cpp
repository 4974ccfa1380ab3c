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

#include "qjc/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qjc {

void ModelParams::validate() const {
  if (!(omega_f > 0.0)) throw std::invalid_argument("ModelParams: omega_f must be > 0");
  if (!(omega_s > 0.0)) throw std::invalid_argument("ModelParams: omega_s must be > 0");
  if (!(kappa >= 0.0)) throw std::invalid_argument("ModelParams: kappa must be >= 0");
  if (n_max < 4) throw std::invalid_argument("ModelParams: n_max must be >= 4");
}

int bare_flat_index(const BareBasisIndex& idx, int n_max) {
  if (idx.fock_level < 0 || idx.fock_level > n_max) {
    throw std::invalid_argument("bare_flat_index: Fock level out of range");
  }
  return 2 * idx.fock_level + (idx.qubit == QubitLevel::e ? 1 : 0);
}

double mixing_angle(int n, const ModelParams& params) {
  params.validate();
  if (n < 1) throw std::invalid_argument("mixing_angle: n must be >= 1");
  const double d = params.delta();
  if (params.kappa == 0.0 && d == 0.0) {
    throw std::invalid_argument("mixing_angle: degenerate block, angle undefined");
  }
  return std::atan2(params.kappa * std::sqrt(static_cast<double>(n)), d);
}

double eigenenergy(int n, Branch branch, const ModelParams& params) {
  params.validate();
  if (branch == Branch::ground) {
    if (n != 0) throw std::invalid_argument("eigenenergy: ground branch requires n = 0");
    return (params.omega_f + params.delta()) / 2.0;
  }
  if (n < 1) throw std::invalid_argument("eigenenergy: +/- branches require n >= 1");
  const double d = params.delta();
  const double rabi = std::sqrt(d * d + params.kappa * params.kappa * n);
  const double sign = (branch == Branch::plus) ? 1.0 : -1.0;
  return params.omega_f * (n - 0.5) + sign * rabi / 2.0;
}

DressedVector dressed_state(int n, Branch branch, const ModelParams& params) {
  params.validate();
  const int dim = bare_dim(params.n_max);
  DressedVector v;
  v.n = n;
  v.branch = branch;
  v.amplitudes = Vector::Zero(dim);
  if (branch == Branch::ground) {
    if (n != 0) throw std::invalid_argument("dressed_state: ground branch requires n = 0");
    v.amplitudes(bare_flat_index({0, QubitLevel::g}, params.n_max)) = 1.0;
    return v;
  }
  if (n < 1) throw std::invalid_argument("dressed_state: +/- branches require n >= 1");
  if (n > params.n_max) {
    throw std::invalid_argument("dressed_state: n exceeds the truncation");
  }
  const double half = mixing_angle(n, params) / 2.0;
  const int ie = bare_flat_index({n - 1, QubitLevel::e}, params.n_max);
  const int ig = bare_flat_index({n, QubitLevel::g}, params.n_max);
  if (branch == Branch::plus) {
    v.amplitudes(ie) = std::sin(half);
    v.amplitudes(ig) = std::cos(half);
  } else {
    v.amplitudes(ie) = std::cos(half);
    v.amplitudes(ig) = -std::sin(half);
  }
  return v;
}

Matrix hamiltonian_matrix(const ModelParams& params) {
  params.validate();
  const int dim = bare_dim(params.n_max);
  Matrix h = Matrix::Zero(dim, dim);
  for (int n = 0; n <= params.n_max; ++n) {
    const int ig = bare_flat_index({n, QubitLevel::g}, params.n_max);
    const int ie = bare_flat_index({n, QubitLevel::e}, params.n_max);
    h(ig, ig) = params.omega_f * n - params.omega_s / 2.0;
    h(ie, ie) = params.omega_f * n + params.omega_s / 2.0;
  }
  for (int n = 1; n <= params.n_max; ++n) {
    const int ie = bare_flat_index({n - 1, QubitLevel::e}, params.n_max);
    const int ig = bare_flat_index({n, QubitLevel::g}, params.n_max);
    const double g = params.kappa * std::sqrt(static_cast<double>(n)) / 2.0;
    h(ie, ig) = g;
    h(ig, ie) = g;
  }
  return h;
}

namespace {

// Inequality deciding where the minus-branch energies become increasing.
bool spacing_inequality_holds(long m, const ModelParams& params) {
  const double d = params.delta();
  const double k2 = params.kappa * params.kappa;
  const double lhs =
      1.0 / (std::sqrt(d * d + k2 * (m + 1)) + std::sqrt(d * d + k2 * m));
  return lhs < 2.0 * params.omega_f / k2;
}

}  // namespace

std::pair<int, int> compute_M0_K0(const ModelParams& params, long scan_limit) {
  params.validate();
  if (params.kappa == 0.0) return {1, 3};
  long hi = 1;
  while (!spacing_inequality_holds(hi, params)) {
    hi *= 2;
    if (hi > scan_limit) {
      throw std::runtime_error("compute_M0_K0: scan exceeded the configured bound");
    }
  }
  long lo = hi / 2;  // predicate is false at lo (or lo == 0), true at hi
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    if (mid >= 1 && spacing_inequality_holds(mid, params)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const int m0 = static_cast<int>(hi);
  return {m0, std::max(3, m0)};
}

std::pair<RealVector, RealVector> energy_sequences(const ModelParams& params, int K0) {
  params.validate();
  if (K0 < 1 || K0 > params.n_max) {
    throw std::invalid_argument("energy_sequences: K0 out of range");
  }
  RealVector j(params.n_max);
  for (int k = 0; k < params.n_max; ++k) j(k) = eigenenergy(k + 1, Branch::plus, params);
  for (int k = 1; k < params.n_max; ++k) {
    if (!(j(k) > j(k - 1))) {
      throw std::runtime_error("energy_sequences: J is not strictly increasing at k=" +
                               std::to_string(k));
    }
  }
  RealVector s(params.n_max - K0 + 1);
  for (int n = K0; n <= params.n_max; ++n) {
    s(n - K0) = eigenenergy(n, Branch::minus, params);
  }
  for (int i = 1; i < s.size(); ++i) {
    if (!(s(i) > s(i - 1))) {
      throw std::runtime_error("energy_sequences: S is not strictly increasing at n=" +
                               std::to_string(K0 + i) + " (K0 undersized?)");
    }
  }
  return {j, s};
}

SpectrumTable build_spectrum(const ModelParams& params) {
  params.validate();
  SpectrumTable t;
  t.E0g = eigenenergy(0, Branch::ground, params);
  t.E_plus.resize(params.n_max);
  t.E_minus.resize(params.n_max);
  for (int n = 1; n <= params.n_max; ++n) {
    t.E_plus(n - 1) = eigenenergy(n, Branch::plus, params);
    t.E_minus(n - 1) = eigenenergy(n, Branch::minus, params);
  }
  auto [m0, k0] = compute_M0_K0(params);
  t.M0 = m0;
  t.K0 = k0;
  t.s_first = k0;
  std::tie(t.J, t.S) = energy_sequences(params, k0);
  t.ground_offset = t.E0g - (-params.omega_s / 2.0);
  return t;
}

SubspaceSplit subspace_split(const ModelParams& params, int K0) {
  params.validate();
  if (K0 < 3) throw std::invalid_argument("subspace_split: K0 must be >= 3");
  if (params.n_max <= K0 + 4) {
    throw std::invalid_argument("subspace_split: truncation too small for K0");
  }
  const int dim = dressed_dim(params.n_max);
  SubspaceSplit split;
  split.K0 = K0;
  split.n_max = params.n_max;
  split.P1 = Matrix::Zero(dim, dim);
  split.P2 = Matrix::Zero(dim, dim);
  split.P3 = Matrix::Zero(dim, dim);
  split.P3(dressed_index_ground(), dressed_index_ground()) = 1.0;
  for (int n = 1; n <= params.n_max; ++n) {
    split.P1(dressed_index_plus(n), dressed_index_plus(n)) = 1.0;
    const int im = dressed_index_minus(n, params.n_max);
    if (n < K0) {
      split.P3(im, im) = 1.0;
    } else {
      split.P2(im, im) = 1.0;
    }
  }
  split.dims = {params.n_max, params.n_max - K0 + 1, K0};
  return split;
}

DressedFrame dressed_frame(const ModelParams& params) {
  params.validate();
  DressedFrame frame;
  frame.n_max = params.n_max;
  frame.isometry = Matrix::Zero(bare_dim(params.n_max), dressed_dim(params.n_max));
  frame.isometry.col(dressed_index_ground()) =
      dressed_state(0, Branch::ground, params).amplitudes;
  for (int n = 1; n <= params.n_max; ++n) {
    frame.isometry.col(dressed_index_plus(n)) =
        dressed_state(n, Branch::plus, params).amplitudes;
    frame.isometry.col(dressed_index_minus(n, params.n_max)) =
        dressed_state(n, Branch::minus, params).amplitudes;
  }
  return frame;
}

RealVector dressed_energies(const ModelParams& params) {
  params.validate();
  RealVector e(dressed_dim(params.n_max));
  e(dressed_index_ground()) = eigenenergy(0, Branch::ground, params);
  for (int n = 1; n <= params.n_max; ++n) {
    e(dressed_index_plus(n)) = eigenenergy(n, Branch::plus, params);
    e(dressed_index_minus(n, params.n_max)) = eigenenergy(n, Branch::minus, params);
  }
  return e;
}

}  // namespace qjc
