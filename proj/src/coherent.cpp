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

#include "qjc/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace qjc {

std::vector<double> shifted_sequence(const std::vector<double>& seq, double scale) {
  if (seq.empty()) throw std::invalid_argument("shifted_sequence: empty sequence");
  if (!(scale > 0.0)) throw std::invalid_argument("shifted_sequence: scale must be > 0");
  std::vector<double> eps(seq.size());
  for (size_t k = 0; k < seq.size(); ++k) {
    eps[k] = (seq[k] - seq[0]) / scale;
    if (k > 0 && !(eps[k] > eps[k - 1])) {
      throw std::invalid_argument("shifted_sequence: input not strictly increasing");
    }
  }
  return eps;
}

std::vector<mp::Real> weights_c(const std::vector<double>& eps, int K) {
  if (K < 0) throw std::invalid_argument("weights_c: K must be >= 0");
  if (static_cast<size_t>(K) >= eps.size()) {
    throw std::invalid_argument("weights_c: not enough shifted energies");
  }
  mp::ScopedPrecision guard(mp::precision_bits());
  std::vector<mp::Real> c;
  c.reserve(K + 1);
  c.emplace_back(1);
  for (int k = 1; k <= K; ++k) {
    if (!(eps[k] > 0.0)) {
      throw std::invalid_argument("weights_c: shifted energies must be positive");
    }
    c.push_back(c.back() * mp::Real(eps[k]));
  }
  return c;
}

CoherentFamily build_family(CoherentBranch branch, const ModelParams& params,
                            int K0, int depth) {
  params.validate();
  if (depth < 1) throw std::invalid_argument("build_family: depth must be >= 1");
  if (K0 < 1) throw std::invalid_argument("build_family: K0 must be >= 1");
  CoherentFamily fam;
  fam.branch = branch;
  fam.k0 = K0;
  fam.n_max = params.n_max;
  fam.depth = depth;
  fam.energies.resize(depth + 2);
  for (int k = 0; k <= depth + 1; ++k) {
    // closed-form spectrum, valid past the Fock truncation
    fam.energies[k] = (branch == CoherentBranch::J)
                          ? eigenenergy(k + 1, Branch::plus, params)
                          : eigenenergy(k + K0, Branch::minus, params);
  }
  fam.eps = shifted_sequence(fam.energies, params.omega_f);
  fam.c = weights_c(fam.eps, depth + 1);
  fam.c_d.resize(fam.c.size());
  for (size_t k = 0; k < fam.c.size(); ++k) fam.c_d[k] = fam.c[k].convert_to<double>();
  return fam;
}

namespace {

// terms t_k = x^k / c_k for k = 0..K, via the stable ratio t_k = t_{k-1} x / eps_k;
// returns the partial sum and fills terms.
double series_terms(const CoherentFamily& fam, double x, int K,
                    std::vector<double>* terms) {
  terms->assign(K + 1, 0.0);
  double t = 1.0;
  (*terms)[0] = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= K; ++k) {
    t *= x / fam.eps[k];
    (*terms)[k] = t;
    sum += t;
  }
  return sum;
}

}  // namespace

double normalization(double x, const CoherentFamily& fam, int K) {
  if (!(x >= 0.0)) throw std::invalid_argument("normalization: x must be >= 0");
  if (K < 0 || K > fam.depth) {
    throw std::invalid_argument("normalization: K exceeds the family depth");
  }
  std::vector<double> terms;
  const double sum = series_terms(fam, x, K, &terms);
  const double tail = terms[K] * x / fam.eps[K + 1];
  if (!(tail <= 1e-14 * sum)) {
    throw std::runtime_error("normalization: series depth insufficient for this x");
  }
  return std::sqrt(sum);
}

namespace detail {

Vector coherent_vector_unchecked(const CoherentFamily& fam, double x, double y,
                                 int K, double* tail_ratio, double* norm2) {
  const int dim = dressed_dim(fam.n_max);
  std::vector<double> terms;
  const double sum = series_terms(fam, x, K, &terms);
  if (tail_ratio) *tail_ratio = terms[K] * x / fam.eps[K + 1] / sum;
  if (norm2) *norm2 = sum;
  Vector v = Vector::Zero(dim);
  for (int k = 0; k <= K; ++k) {
    const double mod = std::sqrt(terms[k] / sum);
    const double phase = -fam.energies[k] * y;
    v(fam.dressed_index(k)) = Complex(mod * std::cos(phase), mod * std::sin(phase));
  }
  return v;
}

}  // namespace detail

Vector coherent_vector(const CoherentFamily& fam, double x, double y, int K) {
  if (!(x >= 0.0)) throw std::invalid_argument("coherent_vector: x must be >= 0");
  if (K < 0 || K > fam.depth) {
    throw std::invalid_argument("coherent_vector: K exceeds the family depth");
  }
  if (K > fam.max_materializable_depth()) {
    throw std::invalid_argument("coherent_vector: K exceeds the truncation");
  }
  double tail = 0.0;
  Vector v = detail::coherent_vector_unchecked(fam, x, y, K, &tail, nullptr);
  if (!(tail <= 1e-14)) {
    throw std::runtime_error("coherent_vector: series depth insufficient for this x");
  }
  return v;
}

YGrid exact_mean_grid() { return YGrid{YMode::exact_mean, {}}; }

YGrid uniform_y_grid(int points, double span) {
  if (points < 2) throw std::invalid_argument("uniform_y_grid: need at least 2 points");
  if (!(span > 0.0)) throw std::invalid_argument("uniform_y_grid: span must be > 0");
  YGrid g;
  g.mode = YMode::finite_grid;
  g.points.resize(points);
  for (int m = 0; m < points; ++m) g.points[m] = (m + 0.5) * span / points;
  return g;
}

double default_y_span(const std::vector<double>& energies, double factor) {
  if (energies.size() < 2) {
    throw std::invalid_argument("default_y_span: need at least two energies");
  }
  std::vector<double> sorted = energies;
  std::sort(sorted.begin(), sorted.end());
  double min_gap = 0.0;
  for (size_t i = 1; i < sorted.size(); ++i) {
    const double gap = sorted[i] - sorted[i - 1];
    if (gap > 0.0 && (min_gap == 0.0 || gap < min_gap)) min_gap = gap;
  }
  if (min_gap == 0.0) throw std::invalid_argument("default_y_span: all energies equal");
  return factor / min_gap;
}

Matrix y_average(const RealVector& energies, const Matrix& a0, const YGrid& grid) {
  const Eigen::Index n = a0.rows();
  if (a0.cols() != n || energies.size() != n) {
    throw std::invalid_argument("y_average: dimension mismatch");
  }
  if (grid.mode == YMode::exact_mean) {
    Matrix out = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
      for (Eigen::Index l = 0; l < n; ++l) {
        if (energies(k) == energies(l)) out(k, l) = a0(k, l);
      }
    }
    return out;
  }
  if (grid.points.size() < 2) {
    throw std::invalid_argument("y_average: finite grid needs at least 2 points");
  }
  Matrix mean_phase = Matrix::Zero(n, n);
  for (double y : grid.points) {
    for (Eigen::Index k = 0; k < n; ++k) {
      for (Eigen::Index l = 0; l < n; ++l) {
        const double arg = -(energies(k) - energies(l)) * y;
        mean_phase(k, l) += Complex(std::cos(arg), std::sin(arg));
      }
    }
  }
  mean_phase /= static_cast<double>(grid.points.size());
  return a0.cwiseProduct(mean_phase);
}

}  // namespace qjc
