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

#include "qjc/quadrature.hpp"

namespace qjc {

QuadratureRule moment_quadrature(const std::vector<mp::Real>& c, int q) {
  if (q < 1) throw std::invalid_argument("moment_quadrature: order must be >= 1");
  if (static_cast<int>(c.size()) < 2 * q) {
    throw std::invalid_argument("moment_quadrature: need at least 2*order moments");
  }
  mp::ScopedPrecision guard(mp::precision_bits());
  std::vector<mp::Real> m(c.begin(), c.begin() + 2 * q);
  for (size_t k = 0; k < m.size(); ++k) {
    if (!(m[k] > 0)) {
      throw std::invalid_argument("moment_quadrature: moments must be positive");
    }
  }

  const auto rec = detail::recurrence_from_moments(m, q);
  std::vector<mp::Real> nodes, weights;
  detail::gauss_rule_from_recurrence(rec, m[0], &nodes, &weights);

  QuadratureRule rule;
  rule.order = q;
  rule.nodes.resize(q);
  rule.weights.resize(q);
  for (int i = 0; i < q; ++i) {
    rule.nodes(i) = nodes[i].convert_to<double>();
    rule.weights(i) = weights[i].convert_to<double>();
    if (!(rule.weights(i) > 0.0)) {
      throw std::runtime_error("moment_quadrature: nonpositive weight");
    }
    if (i > 0 && !(rule.nodes(i) > rule.nodes(i - 1))) {
      throw std::runtime_error("moment_quadrature: nodes not strictly increasing");
    }
  }

  // reproduction error of the delivered double-precision rule
  mp::Real worst(0);
  for (int k = 0; k < 2 * q; ++k) {
    mp::Real s(0);
    for (int i = 0; i < q; ++i) {
      mp::Real xi(rule.nodes(i));
      mp::Real p(1);
      for (int e = 0; e < k; ++e) p *= xi;
      s += mp::Real(rule.weights(i)) * p;
    }
    mp::Real rel = abs(s - m[k]) / m[k];
    if (rel > worst) worst = rel;
  }
  rule.moment_error = worst.convert_to<double>();
  return rule;
}

QuadratureRule moment_quadrature(const std::vector<double>& c, int q) {
  mp::ScopedPrecision guard(mp::precision_bits());
  std::vector<mp::Real> m;
  m.reserve(c.size());
  for (double v : c) m.emplace_back(v);
  return moment_quadrature(m, q);
}

}  // namespace qjc
