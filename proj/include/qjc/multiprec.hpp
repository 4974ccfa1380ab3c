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

#ifndef QJC_MULTIPREC_HPP_
#define QJC_MULTIPREC_HPP_

#include <boost/multiprecision/mpfr.hpp>

namespace qjc::mp {

// Variable-precision real used for moment products and the quadrature
// recurrence, whose conditioning grows factorially with the order.
using Real = boost::multiprecision::mpfr_float;

// Working precision in bits: QJC_PRECISION_BITS from the environment when
// set, otherwise 256.  Clamped below at 128.
unsigned precision_bits();

// RAII guard setting the thread default precision for Real.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned bits);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_digits10_;
};

}  // namespace qjc::mp

#endif  // QJC_MULTIPREC_HPP_
