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

#include "qjc/multiprec.hpp"

#include <cmath>
#include <cstdlib>

namespace qjc::mp {

unsigned precision_bits() {
  unsigned bits = 256;
  if (const char* env = std::getenv("QJC_PRECISION_BITS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) bits = static_cast<unsigned>(v);
  }
  return bits < 128 ? 128 : bits;
}

namespace {
unsigned bits_to_digits10(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30103)) + 2;
}
}  // namespace

ScopedPrecision::ScopedPrecision(unsigned bits)
    : saved_digits10_(Real::thread_default_precision()) {
  Real::thread_default_precision(bits_to_digits10(bits));
}

ScopedPrecision::~ScopedPrecision() {
  Real::thread_default_precision(saved_digits10_);
}

}  // namespace qjc::mp
