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

#ifndef QJC_SERIALIZE_HPP_
#define QJC_SERIALIZE_HPP_

#include <string>

#include <json.hpp>

#include "qjc/channels.hpp"
#include "qjc/operator_space.hpp"
#include "qjc/povm.hpp"

namespace qjc {

using Json = nlohmann::ordered_json;

// Operators are stored dense, row-major, as a flat array of alternating
// real/imaginary parts.  Doubles print in shortest round-trip form, so a
// load reproduces every entry exactly.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json atlas_to_json(const PovmAtlas& atlas);
// Rebuilds a usable atlas; square roots and spectral factors are recomputed
// from the stored densities (descending-eigenvalue order, relative cutoff
// 1e-12), so they are equivalent but not bit-identical to the built ones.
PovmAtlas atlas_from_json(const Json& j);

Json channel_to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const Json& j);

Json graph_to_json(const OperatorSubspace& s);
OperatorSubspace graph_from_json(const Json& j);

// Serialized with two-space indentation and a trailing newline; writes are
// staged through a temporary file and renamed into place.
std::string to_stable_string(const Json& j);
void write_json_atomic(const std::string& path, const Json& j);
Json read_json(const std::string& path);

}  // namespace qjc

#endif  // QJC_SERIALIZE_HPP_
