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

#include "qjc/serialize.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace qjc {

Json matrix_to_json(const Matrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json data = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      data.push_back(m(r, c).real());
      data.push_back(m(r, c).imag());
    }
  }
  j["data"] = std::move(data);
  return j;
}

Matrix matrix_from_json(const Json& j) {
  const Eigen::Index rows = j.at("rows").get<Eigen::Index>();
  const Eigen::Index cols = j.at("cols").get<Eigen::Index>();
  const auto& data = j.at("data");
  if (static_cast<Eigen::Index>(data.size()) != 2 * rows * cols) {
    throw std::invalid_argument("matrix_from_json: data length mismatch");
  }
  Matrix m(rows, cols);
  size_t k = 0;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      const double re = data[k++].get<double>();
      const double im = data[k++].get<double>();
      m(r, c) = Complex(re, im);
    }
  }
  return m;
}

namespace {

Json rule_to_json(const QuadratureRule& rule) {
  Json j;
  j["order"] = rule.order;
  j["moment_error"] = rule.moment_error;
  j["nodes"] = Json::array();
  j["weights"] = Json::array();
  for (int i = 0; i < rule.order; ++i) {
    j["nodes"].push_back(rule.nodes(i));
    j["weights"].push_back(rule.weights(i));
  }
  return j;
}

QuadratureRule rule_from_json(const Json& j) {
  QuadratureRule rule;
  rule.order = j.at("order").get<int>();
  rule.moment_error = j.at("moment_error").get<double>();
  rule.nodes.resize(rule.order);
  rule.weights.resize(rule.order);
  for (int i = 0; i < rule.order; ++i) {
    rule.nodes(i) = j.at("nodes")[i].get<double>();
    rule.weights(i) = j.at("weights")[i].get<double>();
  }
  return rule;
}

const char* component_name(PovmComponent c) {
  switch (c) {
    case PovmComponent::one: return "one";
    case PovmComponent::two: return "two";
    case PovmComponent::point: return "pt";
  }
  return "pt";
}

PovmComponent component_from_name(const std::string& s) {
  if (s == "one") return PovmComponent::one;
  if (s == "two") return PovmComponent::two;
  if (s == "pt") return PovmComponent::point;
  throw std::invalid_argument("unknown POVM component: " + s);
}

}  // namespace

Json atlas_to_json(const PovmAtlas& atlas) {
  Json j;
  j["schema"] = "qjc.atlas.v1";
  j["params"] = {{"omega_f", atlas.params.omega_f},
                 {"omega_s", atlas.params.omega_s},
                 {"kappa", atlas.params.kappa},
                 {"n_max", atlas.params.n_max}};
  j["k0"] = atlas.K0;
  j["quad_order"] = atlas.Q;
  j["y_mode"] = atlas.y_mode == YMode::exact_mean ? "exact" : "grid";
  j["y_points"] = atlas.y_points;
  j["depth_J"] = atlas.depth_J;
  j["depth_S"] = atlas.depth_S;
  j["dressed_dim"] = atlas.dressed_dim;
  j["interior_indices"] = atlas.interior_indices;
  j["quad_J"] = rule_to_json(atlas.quad_J);
  j["quad_S"] = rule_to_json(atlas.quad_S);
  Json atoms = Json::array();
  for (const auto& atom : atlas.atoms) {
    Json a;
    a["component"] = component_name(atom.component);
    a["x"] = atom.x;
    a["y"] = atom.y;
    a["weight"] = atom.weight;
    a["tail_ratio"] = atom.tail_ratio;
    a["density"] = matrix_to_json(atom.density);
    atoms.push_back(std::move(a));
  }
  j["atoms"] = std::move(atoms);
  return j;
}

PovmAtlas atlas_from_json(const Json& j) {
  if (j.at("schema").get<std::string>() != "qjc.atlas.v1") {
    throw std::invalid_argument("atlas_from_json: unknown schema");
  }
  PovmAtlas atlas;
  atlas.params.omega_f = j.at("params").at("omega_f").get<double>();
  atlas.params.omega_s = j.at("params").at("omega_s").get<double>();
  atlas.params.kappa = j.at("params").at("kappa").get<double>();
  atlas.params.n_max = j.at("params").at("n_max").get<int>();
  atlas.K0 = j.at("k0").get<int>();
  atlas.Q = j.at("quad_order").get<int>();
  atlas.y_mode = j.at("y_mode").get<std::string>() == "exact" ? YMode::exact_mean
                                                              : YMode::finite_grid;
  atlas.y_points = j.at("y_points").get<int>();
  atlas.depth_J = j.at("depth_J").get<int>();
  atlas.depth_S = j.at("depth_S").get<int>();
  atlas.dressed_dim = j.at("dressed_dim").get<int>();
  atlas.interior_indices = j.at("interior_indices").get<std::vector<int>>();
  atlas.quad_J = rule_from_json(j.at("quad_J"));
  atlas.quad_S = rule_from_json(j.at("quad_S"));
  for (const auto& a : j.at("atoms")) {
    PovmAtom atom;
    atom.component = component_from_name(a.at("component").get<std::string>());
    atom.x = a.at("x").get<double>();
    atom.y = a.at("y").get<double>();
    atom.weight = a.at("weight").get<double>();
    atom.tail_ratio = a.at("tail_ratio").get<double>();
    atom.density = matrix_from_json(a.at("density"));
    atom.sqrt_density = psd_sqrt(atom.density);
    Eigen::SelfAdjointEigenSolver<Matrix> es(
        Matrix((atom.density + atom.density.adjoint()) / 2.0));
    const double top = es.eigenvalues()(es.eigenvalues().size() - 1);
    for (Eigen::Index i = es.eigenvalues().size() - 1; i >= 0; --i) {
      const double ev = es.eigenvalues()(i);
      if (ev > 1e-12 * top) {
        atom.factors.push_back(std::sqrt(ev) * es.eigenvectors().col(i));
      }
    }
    atlas.atoms.push_back(std::move(atom));
  }
  return atlas;
}

Json channel_to_json(const KrausChannel& ch) {
  Json j;
  j["schema"] = "qjc.channel.v1";
  j["in_dim"] = ch.in_dim;
  j["out_dim"] = ch.out_dim;
  Json ops = Json::array();
  for (const auto& a : ch.kraus) ops.push_back(matrix_to_json(a));
  j["kraus"] = std::move(ops);
  return j;
}

KrausChannel channel_from_json(const Json& j) {
  if (j.at("schema").get<std::string>() != "qjc.channel.v1") {
    throw std::invalid_argument("channel_from_json: unknown schema");
  }
  KrausChannel ch;
  ch.in_dim = j.at("in_dim").get<int>();
  ch.out_dim = j.at("out_dim").get<int>();
  for (const auto& a : j.at("kraus")) ch.kraus.push_back(matrix_from_json(a));
  return ch;
}

Json graph_to_json(const OperatorSubspace& s) {
  Json j;
  j["schema"] = "qjc.graph.v1";
  j["ambient_dim"] = s.ambient_dim;
  j["rank_tol"] = s.rank_tol;
  Json basis = Json::array();
  for (const auto& b : s.basis) basis.push_back(matrix_to_json(b));
  j["basis"] = std::move(basis);
  return j;
}

OperatorSubspace graph_from_json(const Json& j) {
  if (j.at("schema").get<std::string>() != "qjc.graph.v1") {
    throw std::invalid_argument("graph_from_json: unknown schema");
  }
  OperatorSubspace s;
  s.ambient_dim = j.at("ambient_dim").get<int>();
  s.rank_tol = j.at("rank_tol").get<double>();
  for (const auto& b : j.at("basis")) s.basis.push_back(matrix_from_json(b));
  return s;
}

std::string to_stable_string(const Json& j) { return j.dump(2) + "\n"; }

void write_json_atomic(const std::string& path, const Json& j) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
  }
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("write_json_atomic: cannot open " + tmp.string());
    out << to_stable_string(j);
    if (!out.good()) {
      throw std::runtime_error("write_json_atomic: write failed for " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, target);
}

Json read_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_json: cannot open " + path);
  Json j;
  in >> j;
  return j;
}

}  // namespace qjc
