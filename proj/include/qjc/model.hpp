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

#ifndef QJC_MODEL_HPP_
#define QJC_MODEL_HPP_

#include <array>
#include <utility>

#include "qjc/types.hpp"

namespace qjc {

// Truncated Jaynes-Cummings model: a qubit coupled to a single oscillator
// mode in the rotating wave approximation,
//
//   H = omega_f a+ a- + (omega_s / 2) sigma_z + (kappa / 2)(sigma- a+ + sigma+ a-).
//
// Bare basis |n, s> with Fock level n in [0, n_max] and qubit level
// s in {g, e}; flat index 2n + (s == e).  The excitation-conserving coupling
// splits H into the 1-dim block {|0,g>} and 2-dim blocks
// span{|n-1,e>, |n,g>} for 1 <= n <= n_max; the bare direction |n_max,e>
// belongs to the block cut off by the truncation and is excluded from the
// dressed-complete space, which therefore has dimension 2*n_max + 1.
//
// Dressed ordering used throughout the library:
//   index 0                         |0,g>
//   index n          (1..n_max)     |n,+>
//   index n_max + n  (1..n_max)     |n,->
//
// Eigenvector convention: with theta_n = atan2(kappa*sqrt(n), delta) in (0, pi),
//   |n,+> = sin(theta_n/2) |n-1,e> + cos(theta_n/2) |n,g>
//   |n,-> = cos(theta_n/2) |n-1,e> - sin(theta_n/2) |n,g>
// which diagonalizes every 2x2 block for either sign of the detuning.  All
// dressed vectors are unit-normalized, including the resonant case.

struct ModelParams {
  double omega_f = 1.0;   // oscillator frequency, > 0
  double omega_s = 0.5;   // qubit frequency, > 0
  double kappa = 0.2;     // coupling, >= 0
  int n_max = 40;         // Fock truncation, >= 4

  double delta() const { return omega_f - omega_s; }
  // Throws std::invalid_argument if any constraint fails.
  void validate() const;
};

enum class QubitLevel { g, e };
enum class Branch { ground, plus, minus };

struct BareBasisIndex {
  int fock_level = 0;
  QubitLevel qubit = QubitLevel::g;
};

inline int bare_dim(int n_max) { return 2 * (n_max + 1); }
int bare_flat_index(const BareBasisIndex& idx, int n_max);

inline int dressed_dim(int n_max) { return 2 * n_max + 1; }
inline int dressed_index_ground() { return 0; }
inline int dressed_index_plus(int n) { return n; }
inline int dressed_index_minus(int n, int n_max) { return n_max + n; }

struct DressedVector {
  int n = 0;
  Branch branch = Branch::ground;
  Vector amplitudes;  // over the bare basis, unit norm
};

// theta_n = atan2(kappa*sqrt(n), delta), in (0, pi) for kappa > 0.
// Rejects n = 0 and the degenerate pair kappa = 0, delta = 0.
double mixing_angle(int n, const ModelParams& params);

// Closed-form eigenenergies:
//   E(0, ground) = (omega_f + delta) / 2
//   E(n, +/-)    = omega_f (n - 1/2) +/- sqrt(delta^2 + kappa^2 n) / 2
// Note E(0, ground) as written carries a constant offset of +omega_f
// relative to the diagonal entry <0,g|H|0,g> = -omega_s/2 of the assembled
// Hamiltonian; only energy differences within the +/- families are offset
// free.  The measured offset is reported in SpectrumTable.
double eigenenergy(int n, Branch branch, const ModelParams& params);

// Dressed eigenvector in bare coordinates (see convention above).
DressedVector dressed_state(int n, Branch branch, const ModelParams& params);

// Dense Hermitian matrix of H on the bare basis, dimension 2(n_max+1).
Matrix hamiltonian_matrix(const ModelParams& params);

// Least M0 >= 1 with
//   1 / (sqrt(delta^2 + kappa^2 (M0+1)) + sqrt(delta^2 + kappa^2 M0)) < 2 omega_f / kappa^2,
// found by doubling + binary search on the monotone predicate; K0 = max(3, M0).
// kappa = 0 satisfies the bound vacuously and yields M0 = 1.
// Throws std::runtime_error if the scan exceeds scan_limit.
std::pair<int, int> compute_M0_K0(const ModelParams& params,
                                  long scan_limit = (1L << 40));

// J_k = E(k+1, +) for k = 0..n_max-1, and S_n = E(n, -) for n = K0..n_max.
// Both sequences are verified strictly increasing; a violation throws
// std::runtime_error (it signals an undersized K0).
std::pair<RealVector, RealVector> energy_sequences(const ModelParams& params, int K0);

struct SpectrumTable {
  double E0g = 0.0;            // closed-form value as written above
  RealVector E_plus;           // n = 1..n_max at entry n-1
  RealVector E_minus;
  RealVector J;                // J_k, k = 0..n_max-1
  RealVector S;                // S_n, n = s_first..n_max at entry n - s_first
  int s_first = 0;             // = K0
  int M0 = 0;
  int K0 = 0;
  double ground_offset = 0.0;  // E0g - <0,g|H|0,g>, measured
};

SpectrumTable build_spectrum(const ModelParams& params);

// Orthogonal split of the dressed-complete space:
//   H1 = span{|n,+>, 1 <= n <= n_max}
//   H2 = span{|n,->, K0 <= n <= n_max}
//   H3 = span{|0,g>} + span{|n,->, 1 <= n < K0}
// Projectors are expressed in dressed coordinates where they are diagonal.
struct SubspaceSplit {
  Matrix P1, P2, P3;           // dressed_dim x dressed_dim
  std::array<int, 3> dims{};   // (n_max, n_max - K0 + 1, K0)
  int K0 = 0;
  int n_max = 0;
};

// Requires K0 >= 3 and n_max > K0 + 4.
SubspaceSplit subspace_split(const ModelParams& params, int K0);

// Isometry from dressed to bare coordinates: columns are the dressed
// vectors in the ordering documented above.  isometry^* isometry = I.
struct DressedFrame {
  Matrix isometry;  // bare_dim x dressed_dim
  int n_max = 0;
};

DressedFrame dressed_frame(const ModelParams& params);

// Closed-form energy per dressed index, in the dressed ordering.
RealVector dressed_energies(const ModelParams& params);

}  // namespace qjc

#endif  // QJC_MODEL_HPP_
