// Copyright 2026 The imsteer Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Density matrices and the state families used throughout the library:
 * Fano (Bloch) parameterisation, Werner, X-states, MEMS, the five-parameter
 * three-qubit pure state, and seeded random samplers.
 */

#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "imsteer/linalg.hpp"

namespace imsteer {

/// Passing threshold for validate() and DensityMatrix construction.
inline constexpr double kValidationTol = 1e-9;

struct ValidationReport {
    double hermiticity_residual = 0.0;
    double trace_deviation = 0.0;
    double min_eigenvalue = 0.0;
    bool passed = false;

    [[nodiscard]] std::string describe() const;
};

/// Hermiticity residual, |Tr - 1| and the smallest eigenvalue of the
/// Hermitian part; passes iff all three are within 1e-9.
ValidationReport validate(const ComplexMatrix &rho);

/**
 * A validated density matrix: Hermitian, unit trace, positive semidefinite,
 * dimension 2, 4 or 8. Immutable once built.
 */
class DensityMatrix {
  public:
    /// Validates; throws Error("invalid density matrix: ...") on failure.
    explicit DensityMatrix(ComplexMatrix m);

    /// Skips validation. For matrices that are states by construction.
    static DensityMatrix assume_valid(ComplexMatrix m) {
        return DensityMatrix(std::move(m), Unchecked{});
    }

    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return m_; }
    [[nodiscard]] std::size_t dim() const noexcept { return m_.dim(); }

  private:
    struct Unchecked {};
    DensityMatrix(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}
    ComplexMatrix m_;
};

/// alpha * a + (1 - alpha) * b.
DensityMatrix mix(double alpha, const DensityMatrix &a, const DensityMatrix &b);

using Mat3 = std::array<Vec3, 3>;

/// Fano form: rho = (I + m.s x I + I x n.s + sum t_ij s_i x s_j) / 4.
struct BlochTwoQubit {
    Vec3 m{};
    Vec3 n{};
    Mat3 t{};
};

/// Hermitian, unit trace. Positivity is not implied by the parameter bounds,
/// so the result is a raw matrix; wrap it in DensityMatrix to validate.
/// Throws "bloch out of range" if |m|, |n| or any |t_ij| exceeds 1 + 1e-9.
ComplexMatrix from_bloch(const BlochTwoQubit &p);

/// m_i = Tr[(s_i x I) rho], n_j = Tr[(I x s_j) rho], t_ij = Tr[(s_i x s_j) rho].
BlochTwoQubit to_bloch(const DensityMatrix &rho);

/// Bloch vector of a single qubit.
Vec3 bloch_vector(const ComplexMatrix &rho);
/// (I + n.s) / 2; throws if |n| > 1 + 1e-9.
DensityMatrix qubit_state(const Vec3 &n);

/// (|01> - |10>) / sqrt 2.
const std::array<Complex, 4> &singlet_ket();
DensityMatrix singlet();

/// v |psi-><psi-| + (1 - v) I/4, v in [0, 1].
DensityMatrix werner(double v);

/// The seven real parameters of a two-qubit X-state.
struct XStateParams {
    double beta_z0 = 0.0;
    double beta_0z = 0.0;
    double beta_xx = 0.0;
    double beta_xy = 0.0;
    double beta_yx = 0.0;
    double beta_yy = 0.0;
    double beta_zz = 0.0;
};

/// Raw X-pattern matrix for the parameters (not validated).
ComplexMatrix x_state_matrix(const XStateParams &p);
/// Throws "invalid X-state parameters" if the matrix is not a state.
DensityMatrix x_state(const XStateParams &p);
/// Inverse of x_state_matrix, reading rho_11, rho_22, rho_33, rho_14, rho_23.
XStateParams x_state_params(const ComplexMatrix &rho);

/// h(C): 1/3 below C = 2/3, C/2 from there on.
double mems_h(double c);
/// Maximally entangled mixed state with concurrence c in [0, 1].
DensityMatrix mems(double c);
XStateParams mems_params(double c);

/**
 * eta0 |000> + eta1 e^{i theta} |100> + eta2 |101> + eta3 |110> + eta4 |111>.
 */
struct TripartiteParams {
    std::array<double, 5> eta{};
    double theta = 0.0;
};

/// Throws unless every eta is in [0, 1], theta in [0, pi] and the etas are
/// normalised to 1e-12.
void check_tripartite(const TripartiteParams &p);
std::array<Complex, 8> tripartite_ket(const TripartiteParams &p);
DensityMatrix tripartite_state(const TripartiteParams &p);

enum class StateKind { Pure4, Mixed4, Product4, Separable4, Qubit };

/**
 * Seeded random state of the requested class.
 *
 *  - Pure4: normalised complex-Gaussian 4-vector (Haar).
 *  - Mixed4: G G^dagger / Tr with complex-Gaussian 4x4 G (Ginibre).
 *  - Qubit: 2x2 Ginibre.
 *  - Product4: tensor product of two Qubit samples.
 *  - Separable4: K uniform in 1..16 Haar-pure product states, weights
 *    e_k / sum e with e_k = -ln(1 - u_k).
 */
DensityMatrix sample_state(StateKind kind, std::uint64_t seed);

class Rng;
DensityMatrix sample_state(StateKind kind, Rng &rng);

} // namespace imsteer
