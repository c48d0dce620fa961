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
 * Basis-dependent imaginarity and coherence quantifiers for a single qubit.
 *
 * Every basis-relative quantity is computed the same way: conjugate rho by
 * the unitary whose rows are the basis bras, then apply the
 * computational-basis formula to the result.
 */

#pragma once

#include <array>

#include "imsteer/linalg.hpp"
#include "imsteer/states.hpp"

namespace imsteer {

using Ket2 = std::array<Complex, 2>;

/// An orthonormal qubit basis. The phases of the kets matter: imaginarity is
/// not invariant under rephasing a basis vector.
class QubitBasis {
  public:
    /// Throws Error("invalid basis") unless orthonormal to 1e-12.
    QubitBasis(const Ket2 &e0, const Ket2 &e1);

    static QubitBasis z();
    /// |0_x>, |1_x> = (|0> +- |1>)/sqrt 2.
    static QubitBasis x();
    /// |0_y>, |1_y> = (|0> +- i|1>)/sqrt 2.
    static QubitBasis y();

    [[nodiscard]] const Ket2 &ket(std::size_t k) const { return kets_[k]; }

    /// Unitary with the basis bras as rows.
    [[nodiscard]] ComplexMatrix change_of_basis() const;
    /// rho expressed in this basis.
    [[nodiscard]] ComplexMatrix represent(const ComplexMatrix &rho) const;

    /// U applied to both kets.
    [[nodiscard]] QubitBasis rotated(const ComplexMatrix &u) const;

  private:
    std::array<Ket2, 2> kets_;
};

enum class Mub { B1, B2, B3 };

/// |u> = cos(t/2)|0> + e^{ip} sin(t/2)|1>, |d> = sin(t/2)|0> - e^{ip} cos(t/2)|1>.
/// B1 = {u, d}; B2 = {(u +- d)/sqrt 2}; B3 = {(u +- i d)/sqrt 2}.
QubitBasis mub_basis(Mub which, double theta, double phi);

/// 1/2 || rho - rho^T ||_1 in the given basis. Accepts unnormalised
/// (Hermitian) matrices, for which the value scales linearly.
double robustness_of_imaginarity(const ComplexMatrix &rho,
                                 const QubitBasis &basis);
double robustness_of_imaginarity(const DensityMatrix &rho,
                                 const QubitBasis &basis);

/// |n_y cos phi - n_x sin phi| for B1 and B2,
/// |n_x cos t cos p + n_y cos t sin p - n_z sin t| for B3.
double robustness_closed_form(const Vec3 &n, Mub which, double theta,
                              double phi);

/// For a pure state: sqrt(1 - |<psi*|psi>|^2) in the computational basis.
double robustness_of_imaginarity_pure(const Ket2 &psi);

enum class ImaginarityMeasure { L1, RelativeEntropy };

/// l1: sum_{a != b} |Im rho_ab|. Relative entropy: S(rho') - S(rho) with
/// rho' = (rho + rho^T)/2. Both in the given basis.
double imaginarity_measure(const DensityMatrix &rho, const QubitBasis &basis,
                           ImaginarityMeasure g);

enum class Axis { X, Y, Z };
enum class CoherenceMeasure { L1, RelativeEntropy, Skew };

/// Coherence in the eigenbasis of sigma_axis.
///  l1: sum_{i != j} |rho_ij|;  relative entropy: S(diag rho) - S(rho);
///  skew: 1 - Tr[sqrt(rho) s sqrt(rho) s].
double coherence_measure(const DensityMatrix &rho, Axis axis,
                         CoherenceMeasure g);

/// -sum lambda log2 lambda; eigenvalues in [-1e-12, 0) count as zero.
double von_neumann_entropy(const ComplexMatrix &rho);
double von_neumann_entropy(const DensityMatrix &rho);

/// I_R^x + I_R^y.
double complementarity_sum_xy(const DensityMatrix &rho);
/// I_R^{B2} + I_R^{B3} at the given MUB angles.
double complementarity_sum_mub(const DensityMatrix &rho, double theta,
                               double phi);

const QubitBasis &axis_basis(Axis axis);
const ComplexMatrix &axis_pauli(Axis axis);

} // namespace imsteer
