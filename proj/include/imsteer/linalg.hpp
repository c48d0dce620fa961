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
 * Dense complex matrices of dimension 2, 4 or 8 (one, two or three qubits)
 * and the handful of operations the steering code needs on them.
 */

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace imsteer {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

/// Structural checks (Hermiticity, positivity).
inline constexpr double kStructuralTol = 1e-10;
/// Arithmetic identities.
inline constexpr double kArithmeticTol = 1e-9;

/**
 * Square complex matrix, row-major, with dimension restricted to 2, 4 or 8.
 */
class ComplexMatrix {
  public:
    /// Zero matrix of the given dimension.
    explicit ComplexMatrix(std::size_t dim);
    /// Row-major construction; the row count fixes the dimension.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    /// |ket><ket|.
    static ComplexMatrix outer(std::span<const Complex> ket);
    /// |ket><bra|.
    static ComplexMatrix outer(std::span<const Complex> ket,
                               std::span<const Complex> bra);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

    Complex &operator()(std::size_t r, std::size_t c) {
        return data_[r * dim_ + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return data_[r * dim_ + c];
    }

    [[nodiscard]] ComplexMatrix adjoint() const;
    [[nodiscard]] ComplexMatrix transpose() const;
    [[nodiscard]] ComplexMatrix conj() const;
    [[nodiscard]] Complex trace() const;

    /// Largest |m_ij - conj(m_ji)|.
    [[nodiscard]] double hermiticity_residual() const;
    [[nodiscard]] bool is_hermitian(double tol = kStructuralTol) const;
    /// Hermitian with minimum eigenvalue >= -tol.
    [[nodiscard]] bool is_psd(double tol = kStructuralTol) const;

    ComplexMatrix &operator+=(const ComplexMatrix &o);
    ComplexMatrix &operator-=(const ComplexMatrix &o);
    ComplexMatrix &operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
        return a += b;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
        return a -= b;
    }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) {
        return a *= s;
    }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) {
        return a *= s;
    }
    friend ComplexMatrix operator*(const ComplexMatrix &a,
                                   const ComplexMatrix &b);

  private:
    std::size_t dim_;
    std::vector<Complex> data_;
};

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Pauli matrices; index 0 is the identity, 1..3 are x, y, z.
const ComplexMatrix &pauli(int index);
inline const ComplexMatrix &sigma_x() { return pauli(1); }
inline const ComplexMatrix &sigma_y() { return pauli(2); }
inline const ComplexMatrix &sigma_z() { return pauli(3); }

/// n . sigma for a real 3-vector.
ComplexMatrix bloch_operator(const Vec3 &n);

/// Kronecker product; the result must not exceed dimension 8.
ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b);

/// Which qubits survive a partial trace. Qubit A is the most significant.
enum class Keep { A, B, AB, AC, BC };

ComplexMatrix partial_trace(const ComplexMatrix &m, Keep keep);

struct EigenDecomposition {
    std::vector<double> values; ///< ascending
    ComplexMatrix vectors;      ///< column k pairs with values[k]
};

/**
 * Cyclic complex Jacobi diagonalisation of a Hermitian matrix.
 *
 * Each rotation first removes the phase of the pivot and then applies a real
 * plane rotation; sweeps run in fixed (p, q) order until the off-diagonal
 * Frobenius mass drops below 1e-13 (relative to the matrix scale when it
 * exceeds one). Throws "hermitian required" for non-Hermitian input.
 */
EigenDecomposition hermitian_eigen(const ComplexMatrix &m);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m);

/// Sum of singular values.
double trace_norm(const ComplexMatrix &m);

/// Principal square root of a positive semidefinite matrix.
ComplexMatrix psd_sqrt(const ComplexMatrix &m);

/// Real part of Tr[a b]; throws InternalError if the imaginary part exceeds
/// 1e-10 (both factors are expected Hermitian).
double real_trace_product(const ComplexMatrix &a, const ComplexMatrix &b);

} // namespace imsteer
