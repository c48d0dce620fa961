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
 * Reference computations for the tests. They share no code paths with the
 * library: Kronecker products and partial traces by explicit index loops,
 * spectra from characteristic-polynomial roots, X-state concurrence in
 * closed form and a PPT test from the partial transpose.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "imsteer/linalg.hpp"

namespace oracle {

using imsteer::Complex;
using imsteer::ComplexMatrix;

inline ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    ComplexMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            for (std::size_t k = 0; k < nb; ++k) {
                for (std::size_t l = 0; l < nb; ++l) {
                    out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

/// Keeps the qubits whose positions (0 = most significant) are listed.
inline ComplexMatrix partial_trace(const ComplexMatrix &m,
                                   const std::vector<int> &keep) {
    int qubits = 0;
    while ((std::size_t{1} << qubits) < m.dim()) {
        ++qubits;
    }
    std::vector<int> traced;
    for (int q = 0; q < qubits; ++q) {
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) {
            traced.push_back(q);
        }
    }
    const auto bit = [qubits](std::size_t index, int q) {
        return (index >> (qubits - 1 - q)) & 1U;
    };
    ComplexMatrix out(std::size_t{1} << keep.size());
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            bool same = true;
            for (int q : traced) {
                same = same && bit(r, q) == bit(c, q);
            }
            if (!same) {
                continue;
            }
            std::size_t rr = 0;
            std::size_t cc = 0;
            for (int q : keep) {
                rr = (rr << 1U) | bit(r, q);
                cc = (cc << 1U) | bit(c, q);
            }
            out(rr, cc) += m(r, c);
        }
    }
    return out;
}

/// Monic characteristic polynomial coefficients c[0..n] (c[0] = 1) of
/// det(x I - m), by the Faddeev-LeVerrier recursion.
inline std::vector<Complex> char_poly(const ComplexMatrix &m) {
    const std::size_t n = m.dim();
    std::vector<Complex> c(n + 1);
    c[0] = 1.0;
    ComplexMatrix mk(n);
    for (std::size_t k = 1; k <= n; ++k) {
        ComplexMatrix acc = mk;
        for (std::size_t d = 0; d < n; ++d) {
            acc(d, d) += c[k - 1];
        }
        mk = m * acc;
        c[k] = -mk.trace() / static_cast<double>(k);
    }
    return c;
}

/// All complex roots of a monic polynomial by Durand-Kerner iteration.
inline std::vector<Complex> poly_roots(const std::vector<Complex> &c) {
    const std::size_t n = c.size() - 1;
    const auto eval = [&c](Complex x) {
        Complex v = 0.0;
        for (const Complex &ck : c) {
            v = v * x + ck;
        }
        return v;
    };
    double radius = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        radius = std::max(radius, std::abs(c[k]));
    }
    radius += 1.0;
    std::vector<Complex> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        z[k] = std::polar(radius, 0.4 + 2.0 * std::numbers::pi * static_cast<double>(k) /
                                            static_cast<double>(n));
    }
    for (int iter = 0; iter < 2000; ++iter) {
        double change = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            Complex denom = 1.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != k) {
                    denom *= z[k] - z[j];
                }
            }
            const Complex step = eval(z[k]) / denom;
            z[k] -= step;
            change = std::max(change, std::abs(step));
        }
        if (change < 1e-15) {
            break;
        }
    }
    return z;
}

/// Ascending real parts of the characteristic roots.
inline std::vector<double> eigenvalues(const ComplexMatrix &m) {
    std::vector<double> out;
    for (const Complex &z : poly_roots(char_poly(m))) {
        out.push_back(z.real());
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline ComplexMatrix partial_transpose_b(const ComplexMatrix &m) {
    ComplexMatrix out(4);
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            for (std::size_t a2 = 0; a2 < 2; ++a2) {
                for (std::size_t b2 = 0; b2 < 2; ++b2) {
                    out(2 * a + b, 2 * a2 + b2) = m(2 * a + b2, 2 * a2 + b);
                }
            }
        }
    }
    return out;
}

/// det of the partial transpose. A two-qubit state is entangled exactly when
/// this is negative; the constant coefficient of the characteristic
/// polynomial stays accurate where individual roots do not.
inline double partial_transpose_determinant(const ComplexMatrix &rho) {
    return char_poly(partial_transpose_b(rho)).back().real();
}

/// Concurrence of a state with X sparsity:
/// 2 max(0, |r14| - sqrt(r22 r33), |r23| - sqrt(r11 r44)).
inline double x_state_concurrence(const ComplexMatrix &rho) {
    const double a = std::abs(rho(0, 3)) -
                     std::sqrt(rho(1, 1).real() * rho(2, 2).real());
    const double b = std::abs(rho(1, 2)) -
                     std::sqrt(rho(0, 0).real() * rho(3, 3).real());
    return 2.0 * std::max({0.0, a, b});
}

/// Trace norm of a 2x2 Hermitian matrix from its closed-form spectrum.
inline double trace_norm_2x2(const ComplexMatrix &m) {
    const double mean = 0.5 * (m(0, 0).real() + m(1, 1).real());
    const double half = 0.5 * (m(0, 0).real() - m(1, 1).real());
    const double radius = std::sqrt(half * half + std::norm(m(0, 1)));
    return std::abs(mean + radius) + std::abs(mean - radius);
}

} // namespace oracle
