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

#include "imsteer/states.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "imsteer/error.hpp"
#include "imsteer/random.hpp"

namespace imsteer {

namespace {

constexpr double kParamSlack = 1e-9;

double norm3(const Vec3 &v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

void check_unit_interval(double x, const char *what) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw Error(std::string(what) + " must lie in [0, 1]");
    }
}

ComplexMatrix ginibre(std::size_t dim, Rng &rng) {
    ComplexMatrix g(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            g(r, c) = rng.complex_normal();
        }
    }
    ComplexMatrix rho = g * g.adjoint();
    rho *= 1.0 / rho.trace().real();
    return 0.5 * (rho + rho.adjoint());
}

std::vector<Complex> haar_ket(std::size_t dim, Rng &rng) {
    std::vector<Complex> psi(dim);
    double norm = 0.0;
    for (auto &z : psi) {
        z = rng.complex_normal();
        norm += std::norm(z);
    }
    norm = std::sqrt(norm);
    for (auto &z : psi) {
        z /= norm;
    }
    return psi;
}

} // namespace

std::string ValidationReport::describe() const {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "hermiticity residual %.3g, trace deviation %.3g, "
                  "minimum eigenvalue %.3g",
                  hermiticity_residual, trace_deviation, min_eigenvalue);
    return buf;
}

ValidationReport validate(const ComplexMatrix &rho) {
    ValidationReport r;
    r.hermiticity_residual = rho.hermiticity_residual();
    r.trace_deviation = std::abs(rho.trace() - 1.0);
    const ComplexMatrix hermitian_part = 0.5 * (rho + rho.adjoint());
    r.min_eigenvalue = hermitian_eigenvalues(hermitian_part).front();
    r.passed = r.hermiticity_residual <= kValidationTol &&
               r.trace_deviation <= kValidationTol &&
               r.min_eigenvalue >= -kValidationTol;
    return r;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
    const ValidationReport r = validate(m_);
    if (!r.passed) {
        throw Error("invalid density matrix: " + r.describe());
    }
}

DensityMatrix mix(double alpha, const DensityMatrix &a,
                  const DensityMatrix &b) {
    check_unit_interval(alpha, "mixing weight");
    return DensityMatrix::assume_valid(alpha * a.matrix() +
                                       (1.0 - alpha) * b.matrix());
}

ComplexMatrix from_bloch(const BlochTwoQubit &p) {
    bool in_range = norm3(p.m) <= 1.0 + kParamSlack &&
                    norm3(p.n) <= 1.0 + kParamSlack;
    for (const auto &row : p.t) {
        for (double tij : row) {
            in_range = in_range && std::abs(tij) <= 1.0 + kParamSlack;
        }
    }
    if (!in_range) {
        throw Error("bloch out of range");
    }
    const ComplexMatrix &id = pauli(0);
    ComplexMatrix rho = ComplexMatrix::identity(4);
    rho += tensor_product(bloch_operator(p.m), id);
    rho += tensor_product(id, bloch_operator(p.n));
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double tij = p.t[static_cast<std::size_t>(i)]
                                  [static_cast<std::size_t>(j)];
            if (tij != 0.0) {
                rho += tij * tensor_product(pauli(i + 1), pauli(j + 1));
            }
        }
    }
    rho *= 0.25;
    return rho;
}

BlochTwoQubit to_bloch(const DensityMatrix &rho) {
    if (rho.dim() != 4) {
        throw Error("two-qubit state required");
    }
    const ComplexMatrix &m = rho.matrix();
    const ComplexMatrix &id = pauli(0);
    BlochTwoQubit p;
    for (int i = 0; i < 3; ++i) {
        const auto si = static_cast<std::size_t>(i);
        p.m[si] = real_trace_product(tensor_product(pauli(i + 1), id), m);
        p.n[si] = real_trace_product(tensor_product(id, pauli(i + 1)), m);
        for (int j = 0; j < 3; ++j) {
            p.t[si][static_cast<std::size_t>(j)] = real_trace_product(
                tensor_product(pauli(i + 1), pauli(j + 1)), m);
        }
    }
    return p;
}

Vec3 bloch_vector(const ComplexMatrix &rho) {
    if (rho.dim() != 2) {
        throw Error("qubit state required");
    }
    return {2.0 * rho(0, 1).real(), -2.0 * rho(0, 1).imag(),
            (rho(0, 0) - rho(1, 1)).real()};
}

DensityMatrix qubit_state(const Vec3 &n) {
    if (norm3(n) > 1.0 + kParamSlack) {
        throw Error("bloch out of range");
    }
    return DensityMatrix::assume_valid(
        0.5 * (ComplexMatrix::identity(2) + bloch_operator(n)));
}

const std::array<Complex, 4> &singlet_ket() {
    static const std::array<Complex, 4> ket{0.0, std::numbers::sqrt2 / 2.0,
                                            -std::numbers::sqrt2 / 2.0, 0.0};
    return ket;
}

DensityMatrix singlet() {
    return DensityMatrix::assume_valid(ComplexMatrix::outer(singlet_ket()));
}

DensityMatrix werner(double v) {
    check_unit_interval(v, "visibility");
    return DensityMatrix::assume_valid(v * singlet().matrix() +
                                       (1.0 - v) / 4.0 *
                                           ComplexMatrix::identity(4));
}

ComplexMatrix x_state_matrix(const XStateParams &p) {
    ComplexMatrix rho(4);
    rho(0, 0) = 0.25 * (1.0 + p.beta_z0 + p.beta_0z + p.beta_zz);
    rho(1, 1) = 0.25 * (1.0 + p.beta_z0 - p.beta_0z - p.beta_zz);
    rho(2, 2) = 0.25 * (1.0 - p.beta_z0 + p.beta_0z - p.beta_zz);
    rho(3, 3) = 0.25 * (1.0 - p.beta_z0 - p.beta_0z + p.beta_zz);
    rho(0, 3) = Complex(0.25 * (p.beta_xx - p.beta_yy),
                        -0.25 * (p.beta_xy + p.beta_yx));
    rho(3, 0) = std::conj(rho(0, 3));
    rho(1, 2) = Complex(0.25 * (p.beta_xx + p.beta_yy),
                        0.25 * (p.beta_xy - p.beta_yx));
    rho(2, 1) = std::conj(rho(1, 2));
    return rho;
}

DensityMatrix x_state(const XStateParams &p) {
    ComplexMatrix rho = x_state_matrix(p);
    if (!validate(rho).passed) {
        throw Error("invalid X-state parameters");
    }
    return DensityMatrix::assume_valid(std::move(rho));
}

XStateParams x_state_params(const ComplexMatrix &rho) {
    if (rho.dim() != 4) {
        throw Error("two-qubit state required");
    }
    const double r11 = rho(0, 0).real();
    const double r22 = rho(1, 1).real();
    const double r33 = rho(2, 2).real();
    const double r44 = rho(3, 3).real();
    const Complex r14 = rho(0, 3);
    const Complex r23 = rho(1, 2);
    XStateParams p;
    p.beta_z0 = r11 + r22 - r33 - r44;
    p.beta_0z = r11 - r22 + r33 - r44;
    p.beta_zz = r11 - r22 - r33 + r44;
    // 4 r14 = (xx - yy) - i (xy + yx), 4 r23 = (xx + yy) + i (xy - yx)
    p.beta_xx = 2.0 * (r14.real() + r23.real());
    p.beta_yy = 2.0 * (r23.real() - r14.real());
    p.beta_xy = 2.0 * (r23.imag() - r14.imag());
    p.beta_yx = -2.0 * (r14.imag() + r23.imag());
    return p;
}

double mems_h(double c) { return c < 2.0 / 3.0 ? 1.0 / 3.0 : c / 2.0; }

XStateParams mems_params(double c) {
    check_unit_interval(c, "concurrence");
    const double h = mems_h(c);
    XStateParams p;
    p.beta_z0 = 1.0 - 2.0 * h;
    p.beta_0z = -(1.0 - 2.0 * h);
    p.beta_xx = c;
    p.beta_yy = -c;
    p.beta_zz = 4.0 * h - 1.0;
    return p;
}

DensityMatrix mems(double c) {
    check_unit_interval(c, "concurrence");
    const double h = mems_h(c);
    ComplexMatrix rho(4);
    rho(0, 0) = h;
    rho(1, 1) = 1.0 - 2.0 * h;
    rho(3, 3) = h;
    rho(0, 3) = c / 2.0;
    rho(3, 0) = c / 2.0;
    return DensityMatrix::assume_valid(std::move(rho));
}

void check_tripartite(const TripartiteParams &p) {
    double sum = 0.0;
    for (double e : p.eta) {
        if (!(e >= 0.0 && e <= 1.0)) {
            throw Error("eta must lie in [0, 1]");
        }
        sum += e * e;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw Error("eta not normalised");
    }
    if (!(p.theta >= 0.0 && p.theta <= std::numbers::pi)) {
        throw Error("theta must lie in [0, pi]");
    }
}

std::array<Complex, 8> tripartite_ket(const TripartiteParams &p) {
    check_tripartite(p);
    std::array<Complex, 8> psi{};
    psi[0b000] = p.eta[0];
    psi[0b100] = std::polar(p.eta[1], p.theta);
    psi[0b101] = p.eta[2];
    psi[0b110] = p.eta[3];
    psi[0b111] = p.eta[4];
    return psi;
}

DensityMatrix tripartite_state(const TripartiteParams &p) {
    return DensityMatrix::assume_valid(
        ComplexMatrix::outer(tripartite_ket(p)));
}

DensityMatrix sample_state(StateKind kind, std::uint64_t seed) {
    Rng rng(seed);
    return sample_state(kind, rng);
}

DensityMatrix sample_state(StateKind kind, Rng &rng) {
    switch (kind) {
    case StateKind::Pure4:
        return DensityMatrix::assume_valid(
            ComplexMatrix::outer(haar_ket(4, rng)));
    case StateKind::Mixed4:
        return DensityMatrix::assume_valid(ginibre(4, rng));
    case StateKind::Qubit:
        return DensityMatrix::assume_valid(ginibre(2, rng));
    case StateKind::Product4: {
        const ComplexMatrix a = ginibre(2, rng);
        const ComplexMatrix b = ginibre(2, rng);
        return DensityMatrix::assume_valid(tensor_product(a, b));
    }
    case StateKind::Separable4: {
        const int k = rng.uniform_int(1, 16);
        std::vector<double> weights(static_cast<std::size_t>(k));
        double total = 0.0;
        for (auto &w : weights) {
            w = -std::log(1.0 - rng.uniform());
            total += w;
        }
        ComplexMatrix rho(4);
        for (double w : weights) {
            const ComplexMatrix a = ComplexMatrix::outer(haar_ket(2, rng));
            const ComplexMatrix b = ComplexMatrix::outer(haar_ket(2, rng));
            rho += (w / total) * tensor_product(a, b);
        }
        return DensityMatrix::assume_valid(std::move(rho));
    }
    }
    throw Error("unknown state kind");
}

} // namespace imsteer
