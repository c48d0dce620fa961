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

#include "imsteer/imaginarity.hpp"

#include <cmath>
#include <numbers>

#include "imsteer/error.hpp"

namespace imsteer {

namespace {

constexpr double kBasisTol = 1e-12;
constexpr double kEntropyClamp = 1e-12;

Complex inner(const Ket2 &a, const Ket2 &b) {
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

void check_qubit(const ComplexMatrix &rho) {
    if (rho.dim() != 2) {
        throw Error("qubit state required");
    }
}

} // namespace

QubitBasis::QubitBasis(const Ket2 &e0, const Ket2 &e1) : kets_{e0, e1} {
    const bool ok = std::abs(inner(e0, e0) - 1.0) < kBasisTol &&
                    std::abs(inner(e1, e1) - 1.0) < kBasisTol &&
                    std::abs(inner(e0, e1)) < kBasisTol;
    if (!ok) {
        throw Error("invalid basis");
    }
}

QubitBasis QubitBasis::z() { return {{1.0, 0.0}, {0.0, 1.0}}; }

QubitBasis QubitBasis::x() {
    const double h = std::numbers::sqrt2 / 2.0;
    return {{h, h}, {h, -h}};
}

QubitBasis QubitBasis::y() {
    const double h = std::numbers::sqrt2 / 2.0;
    return {{h, Complex(0.0, h)}, {h, Complex(0.0, -h)}};
}

ComplexMatrix QubitBasis::change_of_basis() const {
    ComplexMatrix u(2);
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            u(r, c) = std::conj(kets_[r][c]);
        }
    }
    return u;
}

ComplexMatrix QubitBasis::represent(const ComplexMatrix &rho) const {
    check_qubit(rho);
    const ComplexMatrix u = change_of_basis();
    return u * rho * u.adjoint();
}

QubitBasis QubitBasis::rotated(const ComplexMatrix &u) const {
    std::array<Ket2, 2> out{};
    for (std::size_t k = 0; k < 2; ++k) {
        out[k][0] = u(0, 0) * kets_[k][0] + u(0, 1) * kets_[k][1];
        out[k][1] = u(1, 0) * kets_[k][0] + u(1, 1) * kets_[k][1];
    }
    return {out[0], out[1]};
}

QubitBasis mub_basis(Mub which, double theta, double phi) {
    const Complex e = std::polar(1.0, phi);
    const Ket2 u{std::cos(theta / 2.0), e * std::sin(theta / 2.0)};
    const Ket2 d{std::sin(theta / 2.0), -e * std::cos(theta / 2.0)};
    const double h = std::numbers::sqrt2 / 2.0;
    const Complex i(0.0, 1.0);
    switch (which) {
    case Mub::B1:
        return {u, d};
    case Mub::B2:
        return {{h * (u[0] + d[0]), h * (u[1] + d[1])},
                {h * (u[0] - d[0]), h * (u[1] - d[1])}};
    case Mub::B3:
        return {{h * (u[0] + i * d[0]), h * (u[1] + i * d[1])},
                {h * (u[0] - i * d[0]), h * (u[1] - i * d[1])}};
    }
    throw Error("invalid basis");
}

double robustness_of_imaginarity(const ComplexMatrix &rho,
                                 const QubitBasis &basis) {
    const ComplexMatrix r = basis.represent(rho);
    return 0.5 * trace_norm(r - r.transpose());
}

double robustness_of_imaginarity(const DensityMatrix &rho,
                                 const QubitBasis &basis) {
    return robustness_of_imaginarity(rho.matrix(), basis);
}

double robustness_closed_form(const Vec3 &n, Mub which, double theta,
                              double phi) {
    if (which == Mub::B3) {
        return std::abs(n[0] * std::cos(theta) * std::cos(phi) +
                        n[1] * std::cos(theta) * std::sin(phi) -
                        n[2] * std::sin(theta));
    }
    return std::abs(n[1] * std::cos(phi) - n[0] * std::sin(phi));
}

double robustness_of_imaginarity_pure(const Ket2 &psi) {
    // <psi*|psi> = sum psi_k psi_k
    const Complex overlap = psi[0] * psi[0] + psi[1] * psi[1];
    return std::sqrt(std::max(0.0, 1.0 - std::norm(overlap)));
}

double imaginarity_measure(const DensityMatrix &rho, const QubitBasis &basis,
                           ImaginarityMeasure g) {
    const ComplexMatrix r = basis.represent(rho.matrix());
    switch (g) {
    case ImaginarityMeasure::L1:
        return std::abs(r(0, 1).imag()) + std::abs(r(1, 0).imag());
    case ImaginarityMeasure::RelativeEntropy: {
        const ComplexMatrix real_part = 0.5 * (r + r.transpose());
        return std::max(0.0, von_neumann_entropy(real_part) -
                                 von_neumann_entropy(r));
    }
    }
    throw Error("unknown imaginarity measure");
}

const QubitBasis &axis_basis(Axis axis) {
    static const QubitBasis bx = QubitBasis::x();
    static const QubitBasis by = QubitBasis::y();
    static const QubitBasis bz = QubitBasis::z();
    switch (axis) {
    case Axis::X:
        return bx;
    case Axis::Y:
        return by;
    case Axis::Z:
        return bz;
    }
    throw Error("unknown axis");
}

const ComplexMatrix &axis_pauli(Axis axis) {
    switch (axis) {
    case Axis::X:
        return sigma_x();
    case Axis::Y:
        return sigma_y();
    case Axis::Z:
        return sigma_z();
    }
    throw Error("unknown axis");
}

double coherence_measure(const DensityMatrix &rho, Axis axis,
                         CoherenceMeasure g) {
    check_qubit(rho.matrix());
    switch (g) {
    case CoherenceMeasure::L1: {
        const ComplexMatrix r = axis_basis(axis).represent(rho.matrix());
        return std::abs(r(0, 1)) + std::abs(r(1, 0));
    }
    case CoherenceMeasure::RelativeEntropy: {
        const ComplexMatrix r = axis_basis(axis).represent(rho.matrix());
        ComplexMatrix diagonal(2);
        diagonal(0, 0) = r(0, 0).real();
        diagonal(1, 1) = r(1, 1).real();
        return std::max(0.0, von_neumann_entropy(diagonal) -
                                 von_neumann_entropy(r));
    }
    case CoherenceMeasure::Skew: {
        const ComplexMatrix root = psd_sqrt(rho.matrix());
        const ComplexMatrix &s = axis_pauli(axis);
        return 1.0 - real_trace_product(root * s * root, s);
    }
    }
    throw Error("unknown coherence measure");
}

double von_neumann_entropy(const ComplexMatrix &rho) {
    double s = 0.0;
    for (double lambda : hermitian_eigenvalues(rho)) {
        if (lambda < 0.0 && lambda >= -kEntropyClamp) {
            lambda = 0.0;
        }
        if (lambda > 0.0) {
            s -= lambda * std::log2(lambda);
        }
    }
    return s;
}

double von_neumann_entropy(const DensityMatrix &rho) {
    return von_neumann_entropy(rho.matrix());
}

double complementarity_sum_xy(const DensityMatrix &rho) {
    return robustness_of_imaginarity(rho, QubitBasis::x()) +
           robustness_of_imaginarity(rho, QubitBasis::y());
}

double complementarity_sum_mub(const DensityMatrix &rho, double theta,
                               double phi) {
    return robustness_of_imaginarity(rho, mub_basis(Mub::B2, theta, phi)) +
           robustness_of_imaginarity(rho, mub_basis(Mub::B3, theta, phi));
}

} // namespace imsteer
