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

#include "imsteer/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "imsteer/error.hpp"

namespace imsteer {

namespace {

constexpr double kJacobiOffTol = 1e-13;
constexpr int kMaxSweeps = 64;

void check_dim(std::size_t dim) {
    if (dim != 2 && dim != 4 && dim != 8) {
        throw Error("unsupported dimension");
    }
}

void check_same_dim(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw Error("dimension mismatch");
    }
}

double off_diagonal_mass(const ComplexMatrix &a) {
    double sum = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            if (r != c) {
                sum += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(sum);
}

double frobenius(const ComplexMatrix &a) {
    double sum = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            sum += std::norm(a(r, c));
        }
    }
    return std::sqrt(sum);
}

// Zeroes a(p, q) with the unitary U = D R, where D strips the pivot phase
// from column q and R is the real Jacobi rotation of the phased 2x2 block.
void jacobi_rotate(ComplexMatrix &a, ComplexMatrix &v, std::size_t p,
                   std::size_t q) {
    const Complex apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) {
        return;
    }
    const Complex phase = apq / r; // e^{i phi}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = (aqq - app) / (2.0 * r);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                     (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const Complex upp = c;
    const Complex upq = s;
    const Complex uqp = -s * std::conj(phase);
    const Complex uqq = c * std::conj(phase);

    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * upp + akq * uqp;
        a(k, q) = akp * upq + akq * uqq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
        a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * upp + vkq * uqp;
        v(k, q) = vkp * upq + vkq * uqq;
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
    check_dim(dim);
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()), data_() {
    check_dim(dim_);
    data_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw Error("matrix must be square");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket) {
    return outer(ket, ket);
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket,
                                   std::span<const Complex> bra) {
    if (ket.size() != bra.size()) {
        throw Error("dimension mismatch");
    }
    ComplexMatrix m(ket.size());
    for (std::size_t r = 0; r < ket.size(); ++r) {
        for (std::size_t c = 0; c < ket.size(); ++c) {
            m(r, c) = ket[r] * std::conj(bra[c]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix out(*this);
    for (auto &z : out.data_) {
        z = std::conj(z);
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::hermiticity_residual() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) {
            worst = std::max(worst, std::abs((*this)(r, c) -
                                             std::conj((*this)(c, r))));
        }
    }
    return worst;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    return hermiticity_residual() <= tol;
}

bool ComplexMatrix::is_psd(double tol) const {
    if (!is_hermitian(tol)) {
        return false;
    }
    return hermitian_eigenvalues(*this).front() >= -tol;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &o) {
    check_same_dim(*this, o);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += o.data_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &o) {
    check_same_dim(*this, o);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= o.data_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex s) {
    for (auto &z : data_) {
        z *= s;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    check_same_dim(a, b);
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    check_same_dim(a, b);
    double worst = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
        }
    }
    return worst;
}

const ComplexMatrix &pauli(int index) {
    using namespace std::complex_literals;
    static const std::array<ComplexMatrix, 4> paulis{
        ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}},
        ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
        ComplexMatrix{{0.0, -1i}, {1i, 0.0}},
        ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
    };
    if (index < 0 || index > 3) {
        throw Error("pauli index out of range");
    }
    return paulis[static_cast<std::size_t>(index)];
}

ComplexMatrix bloch_operator(const Vec3 &n) {
    return n[0] * sigma_x() + n[1] * sigma_y() + n[2] * sigma_z();
}

ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    if (da * db > 8) {
        throw Error("unsupported dimension");
    }
    ComplexMatrix out(da * db);
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < db; ++k) {
                for (std::size_t l = 0; l < db; ++l) {
                    out(i * db + k, j * db + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &m, Keep keep) {
    const std::size_t dim = m.dim();
    if (dim == 2) {
        throw Error("nothing to trace out");
    }
    const std::size_t qubits = dim == 4 ? 2 : 3;

    // Bit masks (MSB = qubit A) of the kept and traced qubits.
    std::vector<std::size_t> kept;
    switch (keep) {
    case Keep::A:
        kept = {0};
        break;
    case Keep::B:
        kept = {1};
        break;
    case Keep::AB:
        kept = {0, 1};
        break;
    case Keep::AC:
        kept = {0, 2};
        break;
    case Keep::BC:
        kept = {1, 2};
        break;
    }
    if (kept.size() != qubits - 1 ||
        std::any_of(kept.begin(), kept.end(),
                    [&](std::size_t q) { return q >= qubits; })) {
        throw Error("subsystem selection does not match dimension");
    }
    std::vector<std::size_t> traced;
    for (std::size_t q = 0; q < qubits; ++q) {
        if (std::find(kept.begin(), kept.end(), q) == kept.end()) {
            traced.push_back(q);
        }
    }

    const auto bit = [qubits](std::size_t index, std::size_t q) {
        return (index >> (qubits - 1 - q)) & 1U;
    };
    const auto reduced_index = [&](std::size_t index) {
        std::size_t out = 0;
        for (std::size_t q : kept) {
            out = (out << 1U) | bit(index, q);
        }
        return out;
    };

    ComplexMatrix out(std::size_t{1} << kept.size());
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            const bool diagonal_in_traced =
                std::all_of(traced.begin(), traced.end(), [&](std::size_t q) {
                    return bit(r, q) == bit(c, q);
                });
            if (diagonal_in_traced) {
                out(reduced_index(r), reduced_index(c)) += m(r, c);
            }
        }
    }
    return out;
}

EigenDecomposition hermitian_eigen(const ComplexMatrix &m) {
    if (!m.is_hermitian(kStructuralTol)) {
        throw Error("hermitian required");
    }
    const std::size_t n = m.dim();
    // Work on the exactly Hermitian part.
    ComplexMatrix a = 0.5 * (m + m.adjoint());
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(1.0, frobenius(a));
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_mass(a) < kJacobiOffTol * scale) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                jacobi_rotate(a, v, p, q);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) {
                         return a(x, x).real() < a(y, y).real();
                     });

    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m) {
    return hermitian_eigen(m).values;
}

double trace_norm(const ComplexMatrix &m) {
    if (m.is_hermitian(1e-14)) {
        double sum = 0.0;
        for (double lambda : hermitian_eigenvalues(m)) {
            sum += std::abs(lambda);
        }
        return sum;
    }
    double sum = 0.0;
    for (double lambda : hermitian_eigenvalues(m.adjoint() * m)) {
        sum += std::sqrt(std::max(lambda, 0.0));
    }
    return sum;
}

ComplexMatrix psd_sqrt(const ComplexMatrix &m) {
    const EigenDecomposition eig = hermitian_eigen(m);
    if (eig.values.front() < -kStructuralTol) {
        throw Error("not PSD");
    }
    const std::size_t n = m.dim();
    ComplexMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double root = std::sqrt(std::max(eig.values[k], 0.0));
        if (root == 0.0) {
            continue;
        }
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) +=
                    root * eig.vectors(r, k) * std::conj(eig.vectors(c, k));
            }
        }
    }
    return out;
}

double real_trace_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    check_same_dim(a, b);
    Complex t = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t k = 0; k < a.dim(); ++k) {
            t += a(r, k) * b(k, r);
        }
    }
    if (std::abs(t.imag()) >= 1e-10) {
        throw InternalError("expectation value has an imaginary part");
    }
    return t.real();
}

} // namespace imsteer
