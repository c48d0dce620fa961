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

#include "imsteer/witness.hpp"

#include <numbers>

#include "imsteer/error.hpp"

namespace imsteer {

namespace {

using enum ProjectorLabel;

double parity(int bit) { return bit == 0 ? 1.0 : -1.0; }

// The x-slot operator uses sx on Bob only for k = 1, 2; the y-slot operator
// uses sy on Bob only for k = 1, 3.
bool x_slot_local(int k) { return k <= 2; }
bool y_slot_local(int k) { return k % 2 == 1; }

// Label pairs (Alice, Bob) for each nu, per family.
using Pattern = std::array<std::array<ProjectorLabel, 2>, 8>;

Pattern pattern(int k) {
    // I x P_b covers the local slot; matched or crossed products cover the
    // correlated slot.
    const std::array<std::array<ProjectorLabel, 2>, 4> x_terms =
        x_slot_local(k)
            ? std::array<std::array<ProjectorLabel, 2>, 4>{
                  {{ZeroX, ZeroX}, {OneX, ZeroX}, {ZeroX, OneX}, {OneX, OneX}}}
            : std::array<std::array<ProjectorLabel, 2>, 4>{
                  {{ZeroX, ZeroX}, {OneX, OneX}, {OneX, ZeroX}, {ZeroX, OneX}}};
    const std::array<std::array<ProjectorLabel, 2>, 4> y_terms =
        y_slot_local(k)
            ? std::array<std::array<ProjectorLabel, 2>, 4>{
                  {{ZeroY, ZeroY}, {OneY, ZeroY}, {ZeroY, OneY}, {OneY, OneY}}}
            : std::array<std::array<ProjectorLabel, 2>, 4>{
                  {{ZeroY, ZeroY}, {OneY, OneY}, {OneY, ZeroY}, {ZeroY, OneY}}};
    Pattern out{};
    for (std::size_t t = 0; t < 4; ++t) {
        out[t] = x_terms[t];
        out[t + 4] = y_terms[t];
    }
    return out;
}

} // namespace

ComplexMatrix WitnessOperator::normalized() const {
    return matrix * (1.0 / (4.0 * std::numbers::sqrt2));
}

WitnessOperator build_witness(int k, int i, int j) {
    if (k < 1 || k > 4 || (i != 0 && i != 1) || (j != 0 && j != 1)) {
        throw Error("invalid witness index");
    }
    const ComplexMatrix &id = pauli(0);
    const ComplexMatrix x_op = x_slot_local(k)
                                   ? tensor_product(id, sigma_x())
                                   : tensor_product(sigma_x(), sigma_x());
    const ComplexMatrix y_op = y_slot_local(k)
                                   ? tensor_product(id, sigma_y())
                                   : tensor_product(sigma_y(), sigma_y());
    WitnessOperator w;
    w.k = k;
    w.i = i;
    w.j = j;
    w.matrix = std::numbers::sqrt2 * ComplexMatrix::identity(4) -
               parity(i) * x_op - parity(j) * y_op;
    w.nu = {std::numbers::sqrt2 - parity(i), std::numbers::sqrt2 + parity(i),
            -parity(j), parity(j)};
    return w;
}

const std::array<WitnessOperator, 16> &all_witnesses() {
    static const std::array<WitnessOperator, 16> all = [] {
        std::array<WitnessOperator, 16> out;
        std::size_t n = 0;
        for (int k = 1; k <= 4; ++k) {
            for (int i = 0; i <= 1; ++i) {
                for (int j = 0; j <= 1; ++j) {
                    out[n++] = build_witness(k, i, j);
                }
            }
        }
        return out;
    }();
    return all;
}

double witness_expectation(const WitnessOperator &w, const DensityMatrix &rho) {
    if (rho.dim() != 4) {
        throw Error("two-qubit state required");
    }
    return real_trace_product(w.matrix, rho.matrix());
}

double witness_expectation(const WitnessOperator &w, const BlochTwoQubit &p) {
    const double a = x_slot_local(w.k) ? p.n[0] : p.t[0][0];
    const double b = y_slot_local(w.k) ? p.n[1] : p.t[1][1];
    return std::numbers::sqrt2 - (parity(w.i) * a + parity(w.j) * b);
}

WitnessSelection select_witness(const BlochTwoQubit &p) {
    const auto &all = all_witnesses();
    std::size_t best = 0;
    double best_value = witness_expectation(all[0], p);
    for (std::size_t n = 1; n < all.size(); ++n) {
        const double v = witness_expectation(all[n], p);
        if (v < best_value) {
            best = n;
            best_value = v;
        }
    }
    return {all[best], best_value};
}

WitnessSelection select_witness(const DensityMatrix &rho) {
    WitnessSelection s = select_witness(to_bloch(rho));
    s.expectation = witness_expectation(s.witness, rho);
    return s;
}

std::string label(ProjectorLabel p) {
    switch (p) {
    case ZeroX:
        return "0x";
    case OneX:
        return "1x";
    case ZeroY:
        return "0y";
    case OneY:
        return "1y";
    }
    throw Error("unknown projector label");
}

ComplexMatrix projector(ProjectorLabel p) {
    switch (p) {
    case ZeroX:
        return 0.5 * (pauli(0) + sigma_x());
    case OneX:
        return 0.5 * (pauli(0) - sigma_x());
    case ZeroY:
        return 0.5 * (pauli(0) + sigma_y());
    case OneY:
        return 0.5 * (pauli(0) - sigma_y());
    }
    throw Error("unknown projector label");
}

std::array<ProjectorTerm, 8> projector_decomposition(const WitnessOperator &w) {
    const Pattern pat = pattern(w.k);
    std::array<ProjectorTerm, 8> out{};
    for (std::size_t t = 0; t < 8; ++t) {
        out[t] = {w.nu[t / 2], pat[t][0], pat[t][1]};
    }
    return out;
}

ComplexMatrix reconstruct(const std::array<ProjectorTerm, 8> &terms) {
    ComplexMatrix sum(4);
    for (const ProjectorTerm &t : terms) {
        sum += t.coefficient *
               tensor_product(projector(t.alice), projector(t.bob));
    }
    return sum;
}

} // namespace imsteer
