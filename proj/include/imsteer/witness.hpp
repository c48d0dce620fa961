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
 * The sixteen witness operators dual to the two-setting imaginarity steering
 * inequality.
 *
 * W~^k_ij = sqrt2 I - W^k_ij with
 *   W^1 = (-1)^i I x sx + (-1)^j I x sy,   W^2 = (-1)^i I x sx + (-1)^j sy x sy,
 *   W^3 = (-1)^i sx x sx + (-1)^j I x sy,  W^4 = (-1)^i sx x sx + (-1)^j sy x sy.
 * Every family picks one of {n1, t11} for the x slot and one of {n2, t22} for
 * the y slot, so min over all sixteen of Tr[W~ rho] equals sqrt2 - I2(rho).
 */

#pragma once

#include <array>
#include <string>

#include "imsteer/linalg.hpp"
#include "imsteer/states.hpp"

namespace imsteer {

struct WitnessOperator {
    int k = 1;
    int i = 0;
    int j = 0;
    ComplexMatrix matrix{4};
    /// nu1..nu4: sqrt2 + (-1)^{i+1}, sqrt2 + (-1)^i, (-1)^{j+1}, (-1)^j.
    std::array<double, 4> nu{};

    /// matrix / (4 sqrt2); unit trace.
    [[nodiscard]] ComplexMatrix normalized() const;
};

/// k in 1..4, i and j in {0, 1}; otherwise Error("invalid witness index").
WitnessOperator build_witness(int k, int i, int j);

/// All sixteen in lexicographic (k, i, j) order.
const std::array<WitnessOperator, 16> &all_witnesses();

/// Tr[w rho], real by construction.
double witness_expectation(const WitnessOperator &w, const DensityMatrix &rho);
/// sqrt2 - ((-1)^i a_k + (-1)^j b_k) from the Fano parameters.
double witness_expectation(const WitnessOperator &w, const BlochTwoQubit &p);

struct WitnessSelection {
    WitnessOperator witness;
    double expectation = 0.0;
};

/// Argmin of the expectation over the sixteen witnesses; ties go to the
/// lexicographically smallest (k, i, j).
WitnessSelection select_witness(const BlochTwoQubit &p);
WitnessSelection select_witness(const DensityMatrix &rho);

enum class ProjectorLabel { ZeroX, OneX, ZeroY, OneY };

std::string label(ProjectorLabel p);
ComplexMatrix projector(ProjectorLabel p);

struct ProjectorTerm {
    double coefficient = 0.0;
    ProjectorLabel alice = ProjectorLabel::ZeroX;
    ProjectorLabel bob = ProjectorLabel::ZeroX;
};

/// Eight weighted local product projectors summing to w.matrix. Each nu
/// multiplies one pair of terms.
std::array<ProjectorTerm, 8> projector_decomposition(const WitnessOperator &w);

ComplexMatrix reconstruct(const std::array<ProjectorTerm, 8> &terms);

} // namespace imsteer
