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


#pragma once

#include <doctest.h>

#include "imsteer/linalg.hpp"
#include "imsteer/random.hpp"

namespace testing {

using imsteer::Complex;
using imsteer::ComplexMatrix;

inline ComplexMatrix random_matrix(std::size_t dim, imsteer::Rng &rng) {
    ComplexMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            m(r, c) = rng.complex_normal();
        }
    }
    return m;
}

inline ComplexMatrix random_hermitian(std::size_t dim, imsteer::Rng &rng) {
    const ComplexMatrix g = random_matrix(dim, rng);
    return 0.5 * (g + g.adjoint());
}

inline void check_near(const ComplexMatrix &a, const ComplexMatrix &b,
                       double tol) {
    REQUIRE(a.dim() == b.dim());
    CHECK(imsteer::max_abs_diff(a, b) < tol);
}

} // namespace testing
