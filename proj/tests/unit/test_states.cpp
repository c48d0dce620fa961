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


#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../oracles.hpp"
#include "helpers.hpp"
#include "imsteer/error.hpp"
#include "imsteer/random.hpp"
#include "imsteer/states.hpp"

using namespace imsteer;
using testing::check_near;

namespace {

BlochTwoQubit diag_t(double t1, double t2, double t3) {
    BlochTwoQubit p;
    p.t[0][0] = t1;
    p.t[1][1] = t2;
    p.t[2][2] = t3;
    return p;
}

} // namespace

TEST_SUITE("states") {

TEST_CASE("validation diagnostics") {
    CHECK(validate(0.25 * ComplexMatrix::identity(4)).passed);
    CHECK(validate(werner(0.7).matrix()).passed);

    const ValidationReport bad = validate(from_bloch(diag_t(1.0, 1.0, 1.0)));
    CHECK_FALSE(bad.passed);
    CHECK(bad.min_eigenvalue == doctest::Approx(-0.5).epsilon(1e-12));

    ComplexMatrix skewed = 0.5 * ComplexMatrix::identity(2);
    skewed(0, 1) = 0.1;
    CHECK_FALSE(validate(skewed).passed);
    CHECK_THROWS_AS(DensityMatrix{skewed}, Error);
    CHECK_THROWS_AS(DensityMatrix{ComplexMatrix::identity(2)}, Error);
}

TEST_CASE("Fano form of basic states") {
    check_near(from_bloch({}), 0.25 * ComplexMatrix::identity(4), 1e-15);
    for (double v : {0.0, 0.3, 1.0}) {
        check_near(from_bloch(diag_t(-v, -v, -v)), werner(v).matrix(), 1e-15);
    }
    const BlochTwoQubit s = to_bloch(singlet());
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(std::abs(s.m[i]) < 1e-15);
        CHECK(std::abs(s.n[i]) < 1e-15);
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(s.t[i][j] == doctest::Approx(i == j ? -1.0 : 0.0));
        }
    }
    CHECK_THROWS_WITH_AS(from_bloch(diag_t(1.5, 0.0, 0.0)),
                         "bloch out of range", Error);
}

TEST_CASE("Fano parameters round-trip through random states") {
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const DensityMatrix rho = sample_state(StateKind::Mixed4, rng);
        check_near(from_bloch(to_bloch(rho)), rho.matrix(), 1e-13);
    }
}

TEST_CASE("Werner state") {
    check_near(werner(0.0).matrix(), 0.25 * ComplexMatrix::identity(4), 1e-15);
    check_near(werner(1.0).matrix(),
               ComplexMatrix::outer(singlet_ket()), 1e-15);
    const auto spectrum = hermitian_eigenvalues(werner(0.5).matrix());
    CHECK(spectrum[0] == doctest::Approx(0.125));
    CHECK(spectrum[1] == doctest::Approx(0.125));
    CHECK(spectrum[2] == doctest::Approx(0.125));
    CHECK(spectrum[3] == doctest::Approx(0.625));
    CHECK_THROWS_AS(werner(1.1), Error);
    CHECK_THROWS_AS(werner(-0.1), Error);
}

TEST_CASE("X-state parameterisation") {
    check_near(x_state({}).matrix(), 0.25 * ComplexMatrix::identity(4), 1e-15);

    XStateParams phi_plus;
    phi_plus.beta_xx = 1.0;
    phi_plus.beta_yy = -1.0;
    phi_plus.beta_zz = 1.0;
    const double h = std::sqrt(0.5);
    check_near(x_state(phi_plus).matrix(),
               ComplexMatrix::outer(std::array<Complex, 4>{h, 0.0, 0.0, h}),
               1e-15);

    XStateParams psi_plus;
    psi_plus.beta_xx = 1.0;
    psi_plus.beta_yy = 1.0;
    psi_plus.beta_zz = -1.0;
    check_near(x_state(psi_plus).matrix(),
               ComplexMatrix::outer(std::array<Complex, 4>{0.0, h, h, 0.0}),
               1e-15);

    XStateParams bad;
    bad.beta_xx = 1.0;
    bad.beta_yy = 1.0;
    CHECK_THROWS_WITH_AS(x_state(bad), "invalid X-state parameters", Error);
}

TEST_CASE("X-state Fano parameters") {
    XStateParams p;
    p.beta_z0 = 0.1;
    p.beta_0z = -0.2;
    p.beta_xx = 0.3;
    p.beta_xy = 0.15;
    p.beta_yx = -0.05;
    p.beta_yy = -0.25;
    p.beta_zz = 0.05;
    const DensityMatrix rho = x_state(p);
    const BlochTwoQubit b = to_bloch(rho);
    CHECK(b.m[2] == doctest::Approx(p.beta_z0));
    CHECK(b.n[2] == doctest::Approx(p.beta_0z));
    CHECK(b.n[0] == doctest::Approx(0.0));
    CHECK(b.t[0][0] == doctest::Approx(p.beta_xx));
    CHECK(b.t[0][1] == doctest::Approx(p.beta_xy));
    CHECK(b.t[1][0] == doctest::Approx(p.beta_yx));
    CHECK(b.t[1][1] == doctest::Approx(p.beta_yy));
    CHECK(b.t[2][2] == doctest::Approx(p.beta_zz));

    const XStateParams back = x_state_params(rho.matrix());
    CHECK(back.beta_xy == doctest::Approx(p.beta_xy));
    CHECK(back.beta_yx == doctest::Approx(p.beta_yx));
    CHECK(back.beta_zz == doctest::Approx(p.beta_zz));
}

TEST_CASE("maximally entangled mixed states") {
    CHECK(mems_h(0.5) == doctest::Approx(1.0 / 3.0));
    CHECK(mems_h(0.8) == doctest::Approx(0.4));

    const ComplexMatrix half = mems(0.5).matrix();
    CHECK(half(0, 0).real() == doctest::Approx(1.0 / 3.0));
    CHECK(half(1, 1).real() == doctest::Approx(1.0 / 3.0));
    CHECK(half(2, 2).real() == doctest::Approx(0.0));
    CHECK(half(0, 3).real() == doctest::Approx(0.25));

    const ComplexMatrix m8 = mems(0.8).matrix();
    CHECK(m8(0, 0).real() == doctest::Approx(0.4));
    CHECK(m8(1, 1).real() == doctest::Approx(0.2));
    CHECK(m8(3, 3).real() == doctest::Approx(0.4));

    const double h = std::sqrt(0.5);
    check_near(mems(1.0).matrix(),
               ComplexMatrix::outer(std::array<Complex, 4>{h, 0.0, 0.0, h}),
               1e-15);

    for (double c : {0.0, 0.3, 2.0 / 3.0, 0.8, 0.95, 1.0}) {
        check_near(x_state(mems_params(c)).matrix(), mems(c).matrix(), 1e-15);
        CHECK(validate(mems(c).matrix()).passed);
        CHECK(oracle::x_state_concurrence(mems(c).matrix()) ==
              doctest::Approx(c).epsilon(1e-12));
    }
    CHECK_THROWS_AS(mems(1.2), Error);
}

TEST_CASE("three-qubit pure state family") {
    const double h = std::sqrt(0.5);
    TripartiteParams ghz;
    ghz.eta = {h, 0.0, 0.0, 0.0, h};
    ComplexMatrix expected(8);
    expected(0, 0) = 0.5;
    expected(0, 7) = 0.5;
    expected(7, 0) = 0.5;
    expected(7, 7) = 0.5;
    check_near(tripartite_state(ghz).matrix(), expected, 1e-15);

    TripartiteParams w;
    const double t = 1.0 / std::sqrt(3.0);
    w.eta = {0.0, t, t, t, 0.0};
    const DensityMatrix rho = tripartite_state(w);
    CHECK(validate(rho.matrix()).passed);
    CHECK(std::abs((rho.matrix() * rho.matrix()).trace() - 1.0) < 1e-12);

    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        TripartiteParams p;
        double norm2 = 0.0;
        for (double &e : p.eta) {
            e = rng.uniform();
            norm2 += e * e;
        }
        for (double &e : p.eta) {
            e /= std::sqrt(norm2);
        }
        p.theta = std::numbers::pi * rng.uniform();
        const ComplexMatrix m = tripartite_state(p).matrix();
        CHECK(std::abs(m.trace() - 1.0) < 1e-12);
        CHECK(std::abs((m * m).trace() - 1.0) < 1e-12);
    }

    TripartiteParams unnormalised;
    unnormalised.eta = {1.0, 1.0, 0.0, 0.0, 0.0};
    CHECK_THROWS_WITH_AS(tripartite_state(unnormalised), "eta not normalised",
                         Error);
}

TEST_CASE("random state samplers") {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const DensityMatrix q = sample_state(StateKind::Qubit, rng);
        const Vec3 n = bloch_vector(q.matrix());
        CHECK(n[0] * n[0] + n[1] * n[1] + n[2] * n[2] <= 1.0 + 1e-12);

        const DensityMatrix mixed = sample_state(StateKind::Mixed4, rng);
        const auto spectrum = hermitian_eigenvalues(mixed.matrix());
        CHECK(spectrum.front() >= -1e-12);
        CHECK(std::abs(mixed.matrix().trace() - 1.0) < 1e-12);

        const DensityMatrix sep = sample_state(StateKind::Separable4, rng);
        CHECK(validate(sep.matrix()).passed);
        CHECK(oracle::partial_transpose_determinant(sep.matrix()) >= -1e-12);

        const DensityMatrix prod = sample_state(StateKind::Product4, rng);
        check_near(tensor_product(partial_trace(prod.matrix(), Keep::A),
                                  partial_trace(prod.matrix(), Keep::B)),
                   prod.matrix(), 1e-13);

        const DensityMatrix pure = sample_state(StateKind::Pure4, rng);
        CHECK(std::abs((pure.matrix() * pure.matrix()).trace() - 1.0) < 1e-12);
    }
}

TEST_CASE("samplers are deterministic for a fixed seed") {
    for (StateKind kind : {StateKind::Pure4, StateKind::Mixed4,
                           StateKind::Product4, StateKind::Separable4,
                           StateKind::Qubit}) {
        CHECK(max_abs_diff(sample_state(kind, 99).matrix(),
                           sample_state(kind, 99).matrix()) == 0.0);
    }
    CHECK(max_abs_diff(sample_state(StateKind::Mixed4, 1).matrix(),
                       sample_state(StateKind::Mixed4, 2).matrix()) > 1e-3);
}

TEST_CASE("mixing") {
    const DensityMatrix m = mix(0.25, singlet(), werner(0.0));
    check_near(m.matrix(), werner(0.25).matrix(), 1e-15);
    CHECK_THROWS_AS(mix(1.5, singlet(), singlet()), Error);
}

} // TEST_SUITE
