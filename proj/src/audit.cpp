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

#include "imsteer/audit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "imsteer/error.hpp"
#include "imsteer/imaginarity.hpp"
#include "imsteer/monogamy.hpp"
#include "imsteer/parallel.hpp"
#include "imsteer/random.hpp"
#include "imsteer/steering.hpp"
#include "imsteer/witness.hpp"

namespace imsteer {

namespace {

constexpr std::uint64_t kBlockSize = 1024;
constexpr double kTolerance = 1e-9;

using SampleResidual = std::function<double(Rng &)>;

double separable_residual(Rng &rng) {
    return isi_operational(sample_state(StateKind::Separable4, rng)) - kIsiBound;
}

double convexity_residual(Rng &rng) {
    const DensityMatrix a = sample_state(StateKind::Mixed4, rng);
    const DensityMatrix b = sample_state(StateKind::Mixed4, rng);
    const double alpha = rng.uniform();
    return isi_operational(mix(alpha, a, b)) -
           (alpha * isi_operational(a) + (1.0 - alpha) * isi_operational(b));
}

double duality_residual(Rng &rng) {
    const DensityMatrix rho = sample_state(StateKind::Mixed4, rng);
    double min_expectation = std::numeric_limits<double>::infinity();
    for (const WitnessOperator &w : all_witnesses()) {
        min_expectation = std::min(min_expectation, witness_expectation(w, rho));
    }
    return std::abs(min_expectation - (kIsiBound - isi_operational(rho)));
}

double complementarity_residual(Rng &rng) {
    return complementarity_sum_xy(sample_state(StateKind::Qubit, rng)) -
           kIsiBound;
}

double closed_form_residual(Rng &rng) {
    const DensityMatrix rho = sample_state(StateKind::Mixed4, rng);
    const double two_qubit =
        std::abs(isi_operational(rho) - isi_closed(to_bloch(rho)));
    const TripartiteParams p = sample_tripartite(rng);
    const auto [ab, ac] = reduced_pair(p);
    const MonogamySum closed = monogamy_sum(p);
    const double tripartite =
        std::max(std::abs(isi_operational(ab) - closed.i2ab),
                 std::abs(isi_operational(ac) - closed.i2ac));
    return std::max(two_qubit, tripartite);
}

SampleResidual suite_residual(const std::string &suite) {
    if (suite == "separable") {
        return separable_residual;
    }
    if (suite == "convexity") {
        return convexity_residual;
    }
    if (suite == "duality") {
        return duality_residual;
    }
    if (suite == "complementarity") {
        return complementarity_residual;
    }
    if (suite == "closed_form") {
        return closed_form_residual;
    }
    throw Error("unknown audit suite '" + suite + "'");
}

} // namespace

const std::vector<std::string> &audit_suites() {
    static const std::vector<std::string> suites{
        "separable", "convexity", "duality", "complementarity", "closed_form"};
    return suites;
}

AuditResult run_audit(const std::string &suite, std::uint64_t n,
                      std::uint64_t seed, unsigned threads) {
    const SampleResidual residual = suite_residual(suite);
    if (n == 0) {
        throw Error("sample count must be at least 1");
    }
    const std::uint64_t blocks = (n + kBlockSize - 1) / kBlockSize;
    std::vector<double> worst(blocks, -std::numeric_limits<double>::infinity());
    parallel_for(
        blocks,
        [&](std::size_t b) {
            Rng rng(derive_seed(seed, b));
            const std::uint64_t end = std::min(n, (b + 1) * kBlockSize);
            for (std::uint64_t s = b * kBlockSize; s < end; ++s) {
                worst[b] = std::max(worst[b], residual(rng));
            }
        },
        threads);

    AuditResult out;
    out.suite = suite;
    out.samples = n;
    out.tolerance = kTolerance;
    out.worst = *std::max_element(worst.begin(), worst.end());
    out.passed = out.worst <= kTolerance;
    return out;
}

} // namespace imsteer
