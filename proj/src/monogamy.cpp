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

#include "imsteer/monogamy.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "imsteer/error.hpp"
#include "imsteer/parallel.hpp"
#include "imsteer/random.hpp"

namespace imsteer {

namespace {

constexpr double kZeroProbability = 1e-12;
constexpr std::uint64_t kBlockSize = 4096;

// With the traced qubit at 0 the pair is u = (e0, 0, e1 e^{i theta}, u11);
// at 1 it is w = (0, 0, w10, e4). eta2 and eta3 swap roles between AB and AC.
struct PairEtas {
    double e0, e1, w10, u11, e4;
};

PairEtas pair_etas(const TripartiteParams &p, Pair pair) {
    const auto &e = p.eta;
    return pair == Pair::AB ? PairEtas{e[0], e[1], e[2], e[3], e[4]}
                            : PairEtas{e[0], e[1], e[3], e[2], e[4]};
}

// 2 p(a|axis) and |numerator| = p(a|axis) I(rho_{a|axis}).
double twice_probability(const TripartiteParams &p, AliceAxis axis,
                         bool plus) {
    const double s = plus ? 1.0 : -1.0;
    const double trig =
        axis == AliceAxis::X ? std::cos(p.theta) : std::sin(p.theta);
    return 1.0 + s * 2.0 * p.eta[0] * p.eta[1] * trig;
}

double weighted_term(const TripartiteParams &p, Pair pair, AliceAxis axis,
                     bool plus) {
    const PairEtas e = pair_etas(p, pair);
    const double s = plus ? 1.0 : -1.0;
    if (axis == AliceAxis::X) {
        return std::abs(e.w10 * e.e4 +
                        e.u11 * (e.e1 * std::cos(p.theta) + s * e.e0));
    }
    return std::abs(e.u11 * (e.e1 * std::sin(p.theta) + s * e.e0));
}

ComplexMatrix pair_matrix(const TripartiteParams &p, Pair pair) {
    const PairEtas e = pair_etas(p, pair);
    const Complex phase = std::polar(e.e1, p.theta);
    const std::array<Complex, 4> u{e.e0, 0.0, phase, e.u11};
    const std::array<Complex, 4> w{0.0, 0.0, e.w10, e.e4};
    return ComplexMatrix::outer(u) + ComplexMatrix::outer(w);
}

} // namespace

std::pair<DensityMatrix, DensityMatrix> reduced_pair(const TripartiteParams &p) {
    check_tripartite(p);
    return {DensityMatrix::assume_valid(pair_matrix(p, Pair::AB)),
            DensityMatrix::assume_valid(pair_matrix(p, Pair::AC))};
}

std::optional<double> tripartite_conditional_imaginarity(
    const TripartiteParams &p, Pair pair, AliceAxis axis, bool plus) {
    check_tripartite(p);
    const double denom = twice_probability(p, axis, plus);
    if (denom <= kZeroProbability) {
        return std::nullopt;
    }
    return 2.0 * weighted_term(p, pair, axis, plus) / denom;
}

MonogamySum monogamy_sum(const TripartiteParams &p) {
    check_tripartite(p);
    const auto i2 = [&p](Pair pair) {
        double total = 0.0;
        for (AliceAxis axis : {AliceAxis::X, AliceAxis::Y}) {
            for (bool plus : {true, false}) {
                total += weighted_term(p, pair, axis, plus);
            }
        }
        return total;
    };
    MonogamySum out;
    out.i2ab = i2(Pair::AB);
    out.i2ac = i2(Pair::AC);
    out.sum = out.i2ab + out.i2ac;
    return out;
}

TripartiteParams monogamy_maximizer() {
    TripartiteParams p;
    p.eta = {std::numbers::sqrt2 / 2.0, 0.0, 0.5, 0.5, 0.0};
    return p;
}

TripartiteParams sample_tripartite(Rng &rng) {
    TripartiteParams p;
    double norm2 = 0.0;
    for (double &e : p.eta) {
        e = std::abs(rng.normal());
        norm2 += e * e;
    }
    const double norm = std::sqrt(norm2);
    for (double &e : p.eta) {
        e /= norm;
    }
    p.theta = std::numbers::pi * rng.uniform();
    return p;
}

MonogamyScan monogamy_scan(std::uint64_t n, std::uint64_t seed,
                           bool include_maximizer, unsigned threads) {
    if (n == 0) {
        throw Error("sample count must be at least 1");
    }
    const std::uint64_t blocks = (n + kBlockSize - 1) / kBlockSize;
    std::vector<MonogamyScan> partial(blocks);
    parallel_for(
        blocks,
        [&](std::size_t b) {
            Rng rng(derive_seed(seed, b));
            const std::uint64_t begin = b * kBlockSize;
            const std::uint64_t end = std::min(n, begin + kBlockSize);
            MonogamyScan best;
            best.max_sum = -1.0;
            for (std::uint64_t s = begin; s < end; ++s) {
                const TripartiteParams p = sample_tripartite(rng);
                const double v = monogamy_sum(p).sum;
                if (v > best.max_sum) {
                    best.max_sum = v;
                    best.argmax = p;
                }
            }
            best.samples = end - begin;
            partial[b] = best;
        },
        threads);

    MonogamyScan out;
    out.max_sum = -1.0;
    if (include_maximizer) {
        out.argmax = monogamy_maximizer();
        out.max_sum = monogamy_sum(out.argmax).sum;
    }
    for (const MonogamyScan &b : partial) {
        if (b.max_sum > out.max_sum) {
            out.max_sum = b.max_sum;
            out.argmax = b.argmax;
        }
        out.samples += b.samples;
    }
    return out;
}

} // namespace imsteer
