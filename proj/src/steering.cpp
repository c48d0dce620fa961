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

#include "imsteer/steering.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "imsteer/error.hpp"
#include "imsteer/parallel.hpp"

namespace imsteer {

namespace {

constexpr double kZeroProbability = 1e-12;
constexpr double kUnitTol = 1e-12;
constexpr double kNaqcRelEntropyBound = 2.23;
constexpr double kNaqiRelEntropyBound = 2.02685;
constexpr int kPrescanPoints = 21;

constexpr std::array<Outcome, 2> kOutcomes{Outcome::Plus, Outcome::Minus};

double sign_of(Outcome a) { return a == Outcome::Plus ? 1.0 : -1.0; }

void check_two_qubit(const DensityMatrix &rho) {
    if (rho.dim() != 4) {
        throw Error("two-qubit state required");
    }
}

void check_sharpness(double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw Error("sharpness must lie in [0, 1]");
    }
}

ConditionalBranch make_branch(ComplexMatrix sigma) {
    ConditionalBranch b;
    b.probability = sigma.trace().real();
    if (b.probability > kZeroProbability) {
        b.state = DensityMatrix::assume_valid(sigma * (1.0 / b.probability));
    }
    b.unnormalized = std::move(sigma);
    return b;
}

// Alice's measurement for one triad axis, projective when lambda == 1.
ConditionalEnsemble condition(const DensityMatrix &rho, const Vec3 &axis,
                              double sharpness) {
    const auto meas = ProjectiveMeasurement::along(axis);
    if (sharpness == 1.0) {
        return condition_on(rho, meas);
    }
    return condition_on_unsharp(rho, UnsharpMeasurement(meas, sharpness));
}

using Rotation = std::array<Vec3, 3>; // rows

Rotation euler_rotation(const std::array<double, 3> &angles) {
    const double ca = std::cos(angles[0]);
    const double sa = std::sin(angles[0]);
    const double cb = std::cos(angles[1]);
    const double sb = std::sin(angles[1]);
    const double cg = std::cos(angles[2]);
    const double sg = std::sin(angles[2]);
    // Rz(a) Ry(b) Rz(g)
    return {{{ca * cb * cg - sa * sg, -ca * cb * sg - sa * cg, ca * sb},
             {sa * cb * cg + ca * sg, -sa * cb * sg + ca * cg, sa * sb},
             {-sb * cg, sb * sg, cb}}};
}

ComplexMatrix euler_unitary(const std::array<double, 3> &angles) {
    const auto rz = [](double a) {
        return ComplexMatrix{{std::polar(1.0, -a / 2.0), 0.0},
                             {0.0, std::polar(1.0, a / 2.0)}};
    };
    const double c = std::cos(angles[1] / 2.0);
    const double s = std::sin(angles[1] / 2.0);
    const ComplexMatrix ry{{c, -s}, {s, c}};
    return rz(angles[0]) * ry * rz(angles[2]);
}

const std::array<QubitBasis, 3> &canonical_bob_triad() {
    static const std::array<QubitBasis, 3> triad = [] {
        const double h = std::numbers::sqrt2 / 2.0;
        return std::array<QubitBasis, 3>{
            QubitBasis::y(), QubitBasis::z(),
            QubitBasis({h, h}, {Complex(0.0, h), Complex(0.0, -h)})};
    }();
    return triad;
}

} // namespace

ProjectiveMeasurement ProjectiveMeasurement::along(const Vec3 &direction) {
    const double norm =
        std::sqrt(direction[0] * direction[0] + direction[1] * direction[1] +
                  direction[2] * direction[2]);
    if (std::abs(norm - 1.0) > kUnitTol) {
        throw Error("measurement direction must be a unit vector");
    }
    return ProjectiveMeasurement(direction);
}

ComplexMatrix ProjectiveMeasurement::projector(Outcome a) const {
    return 0.5 * (ComplexMatrix::identity(2) + sign_of(a) * bloch_operator(dir_));
}

UnsharpMeasurement::UnsharpMeasurement(const ProjectiveMeasurement &sharp,
                                       double sharpness)
    : sharp_(sharp), lambda_(sharpness) {
    check_sharpness(sharpness);
}

ComplexMatrix UnsharpMeasurement::effect(Outcome a) const {
    return lambda_ * sharp_.projector(a) +
           (1.0 - lambda_) * 0.5 * ComplexMatrix::identity(2);
}

ConditionalEnsemble condition_on(const DensityMatrix &rho,
                                 const ProjectiveMeasurement &meas) {
    check_two_qubit(rho);
    const ComplexMatrix &id = pauli(0);
    ConditionalEnsemble out;
    for (Outcome a : kOutcomes) {
        const ComplexMatrix lifted = tensor_product(meas.projector(a), id);
        out.branches[static_cast<std::size_t>(a)] =
            make_branch(partial_trace(lifted * rho.matrix(), Keep::B));
    }
    return out;
}

ConditionalEnsemble condition_on_unsharp(const DensityMatrix &rho,
                                         const UnsharpMeasurement &meas) {
    check_two_qubit(rho);
    const ComplexMatrix &id = pauli(0);
    ConditionalEnsemble out;
    for (Outcome a : kOutcomes) {
        const ComplexMatrix root =
            tensor_product(psd_sqrt(meas.effect(a)), id);
        out.branches[static_cast<std::size_t>(a)] =
            make_branch(partial_trace(root * rho.matrix() * root, Keep::B));
    }
    return out;
}

double weighted_robustness(const ConditionalBranch &branch,
                           const QubitBasis &basis) {
    return robustness_of_imaginarity(branch.unnormalized, basis);
}

double isi_from_ensembles(const ConditionalEnsemble &given_y,
                          const ConditionalEnsemble &given_x) {
    double total = 0.0;
    for (Outcome a : kOutcomes) {
        total += weighted_robustness(given_y[a], QubitBasis::x());
        total += weighted_robustness(given_x[a], QubitBasis::y());
    }
    return total;
}

double isi_operational(const DensityMatrix &rho) {
    return isi_from_ensembles(condition_on(rho, ProjectiveMeasurement::y()),
                              condition_on(rho, ProjectiveMeasurement::x()));
}

double isi_closed(const BlochTwoQubit &p) {
    const double n1 = p.n[0];
    const double n2 = p.n[1];
    const double t11 = p.t[0][0];
    const double t22 = p.t[1][1];
    return 0.5 * (std::abs(n1 - t11) + std::abs(n1 + t11) +
                  std::abs(n2 - t22) + std::abs(n2 + t22));
}

bool isi_violated(const DensityMatrix &rho) {
    return isi_operational(rho) > kIsiBound + kViolationMargin;
}

double isi_unsharp(const DensityMatrix &rho, double sharpness) {
    const UnsharpMeasurement y(ProjectiveMeasurement::y(), sharpness);
    const UnsharpMeasurement x(ProjectiveMeasurement::x(), sharpness);
    return isi_from_ensembles(condition_on_unsharp(rho, y),
                              condition_on_unsharp(rho, x));
}

double correlator(const DensityMatrix &rho, const Vec3 &alice,
                  const Vec3 &bob, double sharpness) {
    check_two_qubit(rho);
    check_sharpness(sharpness);
    // E_+ - E_- = lambda a.s
    const ComplexMatrix op = tensor_product(
        sharpness * bloch_operator(alice), bloch_operator(bob));
    return real_trace_product(op, rho.matrix());
}

double cffw_value(const DensityMatrix &rho, const ProjectiveMeasurement &a1,
                  const ProjectiveMeasurement &a2,
                  const ProjectiveMeasurement &b1,
                  const ProjectiveMeasurement &b2, double sharpness) {
    const Vec3 &u = b1.direction();
    const Vec3 &w = b2.direction();
    if (std::abs(u[0] * w[0] + u[1] * w[1] + u[2] * w[2]) > kUnitTol) {
        throw Error("Bob's settings must be orthogonal");
    }
    const auto c = [&](const ProjectiveMeasurement &a,
                       const ProjectiveMeasurement &b) {
        return correlator(rho, a.direction(), b.direction(), sharpness);
    };
    const double s1 = c(a1, b1) + c(a2, b1);
    const double s2 = c(a1, b2) + c(a2, b2);
    const double d1 = c(a1, b1) - c(a2, b1);
    const double d2 = c(a1, b2) - c(a2, b2);
    return std::hypot(s1, s2) + std::hypot(d1, d2);
}

CriterionValue cffw_canonical(const DensityMatrix &rho, double sharpness) {
    const auto x = ProjectiveMeasurement::x();
    const auto y = ProjectiveMeasurement::y();
    return {cffw_value(rho, x, y, x, y, sharpness), 2.0};
}

double naqc_bound(CoherenceMeasure g) {
    switch (g) {
    case CoherenceMeasure::L1:
        return std::sqrt(6.0);
    case CoherenceMeasure::RelativeEntropy:
        return kNaqcRelEntropyBound;
    case CoherenceMeasure::Skew:
        return 2.0;
    }
    throw Error("unknown coherence measure");
}

double naqi_bound(ImaginarityMeasure g) {
    switch (g) {
    case ImaginarityMeasure::L1:
        return std::sqrt(5.0);
    case ImaginarityMeasure::RelativeEntropy:
        return kNaqiRelEntropyBound;
    }
    throw Error("unknown imaginarity measure");
}

CriterionValue naqc_value(const DensityMatrix &rho, CoherenceMeasure g,
                          double sharpness) {
    constexpr std::array<Axis, 3> axes{Axis::X, Axis::Y, Axis::Z};
    constexpr std::array<Vec3, 3> directions{
        {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};
    double total = 0.0;
    for (std::size_t j = 0; j < 3; ++j) {
        const ConditionalEnsemble ens =
            condition(rho, directions[j], sharpness);
        for (Outcome a : kOutcomes) {
            const ConditionalBranch &branch = ens[a];
            if (!branch.state) {
                continue;
            }
            for (std::size_t i = 0; i < 3; ++i) {
                if (i != j) {
                    total += branch.probability *
                             coherence_measure(*branch.state, axes[i], g);
                }
            }
        }
    }
    return {0.5 * total, naqc_bound(g)};
}

double naqi_functional(const DensityMatrix &rho, ImaginarityMeasure g,
                       const NaqiSettings &settings, double sharpness) {
    const Rotation r = euler_rotation(settings.alice_angles);
    const ComplexMatrix u = euler_unitary(settings.bob_angles);
    const auto &bob = canonical_bob_triad();
    double total = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        const Vec3 axis{r[0][i], r[1][i], r[2][i]};
        const ConditionalEnsemble ens = condition(rho, axis, sharpness);
        const QubitBasis basis = bob[i].rotated(u);
        for (Outcome a : kOutcomes) {
            const ConditionalBranch &branch = ens[a];
            if (branch.state) {
                total += branch.probability *
                         imaginarity_measure(*branch.state, basis, g);
            }
        }
    }
    return total;
}

NaqiResult naqi_value(const DensityMatrix &rho, ImaginarityMeasure g,
                      const NaqiOptions &options, double sharpness) {
    check_two_qubit(rho);
    NaqiResult result;
    result.bound = naqi_bound(g);
    result.canonical_value = naqi_functional(rho, g, {}, sharpness);
    result.value = result.canonical_value;
    if (!options.optimize) {
        return result;
    }
    if (options.grid < 2 || !(options.final_step > 0.0)) {
        throw Error("invalid NAQI search options");
    }
    result.optimized = true;

    const int n = options.grid;
    const double two_pi = 2.0 * std::numbers::pi;
    const auto grid_angles = [n, two_pi](std::size_t index) {
        const auto ia = static_cast<int>(index) / (n * n);
        const auto ib = (static_cast<int>(index) / n) % n;
        const auto ig = static_cast<int>(index) % n;
        return std::array<double, 3>{two_pi * ia / n,
                                     std::numbers::pi * ib / (n - 1),
                                     two_pi * ig / n};
    };
    const auto total = static_cast<std::size_t>(n) * n * n;

    NaqiSettings best{};
    double best_value = result.canonical_value;

    // Coarse grid over one triad at a time, reduced in index order.
    for (int stage = 0; stage < 2; ++stage) {
        std::vector<double> values(total);
        const NaqiSettings base = best;
        parallel_for(
            total,
            [&](std::size_t k) {
                NaqiSettings s = base;
                (stage == 0 ? s.alice_angles : s.bob_angles) = grid_angles(k);
                values[k] = naqi_functional(rho, g, s, sharpness);
            },
            options.threads);
        for (std::size_t k = 0; k < total; ++k) {
            if (values[k] > best_value) {
                best_value = values[k];
                best = base;
                (stage == 0 ? best.alice_angles : best.bob_angles) =
                    grid_angles(k);
            }
        }
    }

    // Coordinate descent over all six angles.
    double step = two_pi / n;
    while (step >= options.final_step) {
        bool improved = false;
        for (std::size_t coord = 0; coord < 6; ++coord) {
            for (double direction : {1.0, -1.0}) {
                NaqiSettings trial = best;
                double &angle = coord < 3 ? trial.alice_angles[coord]
                                          : trial.bob_angles[coord - 3];
                angle += direction * step;
                const double v = naqi_functional(rho, g, trial, sharpness);
                if (v > best_value + 1e-15) {
                    best_value = v;
                    best = trial;
                    improved = true;
                }
            }
        }
        if (!improved) {
            step /= 2.0;
        }
    }

    result.value = best_value;
    result.settings = best;
    return result;
}

std::string Criterion::name() const {
    switch (kind) {
    case CriterionKind::Isi:
        return "isi";
    case CriterionKind::Cffw:
        return "cffw";
    case CriterionKind::Naqc:
        switch (coherence) {
        case CoherenceMeasure::L1:
            return "naqc_l1";
        case CoherenceMeasure::RelativeEntropy:
            return "naqc_rel_entropy";
        case CoherenceMeasure::Skew:
            return "naqc_skew";
        }
        break;
    case CriterionKind::Naqi:
        return imaginarity == ImaginarityMeasure::L1 ? "naqi_l1"
                                                     : "naqi_rel_entropy";
    }
    throw Error("unknown criterion");
}

Criterion Criterion::parse(const std::string &name) {
    Criterion c;
    if (name == "isi") {
        c.kind = CriterionKind::Isi;
    } else if (name == "cffw") {
        c.kind = CriterionKind::Cffw;
    } else if (name == "naqc_l1") {
        c.kind = CriterionKind::Naqc;
    } else if (name == "naqc_rel_entropy") {
        c.kind = CriterionKind::Naqc;
        c.coherence = CoherenceMeasure::RelativeEntropy;
    } else if (name == "naqc_skew") {
        c.kind = CriterionKind::Naqc;
        c.coherence = CoherenceMeasure::Skew;
    } else if (name == "naqi_l1") {
        c.kind = CriterionKind::Naqi;
    } else if (name == "naqi_rel_entropy") {
        c.kind = CriterionKind::Naqi;
        c.imaginarity = ImaginarityMeasure::RelativeEntropy;
    } else {
        throw Error("unknown criterion '" + name + "'");
    }
    return c;
}

CriterionValue evaluate(const Criterion &c, const DensityMatrix &rho,
                        double sharpness) {
    switch (c.kind) {
    case CriterionKind::Isi:
        return {sharpness == 1.0 ? isi_operational(rho)
                                 : isi_unsharp(rho, sharpness),
                kIsiBound};
    case CriterionKind::Cffw:
        return cffw_canonical(rho, sharpness);
    case CriterionKind::Naqc:
        return naqc_value(rho, c.coherence, sharpness);
    case CriterionKind::Naqi: {
        const NaqiResult r = naqi_value(rho, c.imaginarity, {}, sharpness);
        return {r.value, r.bound};
    }
    }
    throw Error("unknown criterion");
}

CriterionCurve werner_curve(const Criterion &c) {
    return [c](double v) { return evaluate(c, werner(v)); };
}

CriterionCurve unsharp_singlet_curve(const Criterion &c) {
    return [c](double lambda) { return evaluate(c, singlet(), lambda); };
}

double threshold_scan(const CriterionCurve &curve, double tol) {
    if (!(tol > 0.0)) {
        throw Error("tolerance must be positive");
    }
    const auto excess = [&](double p) {
        const CriterionValue cv = curve(p);
        return cv.value - cv.bound;
    };
    std::array<double, kPrescanPoints> points{};
    std::array<bool, kPrescanPoints> above{};
    for (int k = 0; k < kPrescanPoints; ++k) {
        const auto sk = static_cast<std::size_t>(k);
        points[sk] = static_cast<double>(k) / (kPrescanPoints - 1);
        above[sk] = excess(points[sk]) > 0.0;
    }
    int changes = 0;
    std::size_t bracket = 0;
    for (std::size_t k = 0; k + 1 < points.size(); ++k) {
        if (above[k] != above[k + 1]) {
            ++changes;
            bracket = k;
        }
    }
    if (changes == 0) {
        throw Error("no threshold in range");
    }
    if (changes > 1) {
        throw Error("criterion is not monotone on [0, 1]");
    }
    double lo = points[bracket];
    double hi = points[bracket + 1];
    const bool lo_above = above[bracket];
    while (hi - lo >= tol) {
        const double mid = 0.5 * (lo + hi);
        if ((excess(mid) > 0.0) == lo_above) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace imsteer
