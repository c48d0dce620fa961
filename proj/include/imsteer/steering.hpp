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
 * Conditional states prepared at Bob's side by Alice's measurements, and the
 * steering criteria evaluated on them:
 *
 *  - ISI: the two-setting imaginarity steering functional
 *        I2 = sum_a p(a|y) I_R^x(rho_{a|y}) + sum_a p(a|x) I_R^y(rho_{a|x}),
 *    unsteerable bound sqrt 2, algebraic maximum 2;
 *  - CFFW: the 2-2-2 steering analogue of CHSH, bound 2;
 *  - NAQC: three-setting coherence criterion, bounds sqrt 6, 2.23, 2;
 *  - NAQI: three-setting imaginarity criterion, bounds sqrt 5, 2.02685.
 */

#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "imsteer/imaginarity.hpp"
#include "imsteer/linalg.hpp"
#include "imsteer/states.hpp"

namespace imsteer {

inline constexpr double kIsiBound = 1.4142135623730951;
/// Strict margin used by the boolean violation tests.
inline constexpr double kViolationMargin = 1e-12;

enum class Outcome { Plus = 0, Minus = 1 };

/// Dichotomic spin measurement along a unit Bloch direction.
class ProjectiveMeasurement {
  public:
    /// Throws unless |direction| = 1 within 1e-12.
    static ProjectiveMeasurement along(const Vec3 &direction);
    static ProjectiveMeasurement x() { return along({1.0, 0.0, 0.0}); }
    static ProjectiveMeasurement y() { return along({0.0, 1.0, 0.0}); }
    static ProjectiveMeasurement z() { return along({0.0, 0.0, 1.0}); }

    [[nodiscard]] const Vec3 &direction() const noexcept { return dir_; }
    /// (I +- d.s) / 2.
    [[nodiscard]] ComplexMatrix projector(Outcome a) const;

  private:
    explicit ProjectiveMeasurement(const Vec3 &d) : dir_(d) {}
    Vec3 dir_;
};

/// E_{+-} = lambda Pi_{+-} + (1 - lambda) I/2.
class UnsharpMeasurement {
  public:
    UnsharpMeasurement(const ProjectiveMeasurement &sharp, double sharpness);

    [[nodiscard]] const ProjectiveMeasurement &sharp() const noexcept {
        return sharp_;
    }
    [[nodiscard]] double sharpness() const noexcept { return lambda_; }
    [[nodiscard]] ComplexMatrix effect(Outcome a) const;

  private:
    ProjectiveMeasurement sharp_;
    double lambda_;
};

struct ConditionalBranch {
    double probability = 0.0;
    /// sigma_{a|A}: Bob's unnormalised conditional state.
    ComplexMatrix unnormalized{2};
    /// rho_{a|A}; empty when probability <= 1e-12.
    std::optional<DensityMatrix> state;
};

struct ConditionalEnsemble {
    std::array<ConditionalBranch, 2> branches;

    [[nodiscard]] const ConditionalBranch &operator[](Outcome a) const {
        return branches[static_cast<std::size_t>(a)];
    }
};

/// sigma_a = Tr_A[(Pi_a x I) rho], p(a) = Tr sigma_a, rho_a = sigma_a / p(a).
ConditionalEnsemble condition_on(const DensityMatrix &rho,
                                 const ProjectiveMeasurement &meas);

/// sigma_a = Tr_A[(sqrt E_a x I) rho (sqrt E_a x I)].
ConditionalEnsemble condition_on_unsharp(const DensityMatrix &rho,
                                         const UnsharpMeasurement &meas);

/// p(a) I_R(rho_a) in the given basis, evaluated as I_R(sigma_a) so that a
/// zero-probability branch contributes exactly zero.
double weighted_robustness(const ConditionalBranch &branch,
                           const QubitBasis &basis);

/// ISI functional from the ensembles prepared by Alice's y and x settings.
double isi_from_ensembles(const ConditionalEnsemble &given_y,
                          const ConditionalEnsemble &given_x);

double isi_operational(const DensityMatrix &rho);
/// 1/2 (|n1 - t11| + |n1 + t11| + |n2 - t22| + |n2 + t22|).
double isi_closed(const BlochTwoQubit &p);
/// I2 > sqrt 2 + 1e-12.
bool isi_violated(const DensityMatrix &rho);
/// I2 with Alice's x and y settings replaced by unsharp measurements.
double isi_unsharp(const DensityMatrix &rho, double sharpness);

struct CriterionValue {
    double value = 0.0;
    double bound = 0.0;

    [[nodiscard]] bool violated() const {
        return value > bound + kViolationMargin;
    }
};

/// <(a.s) x (b.s)>, with Alice's observable smeared by the sharpness.
double correlator(const DensityMatrix &rho, const Vec3 &alice,
                  const Vec3 &bob, double sharpness = 1.0);

/// CFFW left-hand side; Bob's two axes must be orthogonal.
double cffw_value(const DensityMatrix &rho, const ProjectiveMeasurement &a1,
                  const ProjectiveMeasurement &a2,
                  const ProjectiveMeasurement &b1,
                  const ProjectiveMeasurement &b2, double sharpness = 1.0);
/// A1 = x, A2 = y, B1 = x, B2 = y; bound 2.
CriterionValue cffw_canonical(const DensityMatrix &rho,
                              double sharpness = 1.0);

double naqc_bound(CoherenceMeasure g);
double naqi_bound(ImaginarityMeasure g);

/// N_3 = 1/2 sum_{i, j != i, a} p(a|j) C_i(rho_{a|j}) over i, j in {x, y, z}.
CriterionValue naqc_value(const DensityMatrix &rho, CoherenceMeasure g,
                          double sharpness = 1.0);

/**
 * Alice's triad (orthonormal axes) and Bob's mutually unbiased triad.
 *
 * Both are the canonical triads rotated by ZYZ Euler angles: Alice's axes by
 * the SO(3) rotation, Bob's basis kets by the SU(2) unitary
 * Rz(alpha) Ry(beta) Rz(gamma). The canonical Bob triad pairs Alice's x with
 * the y basis, y with the z basis and z with {|0_x>, i|1_x>}, so that each
 * Bob basis sees Alice's axis as its imaginary direction.
 */
struct NaqiSettings {
    std::array<double, 3> alice_angles{};
    std::array<double, 3> bob_angles{};
};

struct NaqiOptions {
    /// Evaluate the canonical triads only when false.
    bool optimize = false;
    /// Grid points per Euler angle in the coarse search.
    int grid = 12;
    /// Coordinate descent stops once its step falls below this.
    double final_step = 1e-4;
    unsigned threads = 0;
};

struct NaqiResult {
    /// Canonical value, or the best value found when optimising. Optimised
    /// values are lower bounds on the true supremum.
    double value = 0.0;
    double bound = 0.0;
    double canonical_value = 0.0;
    bool optimized = false;
    NaqiSettings settings{};

    [[nodiscard]] bool violated() const {
        return value > bound + kViolationMargin;
    }
};

/// sum_{i, a} p(a|i) I^g_{M_i}(rho_{a|i}) for one choice of triads.
double naqi_functional(const DensityMatrix &rho, ImaginarityMeasure g,
                       const NaqiSettings &settings, double sharpness = 1.0);

NaqiResult naqi_value(const DensityMatrix &rho, ImaginarityMeasure g,
                      const NaqiOptions &options = {},
                      double sharpness = 1.0);

enum class CriterionKind { Isi, Cffw, Naqc, Naqi };

struct Criterion {
    CriterionKind kind = CriterionKind::Isi;
    CoherenceMeasure coherence = CoherenceMeasure::L1;
    ImaginarityMeasure imaginarity = ImaginarityMeasure::L1;

    /// "isi", "cffw", "naqc_l1", "naqc_rel_entropy", "naqc_skew", "naqi_l1",
    /// "naqi_rel_entropy".
    [[nodiscard]] std::string name() const;
    static Criterion parse(const std::string &name);
};

/// Value and bound of the criterion, with Alice's measurements at the given
/// sharpness (1 = projective). NAQI uses the canonical triads.
CriterionValue evaluate(const Criterion &c, const DensityMatrix &rho,
                        double sharpness = 1.0);

using CriterionCurve = std::function<CriterionValue(double)>;

/// v -> criterion on werner(v).
CriterionCurve werner_curve(const Criterion &c);
/// lambda -> criterion on the singlet measured with sharpness lambda.
CriterionCurve unsharp_singlet_curve(const Criterion &c);

/**
 * Critical parameter in [0, 1] where value - bound changes sign.
 *
 * A 21-point pre-scan must show exactly one sign change (else Error "no
 * threshold in range" or "criterion is not monotone on [0, 1]"); the bracket
 * is then bisected until narrower than tol and its midpoint returned.
 */
double threshold_scan(const CriterionCurve &curve, double tol = 1e-6);

} // namespace imsteer
