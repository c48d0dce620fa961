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
 * Acceptance run. Prints one PASS or FAIL line per criterion and exits
 * nonzero if any criterion fails. Checks never loosen a stated tolerance.
 */

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "imsteer/audit.hpp"
#include "imsteer/imaginarity.hpp"
#include "imsteer/monogamy.hpp"
#include "imsteer/random.hpp"
#include "imsteer/steering.hpp"
#include "imsteer/witness.hpp"

namespace {

using namespace imsteer;

const double kSqrt2 = std::numbers::sqrt2;

/// Collects the failures of one criterion.
class Checks {
  public:
    void expect(bool ok, const std::string &what) {
        if (!ok && failures_.size() < 5) {
            failures_.push_back(what);
        }
        failed_ = failed_ || !ok;
    }

    void near(double got, double want, double tol, const std::string &what) {
        std::ostringstream msg;
        msg.precision(12);
        msg << what << ": got " << got << ", want " << want << " +- " << tol;
        expect(std::abs(got - want) <= tol, msg.str());
    }

    [[nodiscard]] bool failed() const { return failed_; }
    [[nodiscard]] const std::vector<std::string> &failures() const {
        return failures_;
    }

  private:
    bool failed_ = false;
    std::vector<std::string> failures_;
};

struct Requirement {
    std::string title;
    std::function<void(Checks &)> run;
};

void werner_isi(Checks &c) {
    for (double v : {0.0, 0.25, 0.5, 1.0 / kSqrt2, 0.9, 1.0}) {
        c.near(isi_operational(werner(v)), 2.0 * v, 1e-10,
               "I2(werner(" + std::to_string(v) + "))");
    }
    const double t = threshold_scan(werner_curve(Criterion::parse("isi")));
    c.near(t, 0.707107, 1e-6, "isi Werner threshold");
}

void naqc_naqi_thresholds(Checks &c) {
    const double naqc = threshold_scan(werner_curve(Criterion::parse("naqc_l1")));
    c.near(naqc, 0.815, 0.005, "naqc_l1 Werner threshold");
    const double naqi = threshold_scan(werner_curve(Criterion::parse("naqi_l1")));
    c.near(naqi, 0.745, 0.005, "naqi_l1 Werner threshold");
}

void x_state_region(Checks &c) {
    const int n = 201;
    int valid = 0;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const double xx = -1.0 + 2.0 * a / (n - 1);
            const double yy = -1.0 + 2.0 * b / (n - 1);
            const cli::RegionPoint p = cli::region_point(xx, yy);
            if (!p.valid) {
                continue;
            }
            ++valid;
            const DensityMatrix rho = x_state(p.params);
            const double closed = std::abs(xx) + std::abs(yy);
            c.near(isi_operational(rho), closed, 1e-9, "X-state I2");
            c.expect(isi_violated(rho) == (closed > kSqrt2),
                     "violation region mismatch at (" + std::to_string(xx) + ", " +
                         std::to_string(yy) + ")");
        }
    }
    c.expect(valid > n * n / 2, "too few valid X-state grid points");
}

void mems_witness(Checks &c) {
    for (double conc : {0.3, 2.0 / 3.0, 0.8, 1.0}) {
        c.near(isi_operational(mems(conc)), 2.0 * conc, 1e-10,
               "I2(mems(" + std::to_string(conc) + "))");
    }
    for (int step = 1; step <= 200; ++step) {
        const double conc = step / 200.0;
        const WitnessSelection s = select_witness(mems(conc));
        c.expect(s.witness.k == 4 && s.witness.i == 0 && s.witness.j == 1,
                 "selected witness for mems(" + std::to_string(conc) + ")");
        c.expect((s.expectation < 0.0) == (conc > 1.0 / kSqrt2),
                 "sign of the witness expectation at C = " + std::to_string(conc));
    }
}

void witness_duality(Checks &c) {
    Rng rng(derive_seed(2026, 5));
    for (int trial = 0; trial < 10000; ++trial) {
        const DensityMatrix rho = sample_state(StateKind::Mixed4, rng);
        double best = 1e9;
        for (const WitnessOperator &w : all_witnesses()) {
            best = std::min(best, witness_expectation(w, rho));
        }
        c.near(best, kSqrt2 - isi_operational(rho), 1e-9, "witness duality");
    }
    const WitnessOperator w = build_witness(4, 1, 1);
    for (double v : {0.0, 0.3, 0.5, 0.8, 1.0}) {
        c.near(witness_expectation(w, werner(v)), kSqrt2 - 2.0 * v, 1e-12,
               "Werner witness expectation");
    }
}

void projector_decomposition_check(Checks &c) {
    for (const WitnessOperator &w : all_witnesses()) {
        const auto terms = projector_decomposition(w);
        int nonzero = 0;
        for (const ProjectorTerm &t : terms) {
            nonzero += t.coefficient != 0.0;
        }
        c.expect(nonzero == 8, "decomposition needs 8 nonvanishing coefficients");
        c.expect(max_abs_diff(reconstruct(terms), w.matrix) < 1e-12,
                 "reconstruction residual for witness (" + std::to_string(w.k) +
                     "," + std::to_string(w.i) + "," + std::to_string(w.j) + ")");
    }
}

void audited(Checks &c, const std::string &suite, std::uint64_t n) {
    const AuditResult r = run_audit(suite, n, derive_seed(2026, n));
    std::ostringstream msg;
    msg << suite << " worst residual " << r.worst;
    c.expect(r.samples == n, suite + " sample count");
    c.expect(r.worst <= 1e-9, msg.str());
}

void monogamy(Checks &c) {
    const MonogamyScan scan = monogamy_scan(1000000, 2026);
    c.expect(scan.samples == 1000000, "monogamy sample count");
    c.expect(scan.max_sum <= 2.0 * kSqrt2 + 1e-9, "monogamy bound exceeded");
    c.near(monogamy_sum(monogamy_maximizer()).sum, 2.0 * kSqrt2, 1e-12,
           "monogamy maximizer");
    const double h = std::sqrt(0.5);
    const MonogamySum ab = monogamy_sum(TripartiteParams{{h, 0.0, 0.0, h, 0.0}, 0.0});
    c.near(ab.i2ab, 2.0, 1e-12, "I2(AB) at eta0 = eta3");
    const MonogamySum ac = monogamy_sum(TripartiteParams{{h, 0.0, h, 0.0, 0.0}, 0.0});
    c.near(ac.i2ac, 2.0, 1e-12, "I2(AC) at eta0 = eta2");
}

void unsharp(Checks &c) {
    for (double lambda : {0.0, 0.5, 1.0 / kSqrt2, 1.0}) {
        const double value = isi_unsharp(singlet(), lambda);
        c.near(value, 2.0 * lambda, 1e-12, "unsharp singlet I2");
        c.near(value, isi_operational(werner(lambda)), 1e-10,
               "unsharp singlet against Werner");
    }
}

void complementarity(Checks &c) {
    audited(c, "complementarity", 100000);
    const DensityMatrix q = qubit_state({1.0 / kSqrt2, 1.0 / kSqrt2, 0.0});
    c.near(complementarity_sum_xy(q), kSqrt2, 1e-12, "complementarity equality");
}

void cffw(Checks &c) {
    c.near(cffw_canonical(singlet()).value, 2.0 * kSqrt2, 1e-12, "CFFW singlet");
    const double tc = threshold_scan(werner_curve(Criterion::parse("cffw")));
    const double ti = threshold_scan(werner_curve(Criterion::parse("isi")));
    c.near(tc, 1.0 / kSqrt2, 1e-6, "CFFW Werner threshold");
    c.near(ti, 1.0 / kSqrt2, 1e-6, "ISI Werner threshold");
}

} // namespace

int main() {
    const std::vector<Requirement> criteria{
        {"Werner ISI values and threshold", werner_isi},
        {"NAQC and NAQI l1 Werner thresholds", naqc_naqi_thresholds},
        {"X-state closed form and violation region", x_state_region},
        {"MEMS values and witness", mems_witness},
        {"witness duality", witness_duality},
        {"projector decompositions", projector_decomposition_check},
        {"separable states obey the bound",
         [](Checks &c) { audited(c, "separable", 100000); }},
        {"convexity", [](Checks &c) { audited(c, "convexity", 10000); }},
        {"tripartite monogamy", monogamy},
        {"unsharp measurements", unsharp},
        {"complementarity", complementarity},
        {"CFFW cross-check", cffw},
    };

    int failed = 0;
    for (std::size_t idx = 0; idx < criteria.size(); ++idx) {
        const auto start = std::chrono::steady_clock::now();
        Checks checks;
        try {
            criteria[idx].run(checks);
        } catch (const std::exception &e) {
            checks.expect(false, std::string("exception: ") + e.what());
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %zu: %s (%.2fs)\n", checks.failed() ? "FAIL" : "PASS",
                    idx + 1, criteria[idx].title.c_str(), seconds);
        for (const std::string &f : checks.failures()) {
            std::printf("       %s\n", f.c_str());
        }
        failed += checks.failed();
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
