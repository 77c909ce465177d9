/*
 * Copyright 2026 The extprod Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @brief Release gate: one pass/fail line per criterion, exit 0 iff all pass.
 *
 * Every tolerance and budget is pinned here, not configurable; weakening one
 * means editing this file in plain sight.
 */

#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "extprod/d22.hpp"
#include "extprod/d22_fast.hpp"
#include "extprod/det.hpp"
#include "extprod/fermion.hpp"
#include "extprod/mixed_disc.hpp"
#include "extprod/permanent.hpp"
#include "extprod/random_inputs.hpp"
#include "extprod/reduction.hpp"
#include "extprod/rng.hpp"
#include "support/oracles.hpp"

using namespace extprod;
namespace et = extprod::testing;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. Placement-table reproduction and exact permanent equality, 200 random
//    3x3 BigInt matrices with entries in [-9, 9], under 10 s.
Outcome criterion_table_reproduction() {
    Outcome out;
    const auto t0 = Clock::now();
    SeededRng rng(20260101);
    for (int t = 0; t < 200; ++t) {
        const auto a = random_bigint_matrix(3, -9, 9, rng);
        const auto f = reduce_permanent(a);
        const auto want = et::table3_family(a);
        if (f.vectors != want.vectors) {
            out.fail("placement mismatch at instance " + std::to_string(t));
            break;
        }
        if (d22_subset_sum(f) != permanent_ryser(a)) {
            out.fail("value mismatch at instance " + std::to_string(t));
            break;
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 10.0) out.fail("over budget: " + std::to_string(dt) + " s");
    out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(dt) + " s / 10 s";
    return out;
}

// 2. Reduction identity at N=4, 10 random instances, under 10 min.
Outcome criterion_reduction_n4() {
    Outcome out;
    const auto t0 = Clock::now();
    SeededRng rng(20260102);
    for (int t = 0; t < 10; ++t) {
        const auto a = random_bigint_matrix(4, -9, 9, rng);
        if (!verify_reduction(a).equal) {
            out.fail("mismatch at instance " + std::to_string(t));
            break;
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 600.0) out.fail("over budget: " + std::to_string(dt) + " s");
    out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(dt) + " s / 600 s";
    return out;
}

// 3. Subset-sum vs wedge expansion, 120 random BigInt families M <= 6,
//    under 30 s.
Outcome criterion_subset_vs_wedge() {
    Outcome out;
    const auto t0 = Clock::now();
    SeededRng rng(20260103);
    for (int t = 0; t < 120; ++t) {
        const std::size_t m = 1 + static_cast<std::size_t>(t % 6);
        const auto f = random_bigint_family(m, -9, 9, rng);
        if (d22_subset_sum(f) != d22_wedge(f)) {
            out.fail("mismatch at instance " + std::to_string(t));
            break;
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 30.0) out.fail("over budget: " + std::to_string(dt) + " s");
    out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(dt) + " s / 30 s";
    return out;
}

// 4. Cycle-cover semantics, 60 random graphs M <= 4, under 60 s.
Outcome criterion_cycle_cover() {
    Outcome out;
    const auto t0 = Clock::now();
    SeededRng rng(20260104);
    for (int t = 0; t < 60; ++t) {
        const std::size_t m = 1 + static_cast<std::size_t>(t % 4);
        const auto g = random_bigint_graph(m, -4, 4, rng);
        if (cycle_cover_sum(g) != d22_subset_sum(family_from_graph(g))) {
            out.fail("mismatch at instance " + std::to_string(t));
            break;
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 60.0) out.fail("over budget: " + std::to_string(dt) + " s");
    out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(dt) + " s / 60 s";
    return out;
}

// 5. Mixed-discriminant identity for M in 1..5 (25 instances each) plus the
//    pinned M=2 case lhs=4 / raw exterior value -4, under 60 s.
Outcome criterion_mixed_discriminant() {
    Outcome out;
    const auto t0 = Clock::now();

    Rank2Factors<BigInt> pinned;
    pinned.m = 2;
    pinned.x0 = {{BigInt(1), BigInt(0)}, {BigInt(1), BigInt(1)}};
    pinned.x1 = {{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(-1)}};
    const auto mv = verify_md_identity(pinned);
    if (mv.lhs != BigInt(4) || !mv.equal) out.fail("pinned case lhs != 4");
    if (d22_subset_sum(embed_rank2(pinned)) != BigInt(-4)) {
        out.fail("pinned case exterior value != -4");
    }

    SeededRng rng(20260105);
    for (std::size_t m = 1; m <= 5 && out.pass; ++m) {
        for (int t = 0; t < 25; ++t) {
            const auto f = random_bigint_factors(m, -4, 4, rng);
            if (!verify_md_identity(f).equal) {
                out.fail("mismatch at M=" + std::to_string(m));
                break;
            }
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 60.0) out.fail("over budget: " + std::to_string(dt) + " s");
    out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(dt) + " s / 60 s";
    return out;
}

// 6. Criterion 1 repeated over ModP (p = 1e9+7) and over rationals.
Outcome criterion_ring_generality() {
    Outcome out;
    const auto t0 = Clock::now();
    SeededRng rng(20260106);
    for (int t = 0; t < 200; ++t) {
        const auto a = random_modp_matrix(3, -9, 9, kDefaultModulus, rng);
        const auto f = reduce_permanent(a);
        if (f.vectors != et::table3_family(a).vectors) {
            out.fail("modp placement mismatch at " + std::to_string(t));
            break;
        }
        if (d22_subset_sum(f) != permanent_ryser(a)) {
            out.fail("modp value mismatch at " + std::to_string(t));
            break;
        }
    }
    for (int t = 0; t < 200 && out.pass; ++t) {
        const auto a = random_rational_matrix(3, -9, 9, 3, rng);
        const auto f = reduce_permanent(a);
        if (f.vectors != et::table3_family(a).vectors) {
            out.fail("rational placement mismatch at " + std::to_string(t));
            break;
        }
        if (d22_subset_sum(f) != permanent_ryser(a)) {
            out.fail("rational value mismatch at " + std::to_string(t));
            break;
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 20.0) out.fail("over budget: " + std::to_string(dt) + " s");
    out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(dt) + " s / 20 s";
    return out;
}

// 7. Fermion oracle agreement at 1e-10 absolute for all configs, M in {1,2},
//    20 Haar seeds; total probability within 1e-8 for M in {1,2,3}; < 60 s.
Outcome criterion_fermion() {
    Outcome out;
    const auto t0 = Clock::now();
    for (std::uint64_t seed = 1; seed <= 20 && out.pass; ++seed) {
        for (std::size_t m = 1; m <= 2; ++m) {
            const auto p = random_scattering_problem(m, SeededRng::mix(20260107, 10 * seed + m));
            double total = 0.0;
            for (const auto& e : output_distribution(p)) {
                if (std::abs(e.amplitude - amplitude_fock(p, e.config)) > 1e-10) {
                    out.fail("oracle mismatch at M=" + std::to_string(m) +
                             " seed=" + std::to_string(seed));
                }
                total += e.probability;
            }
            if (std::abs(total - 1.0) > 1e-8) {
                out.fail("norm failure at M=" + std::to_string(m));
            }
        }
    }
    for (std::uint64_t seed = 1; seed <= 20 && out.pass; ++seed) {
        const auto p = random_scattering_problem(3, SeededRng::mix(20260117, seed));
        double total = 0.0;
        for (const auto& e : output_distribution(p)) total += e.probability;
        if (std::abs(total - 1.0) > 1e-8) out.fail("norm failure at M=3");
    }
    const double dt = seconds_since(t0);
    if (dt >= 60.0) out.fail("over budget: " + std::to_string(dt) + " s");
    out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(dt) + " s / 60 s";
    return out;
}

// 8. Fast path vs full-refactorization evaluation at 1e-8 relative on 100
//    random complex families M <= 12, near-singular constructions included.
Outcome criterion_fast_path() {
    Outcome out;
    const auto t0 = Clock::now();
    SeededRng rng(20260108);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const std::size_t m = 1 + static_cast<std::size_t>(t % 12);
        TwoFormFamily<Cplx> f;
        if (t % 10 == 3) {
            f = near_singular_complex_family(m, 1e-13, rng);
        } else if (t % 10 == 7) {
            f = random_complex_family(m, rng);
            f.vectors[1] = f.vectors[0];
        } else {
            f = random_complex_family(m, rng);
        }
        const Cplx want = d22_subset_sum(f);
        const Cplx got = d22_float_fast(f);
        const double rel = std::abs(got - want) / std::max(1e-30, std::abs(want));
        worst = std::max(worst, rel);
        if (rel > 1e-8) {
            out.fail("relative error " + std::to_string(rel) + " at instance " +
                     std::to_string(t));
            break;
        }
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", worst);
    out.detail += (out.detail.empty() ? "" : "; ") + std::string("worst rel ") + buf + "; " +
                  std::to_string(seconds_since(t0)) + " s";
    return out;
}

// 9. Fast-path scaling: consecutive-M time ratios in [1.6, 2.6] for
//    M = 14..20 on one core, best-of-reps timing.
Outcome criterion_scaling() {
    Outcome out;
    const auto t0 = Clock::now();
    std::vector<double> best;
    for (std::size_t m = 14; m <= 20; ++m) {
        SeededRng rng(SeededRng::mix(20260109, m));
        const auto f = random_complex_family(m, rng);
        D22FastOptions opt;
        opt.threads = 1;
        const int reps = m <= 17 ? 3 : 2;
        double b = 1e300;
        for (int rep = 0; rep < reps; ++rep) {
            const auto ts = Clock::now();
            volatile double sink = std::abs(d22_float_fast(f, opt));
            (void)sink;
            b = std::min(b, seconds_since(ts));
        }
        best.push_back(b);
    }
    std::string ratios;
    for (std::size_t i = 1; i < best.size(); ++i) {
        const double r = best[i] / best[i - 1];
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", r);
        ratios += (i > 1 ? "," : "") + std::string(buf);
        if (r < 1.6 || r > 2.6) {
            out.fail("ratio " + std::string(buf) + " at M=" + std::to_string(14 + i) +
                     " outside [1.6, 2.6]");
        }
    }
    out.detail += (out.detail.empty() ? "" : "; ") + std::string("ratios ") + ratios + "; " +
                  std::to_string(seconds_since(t0)) + " s";
    return out;
}

// 10. dkr with k=1 equals the determinant of the stacked matrix, 120 random
//     instances.
Outcome criterion_dkr_determinant() {
    Outcome out;
    const auto t0 = Clock::now();
    SeededRng rng(20260110);
    for (int t = 0; t < 120; ++t) {
        const std::size_t m = 1 + static_cast<std::size_t>(t % 8);
        KFormFamily<BigInt> f;
        f.k = 1;
        Matrix<BigInt> stacked(m, m, BigInt(0));
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<BigInt> v(m);
            for (std::size_t j = 0; j < m; ++j) {
                v[j] = rng.uniform_int(-9, 9);
                stacked(i, j) = v[j];
            }
            f.forms.push_back({{v}});
        }
        if (dkr_eval(f) != det(stacked)) {
            out.fail("mismatch at instance " + std::to_string(t));
            break;
        }
    }
    out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(seconds_since(t0)) + " s";
    return out;
}

} // namespace

int main() {
    struct Entry {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Entry> criteria = {
        {"placement-table-reproduction", criterion_table_reproduction},
        {"reduction-n4", criterion_reduction_n4},
        {"subset-vs-wedge", criterion_subset_vs_wedge},
        {"cycle-cover-semantics", criterion_cycle_cover},
        {"mixed-discriminant-identity", criterion_mixed_discriminant},
        {"ring-generality", criterion_ring_generality},
        {"fermion-oracle-and-norm", criterion_fermion},
        {"float-fast-path", criterion_fast_path},
        {"fast-path-scaling", criterion_scaling},
        {"dkr-k1-determinant", criterion_dkr_determinant},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        failures += out.pass ? 0 : 1;
        std::printf("[%s] %s%s%s\n", out.pass ? "PASS" : "FAIL", c.name,
                    out.detail.empty() ? "" : ": ", out.detail.c_str());
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
