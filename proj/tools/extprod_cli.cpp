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
 * @brief Command-line front end.
 *
 * Values go to standard output; timing goes to standard error so printed
 * values stay deterministic for a given (input, seed). Exit status: 0 on
 * success or PASS, 1 on verification failure, 2 on usage/parse errors.
 */

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "extprod/d22.hpp"
#include "extprod/d22_fast.hpp"
#include "extprod/errors.hpp"
#include "extprod/fermion.hpp"
#include "extprod/io.hpp"
#include "extprod/mixed_disc.hpp"
#include "extprod/permanent.hpp"
#include "extprod/random_inputs.hpp"
#include "extprod/reduction.hpp"

namespace {

using namespace extprod;
using Clock = std::chrono::steady_clock;

struct RunReport {
    std::string command;
    std::vector<std::string> results;
    double time_ms = 0.0;
    std::optional<bool> pass;
};

int finish(const RunReport& report) {
    for (const auto& line : report.results) std::cout << line << "\n";
    std::cerr << report.command << ": time_ms=" << report.time_ms << "\n";
    return report.pass.has_value() && !*report.pass ? 1 : 0;
}

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fmt17(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

template <typename V>
std::string value_string(const V& variant_value) {
    return std::visit(
        [](const auto& x) {
            using R = std::decay_t<decltype(x)>;
            return ring_traits<R>::to_string(x);
        },
        variant_value);
}

OutputConfig parse_channels(const std::string& csv) {
    OutputConfig out;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad channel list: " + csv);
        }
        if (pos != tok.size() || v == 0) throw ParseError("channels are 1-based integers: " + csv);
        out.push_back(static_cast<std::size_t>(v - 1));
    }
    if (out.empty()) throw ParseError("empty channel list");
    return out;
}

std::string config_line(const OutputConfig& config, Cplx amp) {
    std::ostringstream os;
    for (std::size_t i = 0; i < config.size(); ++i) {
        if (i) os << ",";
        os << config[i] + 1;
    }
    os << ": " << fmt17(amp.real()) << " " << fmt17(amp.imag()) << " " << fmt17(std::norm(amp));
    return os.str();
}

// ---- permanent ------------------------------------------------------------

int cmd_permanent(const std::string& input, const std::string& method) {
    const auto t0 = Clock::now();
    AnyMatrix m = read_matrix_file(input);
    std::variant<BigInt, Rational, ModP, Cplx> value = std::visit(
        [&](const auto& mat) -> std::variant<BigInt, Rational, ModP, Cplx> {
            if (method == "naive") return permanent_naive(mat);
            return permanent_ryser(mat);
        },
        m);
    RunReport report{"permanent", {value_string(value)}, ms_since(t0), std::nullopt};
    return finish(report);
}

// ---- d22 / dkr ------------------------------------------------------------

int cmd_d22(const std::string& input, const std::string& method, unsigned threads) {
    const auto t0 = Clock::now();
    AnyFamily f = read_family_file(input);
    std::string value = std::visit(
        [&](const auto& fam) -> std::string {
            using R = std::decay_t<decltype(fam.vectors[0][0])>;
            if (method == "wedge") return ring_traits<R>::to_string(d22_wedge(fam));
            if (method == "fast") {
                D22FastOptions opt;
                opt.threads = threads;
                return ring_traits<Cplx>::to_string(d22_float_fast(fam, opt));
            }
            return ring_traits<R>::to_string(d22_subset_sum(fam, threads));
        },
        f);
    RunReport report{"d22", {value}, ms_since(t0), std::nullopt};
    return finish(report);
}

int cmd_dkr(const std::string& input) {
    const auto t0 = Clock::now();
    AnyKForm f = read_kform_file(input);
    std::string value = std::visit(
        [](const auto& kf) {
            using R = std::decay_t<decltype(kf.forms[0][0][0][0])>;
            return ring_traits<R>::to_string(dkr_eval(kf));
        },
        f);
    RunReport report{"dkr", {value}, ms_since(t0), std::nullopt};
    return finish(report);
}

// ---- reduction ------------------------------------------------------------

int cmd_reduce(const std::string& input, const std::string& output) {
    const auto t0 = Clock::now();
    AnyMatrix m = read_matrix_file(input);
    AnyFamily family = std::visit(
        [](const auto& mat) -> AnyFamily {
            using R = std::decay_t<decltype(mat(0, 0))>;
            if constexpr (std::is_same_v<R, Cplx>) {
                throw ScalarKindError("reduce: exact scalar kinds only");
            } else {
                return reduce_permanent(mat);
            }
        },
        m);
    write_family_file(output, family);
    const std::size_t quads = std::visit([](const auto& f) { return f.m_quadruplets; }, family);
    RunReport report{"reduce",
                     {"M=" + std::to_string(quads) + " vectors=" + std::to_string(4 * quads) +
                      " dim=" + std::to_string(2 * quads)},
                     ms_since(t0),
                     std::nullopt};
    return finish(report);
}

int cmd_verify(const std::string& input, unsigned threads) {
    const auto t0 = Clock::now();
    AnyMatrix m = read_matrix_file(input);
    RunReport report;
    report.command = "verify";
    bool ok = std::visit(
        [&](const auto& mat) -> bool {
            using R = std::decay_t<decltype(mat(0, 0))>;
            if constexpr (std::is_same_v<R, Cplx>) {
                throw ScalarKindError("verify: exact scalar kinds only");
            } else {
                auto vr = verify_reduction(mat, threads);
                report.results.push_back("permanent: " + ring_traits<R>::to_string(vr.permanent));
                report.results.push_back("d22: " + ring_traits<R>::to_string(vr.d22));
                report.results.push_back(vr.equal ? "PASS" : "FAIL");
                return vr.equal;
            }
        },
        m);
    report.time_ms = ms_since(t0);
    report.pass = ok;
    return finish(report);
}

int cmd_cycle_cover(const std::string& input) {
    const auto t0 = Clock::now();
    AnyGraph g = read_graph_file(input);
    std::string value = std::visit(
        [](const auto& graph) {
            using R = std::decay_t<decltype(graph.color1[0][0])>;
            return ring_traits<R>::to_string(cycle_cover_sum(graph));
        },
        g);
    RunReport report{"cycle-cover", {value}, ms_since(t0), std::nullopt};
    return finish(report);
}

int cmd_md_verify(const std::string& input) {
    const auto t0 = Clock::now();
    AnyFactors f = read_factors_file(input);
    RunReport report;
    report.command = "md-verify";
    bool ok = std::visit(
        [&](const auto& fac) {
            using R = std::decay_t<decltype(fac.x0[0][0])>;
            auto mv = verify_md_identity(fac);
            report.results.push_back("mixed_discriminant: " + ring_traits<R>::to_string(mv.lhs));
            report.results.push_back("signed_d22: " + ring_traits<R>::to_string(mv.rhs));
            report.results.push_back(mv.equal ? "PASS" : "FAIL");
            return mv.equal;
        },
        f);
    report.time_ms = ms_since(t0);
    report.pass = ok;
    return finish(report);
}

// ---- fermion --------------------------------------------------------------

ScatteringProblem problem_from(const std::string& unitary_path, std::size_t m, std::uint64_t seed) {
    ScatteringProblem p;
    if (!unitary_path.empty()) {
        p.unitary = read_unitary_file(unitary_path);
        if (p.unitary.rows() % 4 != 0 || p.unitary.rows() == 0) {
            throw DimensionError("unitary size must be 4M");
        }
        p.m_quadruplets = m ? m : p.unitary.rows() / 4;
    } else {
        if (m == 0) throw ParseError("either --unitary or --m is required");
        p = random_scattering_problem(m, seed);
    }
    return p;
}

int cmd_fermion_amp(const std::string& unitary_path, const std::string& channels) {
    const auto t0 = Clock::now();
    ScatteringProblem p = problem_from(unitary_path, 0, 0);
    const OutputConfig out = parse_channels(channels);
    const Cplx amp = amplitude_d22(p, out);
    RunReport report{"fermion amp", {config_line(out, amp)}, ms_since(t0), std::nullopt};
    return finish(report);
}

int cmd_fermion_dist(const std::string& unitary_path, std::size_t m, std::uint64_t seed,
                     unsigned threads) {
    const auto t0 = Clock::now();
    ScatteringProblem p = problem_from(unitary_path, m, seed);
    const auto dist = output_distribution(p, threads);
    RunReport report;
    report.command = "fermion dist";
    double total = 0.0;
    for (const auto& e : dist) {
        report.results.push_back(config_line(e.config, e.amplitude));
        total += e.probability;
    }
    report.results.push_back("total_prob: " + fmt17(total));
    report.time_ms = ms_since(t0);
    return finish(report);
}

int cmd_fermion_check_norm(std::size_t m, std::size_t trials, std::uint64_t seed,
                           unsigned threads) {
    const auto t0 = Clock::now();
    RunReport report;
    report.command = "fermion check-norm";
    bool all_ok = true;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t s = SeededRng::mix(seed, t);
        ScatteringProblem p = random_scattering_problem(m, s);
        double total = 0.0;
        for (const auto& e : output_distribution(p, threads)) total += e.probability;
        const bool ok = std::abs(total - 1.0) <= 1e-8;
        all_ok = all_ok && ok;
        report.results.push_back("trial " + std::to_string(t) + " seed=" + std::to_string(s) +
                                 " total_prob: " + fmt17(total) + (ok ? " PASS" : " FAIL"));
    }
    report.results.push_back(all_ok ? "PASS" : "FAIL");
    report.time_ms = ms_since(t0);
    report.pass = all_ok;
    return finish(report);
}

// ---- verify-all -----------------------------------------------------------

bool suite_reduction(std::uint64_t seed, std::size_t trials, bool inject_fault,
                     std::vector<std::string>& log) {
    SeededRng rng(SeededRng::mix(seed, 101));
    bool ok = true;
    // Deterministic instance first so an injected fault always surfaces.
    std::vector<Matrix<BigInt>> inputs;
    inputs.push_back(Matrix<BigInt>(3, 3, BigInt(1)));
    for (std::size_t t = 0; t < trials; ++t) {
        inputs.push_back(random_bigint_matrix(1 + t % 3, -9, 9, rng));
    }
    for (const auto& a : inputs) {
        TwoFormFamily<BigInt> f = reduce_permanent(a);
        if (inject_fault) {
            // Deliberate corruption: negate the a_{11} placement.
            f.vectors[0][0] = -f.vectors[0][0];
        }
        if (d22_subset_sum(f) != permanent_ryser(a)) ok = false;
    }
    log.push_back(std::string("reduction: ") + (ok ? "PASS" : "FAIL"));
    return ok;
}

bool suite_eq3_eq4(std::uint64_t seed, std::size_t trials, std::vector<std::string>& log) {
    SeededRng rng(SeededRng::mix(seed, 102));
    bool ok = true;
    for (std::size_t t = 0; t < trials; ++t) {
        auto f = random_bigint_family(1 + t % 5, -9, 9, rng);
        if (d22_subset_sum(f) != d22_wedge(f)) ok = false;
    }
    log.push_back(std::string("subset-vs-wedge: ") + (ok ? "PASS" : "FAIL"));
    return ok;
}

bool suite_cycle_cover(std::uint64_t seed, std::size_t trials, std::vector<std::string>& log) {
    SeededRng rng(SeededRng::mix(seed, 103));
    bool ok = true;
    for (std::size_t t = 0; t < trials; ++t) {
        auto g = random_bigint_graph(1 + t % 3, -3, 3, rng);
        if (cycle_cover_sum(g) != d22_subset_sum(family_from_graph(g))) ok = false;
    }
    log.push_back(std::string("cycle-cover: ") + (ok ? "PASS" : "FAIL"));
    return ok;
}

bool suite_mixed_disc(std::uint64_t seed, std::size_t trials, std::vector<std::string>& log) {
    SeededRng rng(SeededRng::mix(seed, 104));
    bool ok = true;
    for (std::size_t t = 0; t < trials; ++t) {
        auto f = random_bigint_factors(1 + t % 4, -3, 3, rng);
        if (!verify_md_identity(f).equal) ok = false;
    }
    log.push_back(std::string("mixed-discriminant: ") + (ok ? "PASS" : "FAIL"));
    return ok;
}

bool suite_fermion(std::uint64_t seed, std::size_t trials, std::vector<std::string>& log) {
    bool ok = true;
    for (std::size_t t = 0; t < trials; ++t) {
        for (std::size_t m = 1; m <= 2; ++m) {
            ScatteringProblem p = random_scattering_problem(m, SeededRng::mix(seed, 1000 + 2 * t + m));
            double total = 0.0;
            for (const auto& e : output_distribution(p)) {
                if (std::abs(e.amplitude - amplitude_fock(p, e.config)) > 1e-10) ok = false;
                total += e.probability;
            }
            if (std::abs(total - 1.0) > 1e-8) ok = false;
        }
    }
    log.push_back(std::string("fermion-oracle: ") + (ok ? "PASS" : "FAIL"));
    return ok;
}

bool suite_modp_reduction(std::uint64_t seed, std::size_t trials, std::vector<std::string>& log) {
    SeededRng rng(SeededRng::mix(seed, 106));
    bool ok = true;
    for (std::size_t t = 0; t < trials; ++t) {
        auto a = random_modp_matrix(3, -9, 9, kDefaultModulus, rng);
        if (!verify_reduction(a).equal) ok = false;
    }
    log.push_back(std::string("modp-reduction: ") + (ok ? "PASS" : "FAIL"));
    return ok;
}

int cmd_verify_all(std::uint64_t seed, std::size_t trials, bool inject_fault) {
    const auto t0 = Clock::now();
    RunReport report;
    report.command = "verify-all";
    bool ok = true;
    ok &= suite_reduction(seed, trials, inject_fault, report.results);
    ok &= suite_eq3_eq4(seed, trials, report.results);
    ok &= suite_cycle_cover(seed, trials, report.results);
    ok &= suite_mixed_disc(seed, trials, report.results);
    ok &= suite_fermion(seed, std::max<std::size_t>(1, trials / 5), report.results);
    ok &= suite_modp_reduction(seed, trials, report.results);
    report.results.push_back(ok ? "ALL PASS" : "FAIL");
    report.time_ms = ms_since(t0);
    report.pass = ok;
    return finish(report);
}

// ---- bench ----------------------------------------------------------------

int cmd_bench(std::size_t m_min, std::size_t m_max, std::uint64_t seed, unsigned threads) {
    if (m_min == 0 || m_min > m_max) throw ParseError("bench: need 1 <= m-min <= m-max");
    if (m_max > 24) throw ParseError("bench: m-max exceeds 24");
    const auto t0 = Clock::now();
    std::cout << "method,m,wall_ms,value\n";
    for (std::size_t m = m_min; m <= std::min<std::size_t>(m_max, 10); ++m) {
        SeededRng rng(SeededRng::mix(seed, m));
        const auto f = random_bigint_family(m, -9, 9, rng);
        const auto ts = Clock::now();
        const BigInt value = d22_subset_sum(f, threads);
        std::cout << "subset," << m << "," << ms_since(ts) << "," << value.str() << "\n";
    }
    for (std::size_t m = m_min; m <= m_max; ++m) {
        SeededRng rng(SeededRng::mix(seed, 1000 + m));
        const auto f = random_complex_family(m, rng);
        D22FastOptions opt;
        opt.threads = threads;
        const auto ts = Clock::now();
        const Cplx value = d22_float_fast(f, opt);
        std::cout << "fast," << m << "," << ms_since(ts) << ","
                  << ring_traits<Cplx>::to_string(value) << "\n";
    }
    std::cerr << "bench: time_ms=" << ms_since(t0) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exterior products of low-rank forms: evaluators, reductions, verifiers"};
    app.require_subcommand(1);

    std::string input, output, method = "ryser", unitary, channels;
    unsigned threads = 1;
    std::uint64_t seed = 2026;
    std::size_t m = 0, trials = 25, m_min = 2, m_max = 10;
    bool inject_fault = false;

    auto* permanent = app.add_subcommand("permanent", "permanent of a matrix file");
    permanent->add_option("--input", input, "matrix JSON file")->required();
    permanent->add_option("--method", method, "naive|ryser")
        ->check(CLI::IsMember({"naive", "ryser"}));

    std::string d22_method = "subset";
    auto* d22 = app.add_subcommand("d22", "D_{2,2} of a family file");
    d22->add_option("--input", input, "family JSON file")->required();
    d22->add_option("--method", d22_method, "subset|wedge|fast")
        ->check(CLI::IsMember({"subset", "wedge", "fast"}));
    d22->add_option("--threads", threads, "worker threads (0 = auto)");

    auto* dkr = app.add_subcommand("dkr", "D_{k,r} of a k-form file");
    dkr->add_option("--input", input, "k-form JSON file")->required();

    auto* reduce = app.add_subcommand("reduce", "emit the permanent-encoding family");
    reduce->add_option("--input", input, "matrix JSON file")->required();
    reduce->add_option("--output", output, "family JSON file to write")->required();

    auto* verify = app.add_subcommand("verify", "check Per(A) = D_{2,2}(reduce(A))");
    verify->add_option("--input", input, "matrix JSON file")->required();
    verify->add_option("--threads", threads, "worker threads (0 = auto)");

    auto* cycle = app.add_subcommand("cycle-cover", "signed cycle-cover sum of a graph file");
    cycle->add_option("--input", input, "graph JSON file")->required();

    auto* mdv = app.add_subcommand("md-verify", "check the mixed-discriminant identity");
    mdv->add_option("--input", input, "factors JSON file")->required();

    auto* fermion = app.add_subcommand("fermion", "entangled-quadruplet scattering");
    fermion->require_subcommand(1);
    auto* famp = fermion->add_subcommand("amp", "amplitude of one output configuration");
    famp->add_option("--unitary", unitary, "complex matrix JSON file")->required();
    famp->add_option("--out", channels, "output channels, e.g. 1,2,5,6")->required();
    auto* fdist = fermion->add_subcommand("dist", "full output distribution");
    fdist->add_option("--m", m, "number of quadruplets");
    fdist->add_option("--seed", seed, "seed for the Haar unitary");
    fdist->add_option("--unitary", unitary, "optional unitary file (else Haar from seed)");
    fdist->add_option("--threads", threads, "worker threads (0 = auto)");
    auto* fnorm = fermion->add_subcommand("check-norm", "total probability over all configs");
    fnorm->add_option("--m", m, "number of quadruplets")->required();
    fnorm->add_option("--trials", trials, "number of Haar seeds");
    fnorm->add_option("--seed", seed, "base seed");
    fnorm->add_option("--threads", threads, "worker threads (0 = auto)");

    auto* vall = app.add_subcommand("verify-all", "run the full identity battery");
    vall->add_option("--seed", seed, "base seed");
    vall->add_option("--trials", trials, "instances per suite");
    vall->add_flag("--inject-fault", inject_fault, "corrupt one reduction entry (self-test)")
        ->group("");

    auto* bench = app.add_subcommand("bench", "CSV timings for subset and fast paths");
    bench->add_option("--m-min", m_min, "smallest M");
    bench->add_option("--m-max", m_max, "largest M (<= 24)");
    bench->add_option("--seed", seed, "input seed");
    bench->add_option("--threads", threads, "worker threads (0 = auto)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*permanent) return cmd_permanent(input, method);
        if (*d22) return cmd_d22(input, d22_method, threads);
        if (*dkr) return cmd_dkr(input);
        if (*reduce) return cmd_reduce(input, output);
        if (*verify) return cmd_verify(input, threads);
        if (*cycle) return cmd_cycle_cover(input);
        if (*mdv) return cmd_md_verify(input);
        if (*famp) return cmd_fermion_amp(unitary, channels);
        if (*fdist) return cmd_fermion_dist(unitary, m, seed, threads);
        if (*fnorm) return cmd_fermion_check_norm(m, trials, seed, threads);
        if (*vall) return cmd_verify_all(seed, trials, inject_fault);
        if (*bench) return cmd_bench(m_min, m_max, seed, threads);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
