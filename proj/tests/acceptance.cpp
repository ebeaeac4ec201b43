// Acceptance checks for the conductor calculus. Each criterion prints one
// line; the binary exits nonzero if any of them fails or overruns its
// time budget. Everything runs on exact arithmetic, so a failure is a real
// counterexample, not noise.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wittswan/asw.hpp"
#include "wittswan/sympow.hpp"
#include "wittswan/verify.hpp"

using namespace wittswan;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

bool report(int id, const std::string& name, double budget_s,
            const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome oc;
    try {
        oc = body();
    } catch (const std::exception& e) {
        oc = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    if (oc.pass && secs > budget_s) {
        oc.pass = false;
        oc.detail = "over budget";
    }
    std::ostringstream line;
    line << "[" << id << "] " << name << " ";
    for (std::size_t i = name.size(); i < 46; ++i) line << ".";
    line << (oc.pass ? " PASS" : " FAIL");
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.2fs", secs);
    line << buf << " of " << budget_s << "s)";
    if (!oc.detail.empty()) line << ": " << oc.detail;
    std::cout << line.str() << std::endl;
    return oc.pass;
}

Outcome all_rows_pass(const SuiteReport& rep, long want_rows) {
    long fails = 0;
    for (const auto& row : rep.rows)
        if (!row.pass) ++fails;
    if (fails > 0)
        return {false, std::to_string(fails) + " failing case(s)"};
    if (static_cast<long>(rep.rows.size()) < want_rows)
        return {false, "only " + std::to_string(rep.rows.size()) + " case(s)"};
    return {};
}

long floordiv(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::string run_command(const std::string& cmd, int& exit_code) {
    std::string out;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return out;
    }
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, got);
    exit_code = ::pclose(pipe);
    return out;
}

Outcome ghost_oracle() {
    VerifyConfig cfg;
    cfg.primes = {2, 3, 5};
    cfg.m_max = 2;
    cfg.witt_ring_samples = 200;
    ContextPool pool;
    return all_rows_pass(run_suite("witt-ring", cfg, pool), 9);
}

Outcome differential_hom() {
    VerifyConfig cfg;
    cfg.primes = {2, 3, 5};
    cfg.m_max = 2;
    cfg.fmd_pairs = 100;
    ContextPool pool;
    return all_rows_pass(run_suite("fmd-hom", cfg, pool), 9);
}

Outcome sympow_conductors() {
    VerifyConfig cfg;
    cfg.primes = {2, 3};
    cfg.ds = {2, 3};
    cfg.m_max = 2;
    cfg.max_sw = 7;
    cfg.sympow_samples = 2;
    ContextPool pool;
    SuiteReport rep = run_suite("cor-witt2", cfg, pool);
    Outcome oc = all_rows_pass(rep, 50);
    if (!oc.pass) return oc;
    long certified = 0;
    for (const auto& row : rep.rows)
        if (row.certified.is_boolean() && row.certified.get<bool>()) ++certified;
    double rate = static_cast<double>(certified) / rep.rows.size();
    if (rate < 0.9)
        return {false, "certification rate " + std::to_string(rate)};
    return {};
}

Outcome pullback_filtration() {
    Rng master(case_seed(7, "acceptance/fil"));
    for (int p : {2, 3, 5}) {
        for (int d : {2, 3}) {
            for (int m = 0; m <= 2; ++m) {
                SymmetricChart chart =
                    SymmetricChart::make(WittContext::build(p, m), d);
                for (int trial = 0; trial < 100; ++trial) {
                    long n;
                    do {
                        n = master.range(1, 8);
                    } while (!conductor_achievable(p, m, n));
                    auto alpha = random_reduced_vector(master, chart.ctx, n);
                    Ord v = v_witt_exceptional(lambda_pushforward(alpha, chart));
                    if (v < Ord(-(n / d)))
                        return {false, "p=" + std::to_string(p) +
                                           " d=" + std::to_string(d) +
                                           " m=" + std::to_string(m) +
                                           " n=" + std::to_string(n) +
                                           " v=" + v.str()};
                }
            }
        }
    }
    return {};
}

Outcome window_levels() {
    Rng master(case_seed(7, "acceptance/window"));
    for (int p : {2, 3, 5}) {
        for (int d : {2, 3}) {
            SymmetricChart chart =
                SymmetricChart::make(WittContext::build(p, 0), d);
            for (int j = -2; j <= 2; ++j) {
                for (long e = j * d + 1; e <= (j + 1) * d - 1; ++e) {
                    for (int trial = 0; trial < 4; ++trial) {
                        LaurentPoly c(p);
                        c.add_term(-e, master.nonzero_residue(p));
                        int extras = static_cast<int>(master.range(0, 2));
                        for (int x = 0; x < extras; ++x)
                            c.add_term(-e + master.range(1, 3),
                                       master.range(0, p - 1));
                        Ord v = v_log_exceptional(
                            mu_pushforward(LogForm(c), chart));
                        if (v != Ord(-j))
                            return {false, "p=" + std::to_string(p) +
                                               " d=" + std::to_string(d) +
                                               " e=" + std::to_string(e) +
                                               " v=" + v.str()};
                        if (floordiv(e, d) != j)
                            return {false, "window bookkeeping"};
                    }
                }
            }
        }
    }
    return {};
}

Outcome window_bases() {
    for (int p : {2, 3, 5}) {
        for (int d : {2, 3}) {
            SymmetricChart chart =
                SymmetricChart::make(WittContext::build(p, 0), d);
            for (int j = -2; j <= 2; ++j) {
                AnBasisReport rep = anbasis_check(chart, j);
                if (!rep.pass || !rep.entries_integral || rep.det_val != Ord(0))
                    return {false, "p=" + std::to_string(p) +
                                       " d=" + std::to_string(d) +
                                       " j=" + std::to_string(j)};
            }
            // the recursion route must match the direct pushforward
            for (long i = -2 * d + 1; i <= 3 * d; ++i) {
                LaurentPoly c(p);
                c.add_term(1 - i, 1);
                if (omega_basis(chart, i) != mu_pushforward(LogForm(c), chart))
                    return {false, "route mismatch at i=" + std::to_string(i)};
            }
        }
    }
    return {};
}

Outcome product_conductors() {
    VerifyConfig cfg;
    cfg.primes = {2, 3};
    cfg.m_max = 1;
    cfg.max_sw = 5;
    ContextPool pool;
    return all_rows_pass(run_suite("blprod", cfg, pool), 50);
}

Outcome pinned_instance() {
    SymmetricChart chart = SymmetricChart::make(WittContext::build(2, 0), 2);
    LaurentPoly a(2);
    a.add_term(-3, 1);
    auto up = swan_conductor(char_from_witt(WittLaurent(chart.ctx, {a})));
    if (!up.certified || up.n != 3)
        return {false, "upstream conductor " + std::to_string(up.n)};

    SFraction s1 = SFraction::coordinate(2, 2, 1);
    SFraction s2 = SFraction::coordinate(2, 2, 2);
    auto lam = lambda_pushforward(up.reduced, chart);
    if (lam[0] != (s1.pow(3) + s1 * s2).times_sd_pow(-3))
        return {false, "pullback mismatch"};
    if (v_witt_exceptional(lam) != Ord(-1))
        return {false, "exceptional valuation " + v_witt_exceptional(lam).str()};

    auto down = sympow_swan(up, chart);
    if (!down.certified || down.n != 1)
        return {false, "downstream conductor " + std::to_string(down.n)};
    return {};
}

Outcome deterministic_records() {
    fs::path dir = fs::temp_directory_path() / "wittswan-acceptance-cache";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::string cmd = std::string("'") + WITTSWAN_CLI_PATH +
                      "' verify all --seed 7 --format records --cache-dir '" +
                      dir.string() + "' 2>/dev/null";
    int code1 = 0, code2 = 0;
    std::string out1 = run_command(cmd, code1);
    std::string out2 = run_command(cmd, code2);
    fs::remove_all(dir);
    if (code1 != 0 || code2 != 0)
        return {false, "exit codes " + std::to_string(code1) + ", " +
                           std::to_string(code2)};
    if (out1.empty()) return {false, "no output"};
    if (out1 != out2) return {false, "outputs differ between runs"};
    return {};
}

} // namespace

int main() {
    bool ok = true;
    ok &= report(1, "ghost components are a ring oracle", 10, ghost_oracle);
    ok &= report(2, "character differential is an additive map", 30,
                 differential_hom);
    ok &= report(3, "symmetric power divides the conductor by d", 300,
                 sympow_conductors);
    ok &= report(4, "pullbacks respect the filtration bound", 300,
                 pullback_filtration);
    ok &= report(5, "interior pole windows map to exact levels", 120,
                 window_levels);
    ok &= report(6, "every window carries a unimodular basis", 120,
                 window_bases);
    ok &= report(7, "external sums take the larger conductor", 120,
                 product_conductors);
    ok &= report(8, "pinned instance reproduces frozen values", 1,
                 pinned_instance);
    ok &= report(9, "verification records are byte-stable", 300,
                 deterministic_records);
    std::cout << (ok ? "acceptance: all criteria hold"
                     : "acceptance: FAILURES above")
              << std::endl;
    return ok ? 0 : 1;
}
