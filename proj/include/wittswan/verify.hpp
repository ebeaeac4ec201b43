#ifndef WITTSWAN_VERIFY_HPP
#define WITTSWAN_VERIFY_HPP

#include <cstdint>
#include <random>

#include "wittswan/io.hpp"
#include "wittswan/witt_cache.hpp"

namespace wittswan {

struct VerifyConfig {
    std::vector<int> primes{2, 3};
    int m_max = 2;
    std::vector<int> ds{2, 3};
    long max_sw = 5;
    std::uint64_t seed = 7;
    bool strict = false;

    // per-suite sample budgets
    int witt_ring_samples = 200;  // random vectors per (p, m)
    int fmd_pairs = 100;          // random pairs per (p, m)
    int fil_samples = 100;        // reduced vectors per (p, d, m)
    int mu_level_samples = 4;     // forms per exact level e
    int sympow_samples = 2;       // characters per (p, d, n)
    int dprod_samples = 50;       // forms per p
};

// contexts are expensive to build, so verification runs share them; with a
// cache directory set, contexts round-trip through the on-disk cache
class ContextPool {
public:
    ContextPool() = default;
    explicit ContextPool(std::string cache_dir)
        : use_cache_(true), dir_(std::move(cache_dir)) {}

    WittCtx get(int p, int m);

private:
    bool use_cache_ = false;
    std::string dir_;
    std::map<std::pair<int, int>, WittCtx> pool_;
};

struct CaseRow {
    std::string suite;
    std::string name;
    Json expected;
    Json computed;
    Json certified; // true/false, or null where certification does not apply
    bool pass;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseRow> rows;
};

struct VerifyRun {
    std::vector<SuiteReport> reports;
    long cases = 0, passed = 0, failed = 0, uncertified = 0;
};

// the concrete suites, in canonical run order
const std::vector<std::string>& suite_names();

// expand a suite argument ("all" or one concrete name); unknown names throw
std::vector<std::string> expand_suites(const std::string& name);

SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg,
                      ContextPool& pool);
VerifyRun run_verify(const std::string& suite, const VerifyConfig& cfg,
                     ContextPool& pool);

// 0 all pass; 2 on any failure, or on uncertified rows in strict mode
int verify_exit_code(const VerifyRun& run, bool strict);

// machine-readable: header line, one record per case, summary line
std::string render_records(const std::string& suite, const VerifyConfig& cfg,
                           const VerifyRun& run);
// human-readable table derived from the same rows
std::string render_table(const std::string& suite, const VerifyConfig& cfg,
                         const VerifyRun& run);

// ---- deterministic sampling ----

// mt19937_64 with a fixed range mapping; std::uniform_int_distribution is
// not pinned down by the standard, so results would differ across libraries
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    long range(long lo, long hi); // uniform-ish in [lo, hi]
    int nonzero_residue(int p);   // in [1, p)

private:
    std::mt19937_64 eng_;
};

// stable per-case stream: avalanche of the master seed and the case key
std::uint64_t case_seed(std::uint64_t master, const std::string& key);

long p_adic_valuation(int p, long n); // n > 0
// a conductor n is realizable in W_{m+1} iff n = 0 or v_p(n) <= m
bool conductor_achievable(int p, int m, long n);

LaurentPoly random_laurent(Rng& rng, int p, long min_exp, long max_exp,
                           int max_terms, const std::string& var = "t");
WittLaurent random_witt(Rng& rng, const WittCtx& ctx, long min_exp, long max_exp,
                        int max_terms);
// reduced vector with v_witt exactly -n (n >= 1, v_p(n) <= m); every
// component pole is prime to p and strictly shallower than n except the
// designated slot carrying the pole n / p^{v_p(n)}
WittLaurent random_reduced_vector(Rng& rng, const WittCtx& ctx, long n);
// regular vector (all orders >= 0): a conductor-0 character
WittLaurent random_regular_vector(Rng& rng, const WittCtx& ctx);

} // namespace wittswan

#endif
