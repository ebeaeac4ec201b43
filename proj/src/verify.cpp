#include "wittswan/verify.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace wittswan {

WittCtx ContextPool::get(int p, int m) {
    auto key = std::make_pair(p, m);
    auto it = pool_.find(key);
    if (it != pool_.end()) return it->second;
    WittCtx ctx = use_cache_ ? load_or_build(p, m, dir_) : WittContext::build(p, m);
    pool_.emplace(key, ctx);
    return ctx;
}

long Rng::range(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("Rng: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

int Rng::nonzero_residue(int p) { return static_cast<int>(range(1, p - 1)); }

std::uint64_t case_seed(std::uint64_t master, const std::string& key) {
    std::uint64_t z = master ^ fnv1a64(key);
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

long p_adic_valuation(int p, long n) {
    if (n <= 0) throw std::invalid_argument("p_adic_valuation: need n > 0");
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

bool conductor_achievable(int p, int m, long n) {
    if (n < 0) return false;
    return n == 0 || p_adic_valuation(p, n) <= m;
}

LaurentPoly random_laurent(Rng& rng, int p, long min_exp, long max_exp,
                           int max_terms, const std::string& var) {
    LaurentPoly f(p, var);
    long terms = rng.range(0, max_terms);
    for (long s = 0; s < terms; ++s)
        f.add_term(rng.range(min_exp, max_exp), rng.nonzero_residue(p));
    return f;
}

WittLaurent random_witt(Rng& rng, const WittCtx& ctx, long min_exp, long max_exp,
                        int max_terms) {
    std::vector<LaurentPoly> comps;
    comps.reserve(ctx->len);
    for (int i = 0; i < ctx->len; ++i)
        comps.push_back(random_laurent(rng, ctx->p, min_exp, max_exp, max_terms));
    return WittLaurent(ctx, std::move(comps));
}

namespace {

long int_pow(int p, int e) {
    long r = 1;
    while (e-- > 0) r *= p;
    return r;
}

} // namespace

WittLaurent random_reduced_vector(Rng& rng, const WittCtx& ctx, long n) {
    int p = ctx->p, m = ctx->len - 1;
    if (n < 1) throw std::invalid_argument("random_reduced_vector: need n >= 1");
    long v = p_adic_valuation(p, n);
    if (v > m)
        throw std::invalid_argument("random_reduced_vector: conductor " +
                                    std::to_string(n) + " needs m >= " +
                                    std::to_string(v));
    int jstar = m - static_cast<int>(v);
    long u = n / int_pow(p, static_cast<int>(v));

    std::vector<LaurentPoly> comps(ctx->len, LaurentPoly(p));
    LaurentPoly lead(p);
    lead.add_term(-u, rng.nonzero_residue(p));
    if (u > 1 && rng.range(0, 1) == 1)
        lead.add_term(rng.range(-u + 1, 2), rng.nonzero_residue(p));
    comps[jstar] = lead;

    for (int i = 0; i <= m; ++i) {
        if (i == jstar) continue;
        long choice = rng.range(0, 2);
        if (choice == 0) continue; // leave the slot zero
        long kmax = (n - 1) / int_pow(p, m - i);
        if (choice == 2 && kmax >= 1) {
            long k = rng.range(1, kmax);
            while (k % p == 0) --k; // k >= 1 stays: multiples of p are never 1
            LaurentPoly a(p);
            a.add_term(-k, rng.nonzero_residue(p));
            if (rng.range(0, 1) == 1) a.add_term(rng.range(-k + 1, 2), rng.nonzero_residue(p));
            comps[i] = a;
        } else {
            comps[i] = random_laurent(rng, p, 0, 2, 2);
        }
    }
    return WittLaurent(ctx, std::move(comps));
}

WittLaurent random_regular_vector(Rng& rng, const WittCtx& ctx) {
    std::vector<LaurentPoly> comps;
    comps.reserve(ctx->len);
    for (int i = 0; i < ctx->len; ++i)
        comps.push_back(random_laurent(rng, ctx->p, 0, 2, 2));
    return WittLaurent(ctx, std::move(comps));
}

namespace {

std::string num(long v) { return std::to_string(v); }

CaseRow counted_row(const std::string& suite, const std::string& name, long ok,
                    long total) {
    return {suite, name, Json(total), Json(ok), Json(nullptr), ok == total};
}

CaseRow error_row(const std::string& suite, const std::string& name,
                  const Json& expected, const std::string& what) {
    Json computed;
    computed["error"] = what;
    return {suite, name, expected, computed, Json(nullptr), false};
}

MultiLaurentPoly random_bivariate(Rng& rng, int p, long min_exp, long max_exp,
                                  int max_terms) {
    MultiLaurentPoly f(p, {"x", "y"});
    long terms = rng.range(0, max_terms);
    for (long s = 0; s < terms; ++s) {
        ExpVec e{static_cast<int>(rng.range(min_exp, max_exp)),
                 static_cast<int>(rng.range(min_exp, max_exp))};
        f.add_term(e, rng.nonzero_residue(p));
    }
    return f;
}

SuiteReport suite_witt_ring(const VerifyConfig& cfg, ContextPool& pool) {
    SuiteReport rep{"witt-ring", {}};
    for (int p : cfg.primes)
        for (int m = 0; m <= cfg.m_max; ++m) {
            std::string key = "witt-ring/p" + num(p) + "/m" + num(m);
            Rng rng(case_seed(cfg.seed, key));
            WittCtx ctx = pool.get(p, m);
            long ok = 0;
            for (int s = 0; s < cfg.witt_ring_samples; ++s) {
                auto rand_vec = [&] {
                    std::vector<mpz_class> cs;
                    cs.reserve(ctx->len);
                    for (int i = 0; i < ctx->len; ++i)
                        cs.emplace_back(rng.range(-9, 9));
                    return WittVector<mpz_class>(ctx, std::move(cs));
                };
                WittVector<mpz_class> a = rand_vec(), b = rand_vec();
                auto ga = ghost_components(a), gb = ghost_components(b);
                auto gsum = ghost_components(witt_add(a, b));
                auto gprod = ghost_components(witt_mul(a, b));
                auto gneg = ghost_components(witt_neg(a));
                bool good = true;
                for (int i = 0; i < ctx->len; ++i) {
                    if (gsum[i] != ga[i] + gb[i]) good = false;
                    if (gprod[i] != ga[i] * gb[i]) good = false;
                    if (gneg[i] != -ga[i]) good = false;
                }
                if (good) ++ok;
            }
            rep.rows.push_back(counted_row(rep.suite, key, ok, cfg.witt_ring_samples));
        }
    return rep;
}

SuiteReport suite_fmd_hom(const VerifyConfig& cfg, ContextPool& pool) {
    SuiteReport rep{"fmd-hom", {}};
    for (int p : cfg.primes)
        for (int m = 0; m <= cfg.m_max; ++m) {
            std::string key = "fmd-hom/p" + num(p) + "/m" + num(m);
            Rng rng(case_seed(cfg.seed, key));
            WittCtx ctx = pool.get(p, m);
            long ok = 0;
            for (int s = 0; s < cfg.fmd_pairs; ++s) {
                WittLaurent a = random_witt(rng, ctx, -4, 2, 2);
                WittLaurent b = random_witt(rng, ctx, -4, 2, 2);
                LogForm fa = fmd(a);
                bool good = fmd(witt_add(a, b)) == fa + fmd(b);
                if (!(v_witt_local(a) <= v_log_local(fa))) good = false;
                if (good) ++ok;
            }
            rep.rows.push_back(counted_row(rep.suite, key, ok, cfg.fmd_pairs));
        }
    return rep;
}

SuiteReport suite_thm_witt(const VerifyConfig& cfg, ContextPool& pool) {
    SuiteReport rep{"thm-witt", {}};
    for (int p : cfg.primes)
        for (int d : cfg.ds)
            for (int m = 0; m <= cfg.m_max; ++m) {
                std::string key =
                    "thm-witt/fil/p" + num(p) + "/d" + num(d) + "/m" + num(m);
                Rng rng(case_seed(cfg.seed, key));
                WittCtx ctx = pool.get(p, m);
                SymmetricChart chart = SymmetricChart::make(ctx, d);
                std::vector<long> ns;
                for (long n = 1; n <= 8; ++n)
                    if (conductor_achievable(p, m, n)) ns.push_back(n);
                long ok = 0;
                for (int s = 0; s < cfg.fil_samples; ++s) {
                    long n = ns[rng.range(0, static_cast<long>(ns.size()) - 1)];
                    WittLaurent alpha = random_reduced_vector(rng, ctx, n);
                    WittVector<SFraction> lam = lambda_pushforward(alpha, chart);
                    if (v_witt_exceptional(lam) >= Ord(-(n / d))) ++ok;
                }
                rep.rows.push_back(counted_row(rep.suite, key, ok, cfg.fil_samples));
            }
    // exact filtration levels map onto the exceptional level -j; the level-e
    // window for -j is jd <= e <= (j+1)d - 1
    for (int p : cfg.primes)
        for (int d : cfg.ds) {
            WittCtx ctx = pool.get(p, 0);
            SymmetricChart chart = SymmetricChart::make(ctx, d);
            for (int j = -2; j <= 2; ++j) {
                std::string key =
                    "thm-witt/mu-level/p" + num(p) + "/d" + num(d) + "/j" + num(j);
                Rng rng(case_seed(cfg.seed, key));
                long ok = 0, total = 0;
                for (long e = static_cast<long>(j) * d; e <= (j + 1L) * d - 1; ++e)
                    for (int s = 0; s < cfg.mu_level_samples; ++s) {
                        LaurentPoly c = LaurentPoly::monomial(p, -e, rng.nonzero_residue(p));
                        long extras = rng.range(0, 2);
                        for (long x = 0; x < extras; ++x)
                            c.add_term(rng.range(-e + 1, -e + 3), rng.nonzero_residue(p));
                        OmegaForm w = mu_pushforward(LogForm(c), chart);
                        if (v_log_exceptional(w) == Ord(-j)) ++ok;
                        ++total;
                    }
                rep.rows.push_back(counted_row(rep.suite, key, ok, total));
            }
        }
    return rep;
}

SuiteReport suite_cor_witt2(const VerifyConfig& cfg, ContextPool& pool) {
    SuiteReport rep{"cor-witt2", {}};
    for (int p : cfg.primes)
        for (int d : cfg.ds)
            for (long n = 0; n <= cfg.max_sw; ++n) {
                if (!conductor_achievable(p, cfg.m_max, n)) continue;
                for (int s = 0; s < cfg.sympow_samples; ++s) {
                    std::string key = "cor-witt2/p" + num(p) + "/d" + num(d) +
                                      "/n" + num(n) + "/s" + num(s);
                    Json expected(n / d);
                    try {
                        Rng rng(case_seed(cfg.seed, key));
                        long vp = n == 0 ? 0 : p_adic_valuation(p, n);
                        int m = static_cast<int>(rng.range(vp, cfg.m_max));
                        WittCtx ctx = pool.get(p, m);
                        SymmetricChart chart = SymmetricChart::make(ctx, d);
                        WittLaurent alpha = n == 0
                                                ? random_regular_vector(rng, ctx)
                                                : random_reduced_vector(rng, ctx, n);
                        SwanCertificate up = swan_conductor(char_from_witt(alpha));
                        if (!up.certified || up.n != n) {
                            Json computed;
                            computed["upstream"] = up.n;
                            computed["upstream_certified"] = up.certified;
                            rep.rows.push_back(
                                {rep.suite, key, expected, computed, Json(false), false});
                            continue;
                        }
                        SymSwanCertificate down = sympow_swan(up, chart);
                        bool pass = down.certified ? down.n == n / d : true;
                        rep.rows.push_back({rep.suite, key, expected, Json(down.n),
                                            Json(down.certified), pass});
                    } catch (const std::exception& e) {
                        rep.rows.push_back(error_row(rep.suite, key, expected, e.what()));
                    }
                }
            }
    return rep;
}

SuiteReport suite_anbasis(const VerifyConfig& cfg, ContextPool& pool) {
    SuiteReport rep{"anbasis", {}};
    Json expected;
    expected["entries_integral"] = true;
    expected["det_val"] = 0;
    for (int p : cfg.primes)
        for (int d : cfg.ds)
            for (int j = -2; j <= 2; ++j) {
                std::string key = "anbasis/p" + num(p) + "/d" + num(d) + "/j" + num(j);
                try {
                    SymmetricChart chart = SymmetricChart::make(pool.get(p, 0), d);
                    AnBasisReport r = anbasis_check(chart, j);
                    Json computed;
                    computed["entries_integral"] = r.entries_integral;
                    computed["det_val"] = ord_to_json(r.det_val);
                    rep.rows.push_back(
                        {rep.suite, key, expected, computed, Json(nullptr), r.pass});
                } catch (const std::exception& e) {
                    rep.rows.push_back(error_row(rep.suite, key, expected, e.what()));
                }
            }
    return rep;
}

SuiteReport suite_blprod(const VerifyConfig& cfg, ContextPool& pool) {
    SuiteReport rep{"blprod", {}};
    long n_top = std::min(5L, cfg.max_sw);
    for (int p : cfg.primes)
        for (int m = 0; m <= std::min(1, cfg.m_max); ++m)
            for (long n1 = 0; n1 <= n_top; ++n1) {
                if (!conductor_achievable(p, m, n1)) continue;
                for (long n2 = 0; n2 <= n_top; ++n2) {
                    if (!conductor_achievable(p, m, n2)) continue;
                    std::string key = "blprod/p" + num(p) + "/m" + num(m) + "/a" +
                                      num(n1) + "/b" + num(n2);
                    Json expected(std::max(n1, n2));
                    try {
                        Rng rng(case_seed(cfg.seed, key));
                        WittCtx ctx = pool.get(p, m);
                        auto sample = [&](long n) {
                            WittLaurent alpha = n == 0
                                                    ? random_regular_vector(rng, ctx)
                                                    : random_reduced_vector(rng, ctx, n);
                            return swan_conductor(char_from_witt(alpha));
                        };
                        SwanCertificate c1 = sample(n1), c2 = sample(n2);
                        if (!c1.certified || c1.n != n1 || !c2.certified || c2.n != n2) {
                            Json computed;
                            computed["upstream"] = Json::array({c1.n, c2.n});
                            rep.rows.push_back(
                                {rep.suite, key, expected, computed, Json(false), false});
                            continue;
                        }
                        ProdSwanCertificate cert =
                            blprod_swan(c1, c2, ProductChart::make(ctx));
                        bool pass = cert.certified ? cert.n == std::max(n1, n2) : true;
                        rep.rows.push_back({rep.suite, key, expected, Json(cert.n),
                                            Json(cert.certified), pass});
                    } catch (const std::exception& e) {
                        rep.rows.push_back(error_row(rep.suite, key, expected, e.what()));
                    }
                }
            }
    return rep;
}

SuiteReport suite_dprod(const VerifyConfig& cfg, ContextPool&) {
    SuiteReport rep{"dprod", {}};
    for (int p : cfg.primes) {
        std::string key = "dprod/p" + num(p);
        Rng rng(case_seed(cfg.seed, key));
        long ok = 0;
        for (int s = 0; s < cfg.dprod_samples; ++s) {
            MultiLaurentPoly f = random_bivariate(rng, p, -3, 3, 2);
            MultiLaurentPoly g = random_bivariate(rng, p, -3, 3, 2);
            ProductForm w(f, g);
            DprodDecomposition dec = dprod_decompose(w);
            bool good = dec.part_x + dec.part_y == w;
            if (!dec.part_x.gy().is_zero() || !dec.part_y.fx().is_zero()) good = false;
            if (dec.v_joint != min(dec.v_x, dec.v_y)) good = false;
            ProductForm dh = ProductForm::d_of(random_bivariate(rng, p, -2, 2, 2));
            DprodDecomposition dec2 = dprod_decompose(dh);
            if (!(dec2.part_x + dec2.part_y == dh)) good = false;
            if (good) ++ok;
        }
        rep.rows.push_back(counted_row(rep.suite, key, ok, cfg.dprod_samples));
    }
    return rep;
}

void validate_config(const VerifyConfig& cfg) {
    if (cfg.primes.empty()) throw std::invalid_argument("verify: empty prime list");
    for (int p : cfg.primes) require_supported_prime(p);
    if (cfg.m_max < 0 || cfg.m_max + 1 > kDefaultWittCap)
        throw std::invalid_argument("verify: m must be in [0, " +
                                    std::to_string(kDefaultWittCap - 1) + "]");
    if (cfg.ds.empty()) throw std::invalid_argument("verify: empty degree list");
    for (int d : cfg.ds)
        if (d < 2 || d > kDefaultChartCap)
            throw std::invalid_argument("verify: d must be in [2, " +
                                        std::to_string(kDefaultChartCap) + "]");
    if (cfg.max_sw < 0) throw std::invalid_argument("verify: max-sw must be >= 0");
}

std::string row_status(const CaseRow& row) {
    if (!row.pass) return "fail";
    if (row.certified.is_boolean() && !row.certified.get<bool>()) return "uncertified";
    return "pass";
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "witt-ring", "fmd-hom", "thm-witt", "cor-witt2", "anbasis", "blprod", "dprod"};
    return names;
}

std::vector<std::string> expand_suites(const std::string& name) {
    if (name == "all") return suite_names();
    for (const auto& s : suite_names())
        if (s == name) return {name};
    std::string msg = "unknown suite '" + name + "'; expected all";
    for (const auto& s : suite_names()) msg += ", " + s;
    throw std::invalid_argument(msg);
}

SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg,
                      ContextPool& pool) {
    validate_config(cfg);
    if (name == "witt-ring") return suite_witt_ring(cfg, pool);
    if (name == "fmd-hom") return suite_fmd_hom(cfg, pool);
    if (name == "thm-witt") return suite_thm_witt(cfg, pool);
    if (name == "cor-witt2") return suite_cor_witt2(cfg, pool);
    if (name == "anbasis") return suite_anbasis(cfg, pool);
    if (name == "blprod") return suite_blprod(cfg, pool);
    if (name == "dprod") return suite_dprod(cfg, pool);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

VerifyRun run_verify(const std::string& suite, const VerifyConfig& cfg,
                     ContextPool& pool) {
    VerifyRun run;
    for (const auto& name : expand_suites(suite)) {
        SuiteReport rep = run_suite(name, cfg, pool);
        for (const auto& row : rep.rows) {
            ++run.cases;
            std::string st = row_status(row);
            if (st == "fail")
                ++run.failed;
            else if (st == "uncertified")
                ++run.uncertified;
            else
                ++run.passed;
        }
        run.reports.push_back(std::move(rep));
    }
    return run;
}

int verify_exit_code(const VerifyRun& run, bool strict) {
    if (run.failed > 0) return 2;
    if (strict && run.uncertified > 0) return 2;
    return 0;
}

namespace {

Json header_json(const std::string& suite, const VerifyConfig& cfg) {
    Json head;
    head["report"] = "verify";
    head["suite"] = suite;
    head["p"] = cfg.primes;
    head["m"] = cfg.m_max;
    head["d"] = cfg.ds;
    head["max_sw"] = cfg.max_sw;
    head["seed"] = cfg.seed;
    head["strict"] = cfg.strict;
    return head;
}

Json summary_json(const VerifyRun& run) {
    Json sum;
    sum["cases"] = run.cases;
    sum["pass"] = run.passed;
    sum["fail"] = run.failed;
    sum["uncertified"] = run.uncertified;
    return sum;
}

} // namespace

std::string render_records(const std::string& suite, const VerifyConfig& cfg,
                           const VerifyRun& run) {
    std::ostringstream os;
    os << header_json(suite, cfg).dump() << "\n";
    for (const auto& rep : run.reports)
        for (const auto& row : rep.rows) {
            Json r;
            r["suite"] = row.suite;
            r["case"] = row.name;
            r["expected"] = row.expected;
            r["computed"] = row.computed;
            r["certified"] = row.certified;
            r["status"] = row_status(row);
            os << r.dump() << "\n";
        }
    Json tail;
    tail["summary"] = summary_json(run);
    os << tail.dump() << "\n";
    return os.str();
}

std::string render_table(const std::string& suite, const VerifyConfig& cfg,
                         const VerifyRun& run) {
    auto join = [](const std::vector<int>& v) {
        std::string out;
        for (size_t i = 0; i < v.size(); ++i)
            out += (i ? "," : "") + std::to_string(v[i]);
        return out;
    };
    std::ostringstream os;
    os << "verify " << suite << "  p=" << join(cfg.primes) << "  m<=" << cfg.m_max
       << "  d=" << join(cfg.ds) << "  max-sw=" << cfg.max_sw
       << "  seed=" << cfg.seed << "  strict=" << (cfg.strict ? "on" : "off")
       << "\n\n";

    std::vector<std::array<std::string, 5>> lines;
    lines.push_back({"case", "expected", "computed", "certified", "status"});
    for (const auto& rep : run.reports)
        for (const auto& row : rep.rows) {
            std::string cert = "-";
            if (row.certified.is_boolean())
                cert = row.certified.get<bool>() ? "yes" : "no";
            lines.push_back({row.name, row.expected.dump(), row.computed.dump(),
                             cert, row_status(row)});
        }
    std::array<size_t, 5> width{};
    for (const auto& line : lines)
        for (size_t c = 0; c < 5; ++c) width[c] = std::max(width[c], line[c].size());
    for (size_t i = 0; i < lines.size(); ++i) {
        for (size_t c = 0; c < 5; ++c) {
            os << lines[i][c];
            if (c + 1 < 5)
                os << std::string(width[c] - lines[i][c].size() + 2, ' ');
        }
        os << "\n";
        if (i == 0) {
            for (size_t c = 0; c < 5; ++c) {
                os << std::string(width[c], '-');
                if (c + 1 < 5) os << "  ";
            }
            os << "\n";
        }
    }
    os << "\n"
       << run.cases << " cases: " << run.passed << " pass, " << run.failed
       << " fail, " << run.uncertified << " uncertified\n";
    return os.str();
}

} // namespace wittswan
