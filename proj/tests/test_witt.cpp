#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "wittswan/laurent.hpp"
#include "wittswan/verify.hpp"
#include "wittswan/witt.hpp"
#include "wittswan/witt_cache.hpp"

using namespace wittswan;
namespace fs = std::filesystem;

namespace {

LaurentPoly lp(int p, std::initializer_list<std::pair<long, long>> terms) {
    LaurentPoly f(p);
    for (const auto& [e, c] : terms) f.add_term(e, c);
    return f;
}

WittVector<mpz_class> wz(const WittCtx& ctx, std::vector<long> vals) {
    std::vector<mpz_class> c(vals.begin(), vals.end());
    return WittVector<mpz_class>(ctx, std::move(c));
}

WittVector<Fp> wf(const WittCtx& ctx, std::vector<long> vals) {
    std::vector<Fp> c;
    for (long v : vals) c.emplace_back(ctx->p, v);
    return WittVector<Fp>(ctx, std::move(c));
}

std::string read_file(const fs::path& path) {
    std::ifstream is(path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("universal polynomials match their closed forms for p = 2") {
    WittCtx ctx = WittContext::build(2, 1);
    REQUIRE(ctx->len == 2);
    mpz_class like = 0;
    for (long x0 = -2; x0 <= 2; ++x0)
        for (long x1 = -2; x1 <= 2; ++x1)
            for (long y0 = -2; y0 <= 2; ++y0)
                for (long y1 = -2; y1 <= 2; ++y1) {
                    std::vector<mpz_class> v{x0, x1, y0, y1};
                    CHECK(ctx->sum[0].eval(v, like) == x0 + y0);
                    CHECK(ctx->sum[1].eval(v, like) == x1 + y1 - x0 * y0);
                    CHECK(ctx->prod[0].eval(v, like) == x0 * y0);
                    CHECK(ctx->prod[1].eval(v, like) ==
                          x0 * x0 * y1 + y0 * y0 * x1 + 2 * x1 * y1);
                }
    CHECK_NOTHROW(ctx->verify_ghost());
    CHECK_THROWS_AS(WittContext::build(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(WittContext::build(9, 1), std::invalid_argument);
}

TEST_CASE("ghost components of frozen vectors") {
    WittCtx c2 = WittContext::build(2, 1);
    auto g = ghost_components(wz(c2, {1, 0}));
    CHECK(g == std::vector<mpz_class>{1, 1});
    g = ghost_components(wz(c2, {0, 1}));
    CHECK(g == std::vector<mpz_class>{0, 2});

    WittCtx c3 = WittContext::build(3, 2);
    g = ghost_components(wz(c3, {1, 1, 1}));
    CHECK(g == std::vector<mpz_class>{1, 4, 13});
}

TEST_CASE("ghost map turns Witt operations into componentwise ones") {
    Rng rng(case_seed(7, "witt/ghost"));
    for (int p : {2, 3, 5}) {
        for (int m = 0; m <= 2; ++m) {
            WittCtx ctx = WittContext::build(p, m);
            for (int trial = 0; trial < 25; ++trial) {
                std::vector<long> av, bv;
                for (int i = 0; i <= m; ++i) {
                    av.push_back(rng.range(-9, 9));
                    bv.push_back(rng.range(-9, 9));
                }
                auto a = wz(ctx, av), b = wz(ctx, bv);
                auto ga = ghost_components(a), gb = ghost_components(b);
                auto gsum = ghost_components(witt_add(a, b));
                auto gprod = ghost_components(witt_mul(a, b));
                auto gneg = ghost_components(witt_neg(a));
                for (int i = 0; i <= m; ++i) {
                    CHECK(gsum[i] == ga[i] + gb[i]);
                    CHECK(gprod[i] == ga[i] * gb[i]);
                    CHECK(gneg[i] == -ga[i]);
                }
            }
        }
    }
}

TEST_CASE("length-two vectors over F_2") {
    WittCtx ctx = WittContext::build(2, 1);
    CHECK(witt_add(wf(ctx, {1, 0}), wf(ctx, {1, 0})) == wf(ctx, {0, 1}));
    CHECK(witt_mul(wf(ctx, {0, 1}), wf(ctx, {0, 1})) == wf(ctx, {0, 0}));
    CHECK(witt_mul(wf(ctx, {1, 0}), wf(ctx, {0, 1})) == wf(ctx, {0, 1}));
    CHECK(witt_sub(wf(ctx, {0, 1}), wf(ctx, {0, 1})).is_zero());

    // multiplicative section: (a, 0) (b, 0) = (ab, 0)
    WittCtx c5 = WittContext::build(5, 2);
    for (long a = 0; a < 5; ++a)
        for (long b = 0; b < 5; ++b)
            CHECK(witt_mul(wf(c5, {a, 0, 0}), wf(c5, {b, 0, 0})) ==
                  wf(c5, {a * b, 0, 0}));
}

TEST_CASE("vectors with Laurent coefficients") {
    WittCtx ctx = WittContext::build(2, 1);
    LaurentPoly zero(2);
    WittLaurent a(ctx, {lp(2, {{-1, 1}}), zero});
    CHECK(witt_add(a, a) ==
          WittLaurent(ctx, {zero, lp(2, {{-2, 1}})}));

    WittLaurent b(ctx, {lp(2, {{1, 1}}), lp(2, {{0, 1}})});
    CHECK(frobenius_witt(b) == WittLaurent(ctx, {lp(2, {{2, 1}}), lp(2, {{0, 1}})}));

    auto v = verschiebung_shift(lp(2, {{3, 1}}), 1, ctx);
    CHECK(v == WittLaurent(ctx, {zero, lp(2, {{3, 1}})}));
    CHECK_THROWS_AS(verschiebung_shift(zero, 2, ctx), std::invalid_argument);

    WittCtx c3 = WittContext::build(3, 0);
    CHECK_THROWS_AS(witt_add(a, WittLaurent(c3, {LaurentPoly(3)})),
                    std::invalid_argument);
    CHECK_THROWS_AS(WittLaurent(ctx, {zero}), std::invalid_argument);
}

TEST_CASE("valuation of a vector weights slots by p powers") {
    WittCtx ctx = WittContext::build(2, 1);
    auto val = [](const LaurentPoly& f) { return f.order(); };

    WittLaurent a(ctx, {lp(2, {{-3, 1}}), lp(2, {{-1, 1}})});
    CHECK(v_witt(a, val) == Ord(-6));
    WittLaurent b(ctx, {lp(2, {{2, 1}}), lp(2, {{-1, 1}})});
    CHECK(v_witt(b, val) == Ord(-1));
    CHECK(v_witt(WittLaurent::zeros(ctx, LaurentPoly(2)), val).is_inf());

    CHECK(in_fil(a, 6, val));
    CHECK(!in_fil(a, 5, val));
    CHECK(in_fil(b, 1, val));
    CHECK_THROWS_AS(in_fil(a, -1, val), std::invalid_argument);
}

TEST_CASE("filtration levels are stable under addition") {
    Rng rng(case_seed(7, "witt/fil"));
    auto val = [](const LaurentPoly& f) { return f.order(); };
    for (int p : {2, 3}) {
        for (int m = 0; m <= 1; ++m) {
            WittCtx ctx = WittContext::build(p, m);
            for (int trial = 0; trial < 20; ++trial) {
                auto a = random_witt(rng, ctx, -4, 2, 2);
                auto b = random_witt(rng, ctx, -4, 2, 2);
                Ord floor = min(v_witt(a, val), v_witt(b, val));
                CHECK(v_witt(witt_add(a, b), val) >= floor);
                CHECK(v_witt(witt_neg(a), val) == v_witt(a, val));
            }
        }
    }
}

TEST_CASE("ring axioms on random Laurent vectors") {
    Rng rng(case_seed(7, "witt/axioms"));
    for (int p : {2, 3}) {
        WittCtx ctx = WittContext::build(p, 1);
        LaurentPoly zero(p);
        WittLaurent one(ctx, {lp(p, {{0, 1}}), zero});
        for (int trial = 0; trial < 3; ++trial) {
            auto a = random_witt(rng, ctx, -2, 2, 2);
            auto b = random_witt(rng, ctx, -2, 2, 2);
            auto c = random_witt(rng, ctx, -2, 2, 2);
            CHECK(witt_add(a, b) == witt_add(b, a));
            CHECK(witt_add(witt_add(a, b), c) == witt_add(a, witt_add(b, c)));
            CHECK(witt_mul(a, b) == witt_mul(b, a));
            CHECK(witt_mul(a, witt_add(b, c)) ==
                  witt_add(witt_mul(a, b), witt_mul(a, c)));
            CHECK(witt_add(a, witt_neg(a)).is_zero());
            CHECK(witt_mul(a, one) == a);
        }
    }
}

TEST_CASE("context cache round-trips through text") {
    WittCtx ctx = WittContext::build(3, 1);
    std::string text = serialize_context(*ctx);
    WittCtx back = parse_context(text);
    CHECK(back->p == 3);
    CHECK(back->len == 2);
    CHECK(serialize_context(*back) == text);

    // any flipped byte in the body is caught by the checksum
    std::string bad = text;
    std::size_t pos = bad.size() / 2;
    while (bad[pos] == '\n') ++pos;
    bad[pos] = bad[pos] == 'a' ? 'b' : 'a';
    CHECK_THROWS_WITH_AS(parse_context(bad),
                         doctest::Contains("checksum"), CacheError);

    CHECK_THROWS_WITH_AS(parse_context("not a cache file\n"),
                         doctest::Contains("header"), CacheError);
}

TEST_CASE("cache directory lifecycle") {
    fs::path dir = fs::temp_directory_path() / "wittswan-unit-cache";
    fs::remove_all(dir);
    fs::create_directories(dir);

    CHECK(!cache_file_exists(2, 1, dir.string()));
    WittCtx ctx = load_or_build(2, 1, dir.string());
    CHECK(ctx->p == 2);
    CHECK(cache_file_exists(2, 1, dir.string()));

    WittCtx again = load_context(2, 1, dir.string());
    CHECK(serialize_context(*again) == serialize_context(*ctx));
    CHECK_THROWS_WITH_AS(load_context(3, 1, dir.string()),
                         doctest::Contains("missing"), CacheError);

    // a file whose parameters disagree with its name is rejected
    fs::copy_file(cache_file_path(dir.string(), 2, 1),
                  cache_file_path(dir.string(), 3, 1));
    CHECK_THROWS_WITH_AS(load_context(3, 1, dir.string()),
                         doctest::Contains("parameters"), CacheError);

    fs::remove_all(dir);
}
