#include "wittswan/witt.hpp"

namespace wittswan {

ZPoly ghost_poly(int p, int n, int nvars, int offset) {
    ZPoly w(nvars);
    mpz_class pi = 1;
    for (int i = 0; i <= n; ++i) {
        long e = 1;
        for (int k = 0; k < n - i; ++k) e *= p;
        ExpVec ev(nvars, 0);
        ev[offset + i] = static_cast<int>(e);
        w.add_term(ev, pi);
        pi *= p;
    }
    return w;
}

namespace {

long int_pow(int p, int e) {
    long r = 1;
    while (e-- > 0) r *= p;
    return r;
}

// solve p^n * out_n = target_n - sum_{i<n} p^i * out_i^(p^(n-i)) exactly
std::vector<ZPoly> solve_ghost_chain(int p, int len,
                                     const std::vector<ZPoly>& targets) {
    std::vector<ZPoly> out;
    out.reserve(len);
    for (int n = 0; n < len; ++n) {
        ZPoly acc = targets[n];
        mpz_class pi = 1;
        for (int i = 0; i < n; ++i) {
            acc = acc - out[i].pow(int_pow(p, n - i)).scaled(pi);
            pi *= p;
        }
        mpz_class pn;
        mpz_ui_pow_ui(pn.get_mpz_t(), p, n);
        out.push_back(acc.divexact_scalar(pn));
    }
    return out;
}

} // namespace

std::shared_ptr<const WittContext> WittContext::build(int p, int m, int cap) {
    require_supported_prime(p);
    if (m < 0) throw std::invalid_argument("WittContext: negative m");
    if (m + 1 > cap)
        throw std::invalid_argument("WittContext: length " + std::to_string(m + 1) +
                                    " exceeds cap " + std::to_string(cap));
    int len = m + 1;
    std::vector<ZPoly> ts, tp, tn;
    for (int n = 0; n < len; ++n) {
        ZPoly gx = ghost_poly(p, n, 2 * len, 0);
        ZPoly gy = ghost_poly(p, n, 2 * len, len);
        ts.push_back(gx + gy);
        tp.push_back(gx * gy);
        tn.push_back(-ghost_poly(p, n, len, 0));
    }
    auto ctx = std::make_shared<WittContext>();
    ctx->p = p;
    ctx->len = len;
    ctx->sum = solve_ghost_chain(p, len, ts);
    ctx->prod = solve_ghost_chain(p, len, tp);
    ctx->neg = solve_ghost_chain(p, len, tn);
    ctx->verify_ghost();
    return ctx;
}

std::shared_ptr<const WittContext> WittContext::assemble(int p, int len,
                                                         std::vector<ZPoly> sum,
                                                         std::vector<ZPoly> prod,
                                                         std::vector<ZPoly> neg) {
    require_supported_prime(p);
    if (len < 1) throw std::invalid_argument("WittContext: empty length");
    auto ctx = std::make_shared<WittContext>();
    ctx->p = p;
    ctx->len = len;
    ctx->sum = std::move(sum);
    ctx->prod = std::move(prod);
    ctx->neg = std::move(neg);
    ctx->verify_ghost();
    return ctx;
}

void WittContext::verify_ghost() const {
    if (static_cast<int>(sum.size()) != len || static_cast<int>(prod.size()) != len ||
        static_cast<int>(neg.size()) != len)
        throw std::logic_error("WittContext: polynomial table has wrong size");
    for (int n = 0; n < len; ++n) {
        ZPoly gx = ghost_poly(p, n, 2 * len, 0);
        ZPoly gy = ghost_poly(p, n, 2 * len, len);
        ZPoly gs(2 * len), gp(2 * len), gn(len);
        mpz_class pi = 1;
        for (int i = 0; i <= n; ++i) {
            long e = int_pow(p, n - i);
            gs = gs + sum[i].pow(e).scaled(pi);
            gp = gp + prod[i].pow(e).scaled(pi);
            gn = gn + neg[i].pow(e).scaled(pi);
            pi *= p;
        }
        if (gs != gx + gy)
            throw std::logic_error("WittContext: ghost identity fails for sum");
        if (gp != gx * gy)
            throw std::logic_error("WittContext: ghost identity fails for product");
        if (gn != -ghost_poly(p, n, len, 0))
            throw std::logic_error("WittContext: ghost identity fails for negation");
    }
}

std::vector<std::string> WittContext::xy_names() const {
    std::vector<std::string> v;
    for (int i = 0; i < len; ++i) v.push_back("X" + std::to_string(i));
    for (int i = 0; i < len; ++i) v.push_back("Y" + std::to_string(i));
    return v;
}

std::vector<std::string> WittContext::x_names() const {
    std::vector<std::string> v;
    for (int i = 0; i < len; ++i) v.push_back("X" + std::to_string(i));
    return v;
}

std::vector<mpz_class> ghost_components(const WittVector<mpz_class>& a) {
    std::vector<mpz_class> out;
    out.reserve(a.len());
    for (int n = 0; n < a.len(); ++n)
        out.push_back(ghost_poly(a.p(), n, a.len(), 0).eval(a.comps(), mpz_class(0)));
    return out;
}

} // namespace wittswan
