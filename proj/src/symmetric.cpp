#include "wittswan/symmetric.hpp"

#include <algorithm>

namespace wittswan {

MultiLaurentPoly elementary_symmetric(int p, int d, int k) {
    if (d < 1 || k < 0 || k > d)
        throw std::invalid_argument("elementary_symmetric: bad (d, k)");
    MultiLaurentPoly r(p, indexed_vars("t", d));
    if (k == 0) return MultiLaurentPoly::constant(p, indexed_vars("t", d), 1);
    // enumerate k-subsets of {0..d-1}
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        ExpVec e(d, 0);
        for (int i : idx) e[i] = 1;
        r.add_term(e, 1);
        int i = k - 1;
        while (i >= 0 && idx[i] == d - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return r;
}

namespace {

bool lex_less(const ExpVec& a, const ExpVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// lex-leading term of a nonzero polynomial
std::pair<ExpVec, int> lex_leader(const MultiLaurentPoly& f) {
    ExpVec best;
    int c_best = 0;
    for (const auto& [e, c] : f.terms())
        if (best.empty() || lex_less(best, e)) { best = e; c_best = c; }
    return {best, c_best};
}

} // namespace

SFraction sym_to_elementary(const MultiLaurentPoly& f) {
    if (!f.is_symmetric())
        throw std::invalid_argument("sym_to_elementary: input is not symmetric");
    int p = f.p();
    int d = f.nvars();
    if (f.is_zero()) return SFraction::zero(p, d);

    long min_exp = 0;
    for (const auto& [e, c] : f.terms()) {
        (void)c;
        for (int x : e) min_exp = std::min(min_exp, static_cast<long>(x));
    }
    long M = -min_exp;
    ExpVec clear(d, static_cast<int>(M));
    MultiLaurentPoly g = f.shifted(clear);

    std::vector<MultiLaurentPoly> e_k;
    e_k.reserve(d + 1);
    for (int k = 0; k <= d; ++k) e_k.push_back(elementary_symmetric(p, d, k));

    MultiLaurentPoly out(p, indexed_vars("S", d));
    ExpVec prev_leader;
    while (!g.is_zero()) {
        auto [lead, c] = lex_leader(g);
        // a symmetric polynomial has a weakly decreasing lex leader, and the
        // classical rewriting strictly decreases it
        for (int k = 0; k + 1 < d; ++k)
            if (lead[k] < lead[k + 1])
                throw std::logic_error("sym_to_elementary: leader not decreasing");
        if (!prev_leader.empty() && !lex_less(lead, prev_leader))
            throw std::logic_error("sym_to_elementary: rewriting failed to descend");
        prev_leader = lead;

        ExpVec mu(d, 0);
        for (int k = 0; k + 1 < d; ++k) mu[k] = lead[k] - lead[k + 1];
        mu[d - 1] = lead[d - 1];
        out.add_term(mu, c);

        MultiLaurentPoly prod = MultiLaurentPoly::constant(p, indexed_vars("t", d), c);
        for (int k = 0; k < d; ++k)
            if (mu[k] > 0) prod = prod * e_k[k + 1].pow(mu[k]);
        g = g - prod;
    }
    return SFraction(out, M);
}

MultiLaurentPoly expand_elementary(const MultiLaurentPoly& s_poly) {
    int p = s_poly.p();
    int d = s_poly.nvars();
    std::vector<MultiLaurentPoly> e_k;
    e_k.reserve(d + 1);
    for (int k = 0; k <= d; ++k) e_k.push_back(elementary_symmetric(p, d, k));
    MultiLaurentPoly out(p, indexed_vars("t", d));
    for (const auto& [mu, c] : s_poly.terms()) {
        MultiLaurentPoly prod = MultiLaurentPoly::constant(p, indexed_vars("t", d), c);
        for (int k = 0; k < d; ++k) {
            if (mu[k] < 0)
                throw std::invalid_argument("expand_elementary: negative exponent");
            if (mu[k] > 0) prod = prod * e_k[k + 1].pow(mu[k]);
        }
        out = out + prod;
    }
    return out;
}

MultiLaurentPoly expand_numerator(const SFraction& f) {
    return expand_elementary(f.num());
}

} // namespace wittswan
