#include "wittswan/asw.hpp"

namespace wittswan {

namespace {

long int_pow(int p, int e) {
    long r = 1;
    while (e-- > 0) r *= p;
    return r;
}

} // namespace

LogForm fmd(const WittLaurent& a) {
    int m = a.len() - 1;
    LaurentPoly acc(a.p(), a[0].var());
    for (int i = 0; i <= m; ++i) {
        long e = int_pow(a.p(), m - i) - 1;
        acc = acc + a[i].pow(e) * a[i].dlog_derivative();
    }
    return LogForm(acc);
}

ReductionResult reduce_representative(const WittLaurent& alpha) {
    int p = alpha.p();
    WittLaurent cur = alpha;
    std::vector<ReductionStep> steps;
    for (int slot = 0; slot < cur.len(); ++slot) {
        while (true) {
            Ord o = cur[slot].order();
            if (o.is_inf() || o.value() >= 0) break;
            long v = -o.value();
            if (v % p != 0) break;
            // c^(1/p) = c in F_p
            Fp c = cur[slot].low_coeff();
            LaurentPoly b =
                LaurentPoly::monomial(p, -(v / p), c.value(), cur[slot].var());
            WittLaurent vb = verschiebung_shift(b, slot, cur.ctx());
            WittLaurent next = witt_sub(cur, witt_sub(frobenius_witt(vb), vb));
            for (int j = 0; j < slot; ++j)
                if (next[j] != cur[j])
                    throw std::logic_error("reduce_representative: lower slot disturbed");
            if (!(next[slot].order() > o))
                throw std::logic_error("reduce_representative: order failed to increase");
            steps.push_back({slot, b});
            cur = std::move(next);
        }
    }
    return {cur, steps};
}

WittLaurent replay_steps(const std::vector<ReductionStep>& steps, WittCtx ctx) {
    LaurentPoly zero(ctx->p);
    WittLaurent acc = WittLaurent::zeros(ctx, zero);
    for (const auto& s : steps) {
        WittLaurent vb = verschiebung_shift(s.b, s.slot, ctx);
        acc = witt_add(acc, witt_sub(frobenius_witt(vb), vb));
    }
    return acc;
}

bool ASWCharacter::is_trivial() const {
    WittLaurent red = reduce_representative(alpha_).reduced;
    for (const auto& c : red.comps())
        if (!(c.order() > Ord(0))) return false;
    return true;
}

bool ASWCharacter::is_unramified() const {
    WittLaurent red = reduce_representative(alpha_).reduced;
    for (const auto& c : red.comps())
        if (c.order() < Ord(0)) return false;
    return true;
}

bool ASWCharacter::same_class(const ASWCharacter& o) const {
    return ASWCharacter(witt_sub(alpha_, o.alpha_)).is_trivial();
}

RswClass rsw_class(const ASWCharacter& chi) {
    ReductionResult rr = reduce_representative(chi.alpha());
    Ord vw = v_witt_local(rr.reduced);
    long n = (vw < Ord(0)) ? -vw.value() : 0;
    return {n, fmd(rr.reduced)};
}

CertBounds certify_from(long n_upper, Ord witness_val, int p) {
    if (n_upper < 0) throw std::invalid_argument("certify_from: negative bound");
    if (n_upper == 0) return {true, 0, 0, 0};
    if (witness_val < Ord(-n_upper))
        throw std::logic_error("certify_from: witness below the filtration bound");
    if (witness_val == Ord(-n_upper)) return {true, n_upper, n_upper, n_upper};
    long e = witness_val.is_inf() ? 0 : std::max(0L, -witness_val.value());
    long lower = (e >= n_upper / p + 1) ? e : 0;
    return {false, n_upper, lower, n_upper};
}

SwanCertificate swan_conductor(const ASWCharacter& chi) {
    ReductionResult rr = reduce_representative(chi.alpha());
    Ord vw = v_witt_local(rr.reduced);
    long n_up = (vw < Ord(0)) ? -vw.value() : 0;
    LogForm w = fmd(rr.reduced);
    CertBounds cb = certify_from(n_up, v_log_local(w), chi.p());
    return {cb.n, cb.certified, cb.lower, cb.upper, rr.reduced, w};
}

} // namespace wittswan
