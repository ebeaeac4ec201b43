#ifndef WITTSWAN_WITT_HPP
#define WITTSWAN_WITT_HPP

#include <memory>

#include "wittswan/ord.hpp"
#include "wittswan/zpoly.hpp"

namespace wittswan {

inline constexpr int kDefaultWittCap = 4; // maximal vector length m+1

// ghost polynomial w_n = sum_{i<=n} p^i Z_{offset+i}^{p^(n-i)} in nvars variables
ZPoly ghost_poly(int p, int n, int nvars, int offset);

// The universal addition, multiplication and negation polynomials for
// Witt vectors of length len = m+1 in characteristic p. sum[n] and
// prod[n] live in 2*len variables (X_0..X_m, Y_0..Y_m), neg[n] in len.
// Built once from the ghost equations with exact integer divisions.
struct WittContext {
    int p;
    int len;
    std::vector<ZPoly> sum, prod, neg;

    static std::shared_ptr<const WittContext> build(int p, int m,
                                                    int cap = kDefaultWittCap);

    // assemble from externally supplied polynomials (cache load);
    // verify_ghost decides acceptance
    static std::shared_ptr<const WittContext> assemble(int p, int len,
                                                       std::vector<ZPoly> sum,
                                                       std::vector<ZPoly> prod,
                                                       std::vector<ZPoly> neg);

    // check the defining ghost identities exactly over Z
    void verify_ghost() const;

    std::vector<std::string> xy_names() const;
    std::vector<std::string> x_names() const;
};

using WittCtx = std::shared_ptr<const WittContext>;

template <typename R>
class WittVector {
public:
    WittVector(WittCtx ctx, std::vector<R> comps)
        : ctx_(std::move(ctx)), comps_(std::move(comps)) {
        if (!ctx_) throw std::invalid_argument("WittVector: null context");
        if (static_cast<int>(comps_.size()) != ctx_->len)
            throw std::invalid_argument("WittVector: component count mismatch");
    }

    static WittVector zeros(WittCtx ctx, const R& like) {
        std::vector<R> c(ctx->len, RingTraits<R>::zero(like));
        return WittVector(std::move(ctx), std::move(c));
    }

    const WittCtx& ctx() const { return ctx_; }
    int p() const { return ctx_->p; }
    int len() const { return ctx_->len; }
    const std::vector<R>& comps() const { return comps_; }
    const R& operator[](int i) const { return comps_.at(i); }
    R& at(int i) { return comps_.at(i); }

    bool is_zero() const {
        for (const R& c : comps_)
            if (!RingTraits<R>::is_zero(c)) return false;
        return true;
    }

    bool operator==(const WittVector& o) const {
        return ctx_->p == o.ctx_->p && ctx_->len == o.ctx_->len && comps_ == o.comps_;
    }
    bool operator!=(const WittVector& o) const { return !(*this == o); }

private:
    WittCtx ctx_;
    std::vector<R> comps_;
};

namespace detail {

inline void check_same_ctx(const WittContext& a, const WittContext& b) {
    if (a.p != b.p || a.len != b.len)
        throw std::invalid_argument("WittVector: context mismatch");
}

template <typename R>
std::vector<R> joined(const WittVector<R>& a, const WittVector<R>& b) {
    std::vector<R> v;
    v.reserve(a.comps().size() * 2);
    v.insert(v.end(), a.comps().begin(), a.comps().end());
    v.insert(v.end(), b.comps().begin(), b.comps().end());
    return v;
}

} // namespace detail

template <typename R>
WittVector<R> witt_add(const WittVector<R>& a, const WittVector<R>& b) {
    detail::check_same_ctx(*a.ctx(), *b.ctx());
    const R& like = a[0];
    std::vector<R> vals = detail::joined(a, b);
    std::vector<R> out;
    out.reserve(a.len());
    for (int n = 0; n < a.len(); ++n)
        out.push_back(a.ctx()->sum[n].eval(vals, like));
    return WittVector<R>(a.ctx(), std::move(out));
}

template <typename R>
WittVector<R> witt_mul(const WittVector<R>& a, const WittVector<R>& b) {
    detail::check_same_ctx(*a.ctx(), *b.ctx());
    const R& like = a[0];
    std::vector<R> vals = detail::joined(a, b);
    std::vector<R> out;
    out.reserve(a.len());
    for (int n = 0; n < a.len(); ++n)
        out.push_back(a.ctx()->prod[n].eval(vals, like));
    return WittVector<R>(a.ctx(), std::move(out));
}

template <typename R>
WittVector<R> witt_neg(const WittVector<R>& a) {
    const R& like = a[0];
    std::vector<R> out;
    out.reserve(a.len());
    for (int n = 0; n < a.len(); ++n)
        out.push_back(a.ctx()->neg[n].eval(a.comps(), like));
    return WittVector<R>(a.ctx(), std::move(out));
}

template <typename R>
WittVector<R> witt_sub(const WittVector<R>& a, const WittVector<R>& b) {
    return witt_add(a, witt_neg(b));
}

// componentwise p-th power; a ring endomorphism in characteristic p
template <typename R>
WittVector<R> frobenius_witt(const WittVector<R>& a) {
    std::vector<R> out;
    out.reserve(a.len());
    for (const R& c : a.comps()) out.push_back(RingTraits<R>::frobenius(c));
    return WittVector<R>(a.ctx(), std::move(out));
}

// (0, ..., 0, b, 0, ..., 0) with b in the given slot
template <typename R>
WittVector<R> verschiebung_shift(const R& b, int slot, WittCtx ctx) {
    if (slot < 0 || slot >= ctx->len)
        throw std::invalid_argument("verschiebung_shift: slot out of range");
    WittVector<R> v = WittVector<R>::zeros(std::move(ctx), b);
    v.at(slot) = b;
    return v;
}

std::vector<mpz_class> ghost_components(const WittVector<mpz_class>& a);

// v_R((a_0..a_m)) = min_i p^(m-i) * val(a_i)
template <typename R, typename ValFn>
Ord v_witt(const WittVector<R>& a, ValFn&& val) {
    Ord best = Ord::inf();
    long w = 1;
    for (int i = a.len() - 1; i >= 0; --i) {
        best = min(best, val(a[i]).scaled(w));
        w *= a.p();
    }
    return best;
}

template <typename R, typename ValFn>
bool in_fil(const WittVector<R>& a, long n, ValFn&& val) {
    if (n < 0) throw std::invalid_argument("in_fil: negative level");
    return v_witt(a, val) >= Ord(-n);
}

} // namespace wittswan

#endif
