#ifndef WITTSWAN_RING_HPP
#define WITTSWAN_RING_HPP

#include <gmpxx.h>

#include "wittswan/fp.hpp"
#include "wittswan/laurent.hpp"
#include "wittswan/multilaurent.hpp"
#include "wittswan/sfrac.hpp"

namespace wittswan {

// Uniform access to the coefficient rings the Witt machinery runs over:
// integers, F_p, and the F_p polynomial rings. `like` carries the ring
// context (characteristic, variables) of the target.
template <typename R>
struct RingTraits;

template <>
struct RingTraits<mpz_class> {
    static mpz_class zero(const mpz_class&) { return 0; }
    static mpz_class from_mpz(const mpz_class& c, const mpz_class&) { return c; }
    static bool is_zero(const mpz_class& x) { return x == 0; }
    static mpz_class pow(const mpz_class& x, long e) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e));
        return r;
    }
    static mpz_class frobenius(const mpz_class&) {
        throw std::logic_error("frobenius requires a ring of characteristic p");
    }
};

template <>
struct RingTraits<Fp> {
    static Fp zero(const Fp& like) { return Fp::zero(like.p()); }
    static Fp from_mpz(const mpz_class& c, const Fp& like) {
        return Fp(like.p(), mpz_fdiv_ui(c.get_mpz_t(), like.p()));
    }
    static bool is_zero(const Fp& x) { return x.is_zero(); }
    static Fp pow(const Fp& x, long e) { return x.pow(e); }
    static Fp frobenius(const Fp& x) { return x; }
};

template <>
struct RingTraits<LaurentPoly> {
    static LaurentPoly zero(const LaurentPoly& like) {
        return LaurentPoly(like.p(), like.var());
    }
    static LaurentPoly from_mpz(const mpz_class& c, const LaurentPoly& like) {
        long r = mpz_fdiv_ui(c.get_mpz_t(), like.p());
        return LaurentPoly::monomial(like.p(), 0, r, like.var());
    }
    static bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
    static LaurentPoly pow(const LaurentPoly& x, long e) { return x.pow(e); }
    static LaurentPoly frobenius(const LaurentPoly& x) { return x.frobenius(); }
};

template <>
struct RingTraits<MultiLaurentPoly> {
    static MultiLaurentPoly zero(const MultiLaurentPoly& like) {
        return MultiLaurentPoly(like.p(), like.vars());
    }
    static MultiLaurentPoly from_mpz(const mpz_class& c, const MultiLaurentPoly& like) {
        long r = mpz_fdiv_ui(c.get_mpz_t(), like.p());
        return MultiLaurentPoly::constant(like.p(), like.vars(), r);
    }
    static bool is_zero(const MultiLaurentPoly& x) { return x.is_zero(); }
    static MultiLaurentPoly pow(const MultiLaurentPoly& x, long e) { return x.pow(e); }
    static MultiLaurentPoly frobenius(const MultiLaurentPoly& x) { return x.frobenius(); }
};

template <>
struct RingTraits<SFraction> {
    static SFraction zero(const SFraction& like) {
        return SFraction::zero(like.p(), like.d());
    }
    static SFraction from_mpz(const mpz_class& c, const SFraction& like) {
        long r = mpz_fdiv_ui(c.get_mpz_t(), like.p());
        return SFraction(MultiLaurentPoly::constant(like.p(), like.num().vars(), r), 0);
    }
    static bool is_zero(const SFraction& x) { return x.is_zero(); }
    static SFraction pow(const SFraction& x, long e) { return x.pow(e); }
    static SFraction frobenius(const SFraction& x) { return x.frobenius(); }
};

} // namespace wittswan

#endif
