#ifndef WITTSWAN_LAURENT_HPP
#define WITTSWAN_LAURENT_HPP

#include <map>
#include <string>

#include "wittswan/fp.hpp"
#include "wittswan/ord.hpp"

namespace wittswan {

// Univariate Laurent polynomial over F_p. Coefficients are stored as
// integers in [1, p); zero coefficients are never kept.
class LaurentPoly {
public:
    explicit LaurentPoly(int p, std::string var = "t");

    static LaurentPoly monomial(int p, long exp, long coeff, std::string var = "t");
    static LaurentPoly constant(Fp c, std::string var = "t");

    int p() const { return p_; }
    const std::string& var() const { return var_; }
    const std::map<long, int>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    // order at t = 0 (minimal exponent); Ord::inf() for 0
    Ord order() const;

    Fp coeff(long exp) const;
    Fp constant_term() const { return coeff(0); }

    // coefficient at the minimal exponent; poly must be nonzero
    Fp low_coeff() const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly scaled(Fp c) const;

    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // e >= 0; uses the Frobenius exponent decomposition in characteristic p
    LaurentPoly pow(long e) const;

    // componentwise p-th power: exponents scale by p, coefficients are fixed
    LaurentPoly frobenius() const;

    // formal derivative d/dt
    LaurentPoly derivative() const;

    // t * d/dt, the coefficient map for the dlog t basis
    LaurentPoly dlog_derivative() const;

    // multiply by t^k
    LaurentPoly shifted(long k) const;

    // exact division; throws std::invalid_argument when the quotient is not
    // a Laurent polynomial
    LaurentPoly divexact(const LaurentPoly& o) const;

    void add_term(long exp, long coeff);

    std::string str() const;

private:
    void check(const LaurentPoly& o) const;
    int p_;
    std::string var_;
    std::map<long, int> terms_;
};

inline Ord ord_t(const LaurentPoly& f) { return f.order(); }

} // namespace wittswan

#endif
