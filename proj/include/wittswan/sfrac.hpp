#ifndef WITTSWAN_SFRAC_HPP
#define WITTSWAN_SFRAC_HPP

#include "wittswan/multilaurent.hpp"

namespace wittswan {

// Canonical fraction num / S_d^den_pow where num is a polynomial in the
// elementary symmetric coordinates S_1..S_d (nonnegative exponents) and
// S_d does not divide num unless num = 0 (then den_pow = 0).
class SFraction {
public:
    SFraction(MultiLaurentPoly num, long den_pow);

    static SFraction zero(int p, int d);
    static SFraction one(int p, int d);
    static SFraction coordinate(int p, int d, int k); // S_k, 1-based

    int p() const { return num_.p(); }
    int d() const { return num_.nvars(); }
    const MultiLaurentPoly& num() const { return num_; }
    long den_pow() const { return den_pow_; }

    bool is_zero() const { return num_.is_zero(); }

    SFraction operator+(const SFraction& o) const;
    SFraction operator-(const SFraction& o) const;
    SFraction operator*(const SFraction& o) const;
    SFraction operator-() const;
    SFraction scaled(Fp c) const;

    SFraction pow(long e) const; // e >= 0
    SFraction frobenius() const;

    // multiply by S_d^k, k of either sign
    SFraction times_sd_pow(long k) const;

    bool operator==(const SFraction& o) const;
    bool operator!=(const SFraction& o) const { return !(*this == o); }

    // valuation at the exceptional coordinate point: all S_k are weight-1
    // uniformizing coordinates, so this is mindeg_total(num) - den_pow
    Ord v_exceptional() const;

    std::string str() const;

private:
    MultiLaurentPoly num_;
    long den_pow_;
};

inline SFraction sfrac_normalize(MultiLaurentPoly num, long den_pow) {
    return SFraction(std::move(num), den_pow);
}

inline Ord v_exceptional(const SFraction& f) { return f.v_exceptional(); }

} // namespace wittswan

#endif
