#ifndef WITTSWAN_FP_HPP
#define WITTSWAN_FP_HPP

#include <stdexcept>
#include <string>

namespace wittswan {

// Supported residue characteristics.
bool supported_prime(int p);
void require_supported_prime(int p);

// v mod p in [0, p)
inline int normalize_mod(long v, int p) {
    long r = v % p;
    if (r < 0) r += p;
    return static_cast<int>(r);
}

// Element of the prime field F_p.
class Fp {
public:
    Fp(int p, long value) : p_(p), v_(0) {
        require_supported_prime(p);
        v_ = normalize_mod(value, p);
    }

    static Fp zero(int p) { return Fp(p, 0); }
    static Fp one(int p) { return Fp(p, 1); }

    int p() const { return p_; }
    int value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(Fp o) const { check(o); return Fp(p_, v_ + o.v_); }
    Fp operator-(Fp o) const { check(o); return Fp(p_, v_ - o.v_); }
    Fp operator*(Fp o) const { check(o); return Fp(p_, static_cast<long>(v_) * o.v_); }
    Fp operator-() const { return Fp(p_, -static_cast<long>(v_)); }

    Fp inverse() const;
    Fp operator/(Fp o) const { return *this * o.inverse(); }

    Fp pow(long e) const;

    bool operator==(Fp o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(Fp o) const { return !(*this == o); }

private:
    void check(Fp o) const {
        if (p_ != o.p_) throw std::invalid_argument("Fp: mixed characteristics");
    }
    int p_;
    int v_;
};

} // namespace wittswan

#endif
