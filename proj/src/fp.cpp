#include "wittswan/fp.hpp"

namespace wittswan {

bool supported_prime(int p) {
    return p == 2 || p == 3 || p == 5 || p == 7;
}

void require_supported_prime(int p) {
    if (!supported_prime(p))
        throw std::invalid_argument("unsupported characteristic p=" + std::to_string(p) +
                                    " (supported: 2, 3, 5, 7)");
}

Fp Fp::inverse() const {
    if (v_ == 0) throw std::invalid_argument("Fp: inverse of zero");
    for (int x = 1; x < p_; ++x)
        if ((x * v_) % p_ == 1) return Fp(p_, x);
    throw std::logic_error("Fp: no inverse found");
}

Fp Fp::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Fp r = Fp::one(p_);
    Fp b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

} // namespace wittswan
