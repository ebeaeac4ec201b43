#include "wittswan/sfrac.hpp"

#include <sstream>

namespace wittswan {

namespace {

// does S_d divide f, i.e. does every term carry the last variable?
bool sd_divides(const MultiLaurentPoly& f) {
    if (f.is_zero()) return false;
    int last = f.nvars() - 1;
    for (const auto& [e, c] : f.terms()) {
        (void)c;
        if (e[last] < 1) return false;
    }
    return true;
}

MultiLaurentPoly sd_strip(const MultiLaurentPoly& f) {
    ExpVec s(f.nvars(), 0);
    s[f.nvars() - 1] = -1;
    return f.shifted(s);
}

} // namespace

SFraction::SFraction(MultiLaurentPoly num, long den_pow)
    : num_(std::move(num)), den_pow_(den_pow) {
    if (den_pow_ < 0) throw std::invalid_argument("SFraction: negative denominator power");
    mindeg_total(num_); // rejects negative exponents
    if (num_.is_zero()) {
        den_pow_ = 0;
        return;
    }
    while (den_pow_ > 0 && sd_divides(num_)) {
        num_ = sd_strip(num_);
        --den_pow_;
    }
}

SFraction SFraction::zero(int p, int d) {
    return SFraction(MultiLaurentPoly(p, indexed_vars("S", d)), 0);
}

SFraction SFraction::one(int p, int d) {
    return SFraction(MultiLaurentPoly::constant(p, indexed_vars("S", d), 1), 0);
}

SFraction SFraction::coordinate(int p, int d, int k) {
    if (k < 1 || k > d) throw std::invalid_argument("SFraction: coordinate out of range");
    ExpVec e(d, 0);
    e[k - 1] = 1;
    return SFraction(MultiLaurentPoly::monomial(p, indexed_vars("S", d), e, 1), 0);
}

SFraction SFraction::operator+(const SFraction& o) const {
    long M = std::max(den_pow_, o.den_pow_);
    ExpVec s(num_.nvars(), 0);
    s[num_.nvars() - 1] = static_cast<int>(M - den_pow_);
    MultiLaurentPoly na = num_.shifted(s);
    s[num_.nvars() - 1] = static_cast<int>(M - o.den_pow_);
    MultiLaurentPoly nb = o.num_.shifted(s);
    return SFraction(na + nb, M);
}

SFraction SFraction::operator-(const SFraction& o) const { return *this + (-o); }

SFraction SFraction::operator-() const { return SFraction(-num_, den_pow_); }

SFraction SFraction::operator*(const SFraction& o) const {
    return SFraction(num_ * o.num_, den_pow_ + o.den_pow_);
}

SFraction SFraction::scaled(Fp c) const {
    return SFraction(num_.scaled(c), den_pow_);
}

SFraction SFraction::pow(long e) const {
    if (e < 0) throw std::invalid_argument("SFraction: negative power");
    return SFraction(num_.pow(e), den_pow_ * e);
}

SFraction SFraction::frobenius() const {
    return SFraction(num_.frobenius(), den_pow_ * p());
}

SFraction SFraction::times_sd_pow(long k) const {
    if (is_zero()) return *this;
    if (k >= 0) {
        ExpVec s(num_.nvars(), 0);
        s[num_.nvars() - 1] = static_cast<int>(k);
        return SFraction(num_.shifted(s), den_pow_);
    }
    return SFraction(num_, den_pow_ - k);
}

bool SFraction::operator==(const SFraction& o) const {
    return den_pow_ == o.den_pow_ && num_ == o.num_;
}

Ord SFraction::v_exceptional() const {
    if (is_zero()) return Ord::inf();
    return Ord(mindeg_total(num_).value() - den_pow_);
}

std::string SFraction::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    if (den_pow_ == 0) return num_.str();
    os << "(" << num_.str() << ")/" << num_.vars().back();
    if (den_pow_ != 1) os << "^" << den_pow_;
    return os.str();
}

} // namespace wittswan
