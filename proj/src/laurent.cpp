#include "wittswan/laurent.hpp"

#include <sstream>

namespace wittswan {

LaurentPoly::LaurentPoly(int p, std::string var) : p_(p), var_(std::move(var)) {
    require_supported_prime(p);
}

LaurentPoly LaurentPoly::monomial(int p, long exp, long coeff, std::string var) {
    LaurentPoly f(p, std::move(var));
    f.add_term(exp, coeff);
    return f;
}

LaurentPoly LaurentPoly::constant(Fp c, std::string var) {
    return monomial(c.p(), 0, c.value(), std::move(var));
}

void LaurentPoly::check(const LaurentPoly& o) const {
    if (p_ != o.p_) throw std::invalid_argument("LaurentPoly: mixed characteristics");
    if (var_ != o.var_) throw std::invalid_argument("LaurentPoly: mixed variables");
}

void LaurentPoly::add_term(long exp, long coeff) {
    int c = normalize_mod(coeff, p_);
    if (c == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
    } else {
        int s = (it->second + c) % p_;
        if (s == 0) terms_.erase(it);
        else it->second = s;
    }
}

Ord LaurentPoly::order() const {
    if (terms_.empty()) return Ord::inf();
    return Ord(terms_.begin()->first);
}

Fp LaurentPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return Fp(p_, it == terms_.end() ? 0 : it->second);
}

Fp LaurentPoly::low_coeff() const {
    if (terms_.empty()) throw std::invalid_argument("LaurentPoly: low_coeff of zero");
    return Fp(p_, terms_.begin()->second);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    check(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(p_, var_);
    for (const auto& [e, c] : terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check(o);
    LaurentPoly r(p_, var_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term(e1 + e2, static_cast<long>(c1) * c2);
    return r;
}

LaurentPoly LaurentPoly::scaled(Fp c) const {
    if (c.p() != p_) throw std::invalid_argument("LaurentPoly: mixed characteristics");
    LaurentPoly r(p_, var_);
    for (const auto& [e, cc] : terms_) r.add_term(e, static_cast<long>(cc) * c.value());
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    return p_ == o.p_ && var_ == o.var_ && terms_ == o.terms_;
}

LaurentPoly LaurentPoly::frobenius() const {
    LaurentPoly r(p_, var_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e * p_, c);
    return r;
}

LaurentPoly LaurentPoly::pow(long e) const {
    if (e < 0) throw std::invalid_argument("LaurentPoly: negative power");
    LaurentPoly r = constant(Fp::one(p_), var_);
    if (e == 0) return r;
    LaurentPoly base = *this;
    while (e > 0) {
        int digit = static_cast<int>(e % p_);
        for (int k = 0; k < digit; ++k) r = r * base;
        e /= p_;
        if (e > 0) base = base.frobenius();
    }
    return r;
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly r(p_, var_);
    for (const auto& [e, c] : terms_) r.add_term(e - 1, c * e);
    return r;
}

LaurentPoly LaurentPoly::dlog_derivative() const {
    LaurentPoly r(p_, var_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * e);
    return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r(p_, var_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
}

LaurentPoly LaurentPoly::divexact(const LaurentPoly& o) const {
    check(o);
    if (o.is_zero()) throw std::invalid_argument("LaurentPoly: division by zero");
    if (is_zero()) return LaurentPoly(p_, var_);
    // shift both operands to order 0, run plain descending division, shift back
    long sa = order().value();
    long sb = o.order().value();
    LaurentPoly num = shifted(-sa);
    LaurentPoly den = o.shifted(-sb);
    long dden = den.terms_.rbegin()->first;
    Fp lead = Fp(p_, den.terms_.rbegin()->second);
    LaurentPoly q(p_, var_);
    while (!num.is_zero()) {
        long dn = num.terms_.rbegin()->first;
        if (dn < dden)
            throw std::invalid_argument("LaurentPoly: inexact division");
        Fp qc = Fp(p_, num.terms_.rbegin()->second) / lead;
        long qe = dn - dden;
        q.add_term(qe, qc.value());
        num = num - den.scaled(qc).shifted(qe);
    }
    return q.shifted(sa - sb);
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (c != 1 || e == 0) os << c;
        if (e != 0) {
            if (c != 1) os << "*";
            os << var_;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

} // namespace wittswan
