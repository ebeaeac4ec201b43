#include "wittswan/zpoly.hpp"

#include <sstream>

namespace wittswan {

ZPoly::ZPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("ZPoly: need at least one variable");
}

ZPoly ZPoly::monomial(int nvars, const ExpVec& exps, const mpz_class& coeff) {
    ZPoly f(nvars);
    f.add_term(exps, coeff);
    return f;
}

ZPoly ZPoly::variable(int nvars, int idx) {
    ExpVec e(nvars, 0);
    e[idx] = 1;
    return monomial(nvars, e, 1);
}

ZPoly ZPoly::constant(int nvars, const mpz_class& coeff) {
    return monomial(nvars, ExpVec(nvars, 0), coeff);
}

void ZPoly::add_term(const ExpVec& exps, const mpz_class& coeff) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw std::invalid_argument("ZPoly: exponent arity mismatch");
    for (int x : exps)
        if (x < 0) throw std::invalid_argument("ZPoly: negative exponent");
    if (coeff == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("ZPoly: arity mismatch");
    ZPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("ZPoly: arity mismatch");
    ZPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

ZPoly ZPoly::operator-() const {
    ZPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("ZPoly: arity mismatch");
    ZPoly r(nvars_);
    ExpVec e(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            for (int k = 0; k < nvars_; ++k) e[k] = e1[k] + e2[k];
            r.add_term(e, c1 * c2);
        }
    return r;
}

ZPoly ZPoly::scaled(const mpz_class& c) const {
    ZPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, cc] : terms_) r.terms_.emplace(e, cc * c);
    return r;
}

ZPoly ZPoly::pow(long e) const {
    if (e < 0) throw std::invalid_argument("ZPoly: negative power");
    ZPoly r = constant(nvars_, 1);
    ZPoly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e > 0) b = b * b;
    }
    return r;
}

bool ZPoly::operator==(const ZPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

ZPoly ZPoly::divexact_scalar(const mpz_class& c) const {
    if (c == 0) throw std::invalid_argument("ZPoly: division by zero");
    ZPoly r(nvars_);
    for (const auto& [e, cc] : terms_) {
        if (!mpz_divisible_p(cc.get_mpz_t(), c.get_mpz_t()))
            throw std::logic_error("ZPoly: inexact coefficient division");
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), cc.get_mpz_t(), c.get_mpz_t());
        r.terms_.emplace(e, q);
    }
    return r;
}

std::string ZPoly::str(const std::vector<std::string>& vars) const {
    if (static_cast<int>(vars.size()) != nvars_)
        throw std::invalid_argument("ZPoly: variable name arity mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpz_class a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool printed = false;
        if (a != 1) { os << a.get_str(); printed = true; }
        for (int k = 0; k < nvars_; ++k) {
            if (e[k] == 0) continue;
            if (printed) os << "*";
            os << vars[k];
            if (e[k] != 1) os << "^" << e[k];
            printed = true;
        }
        if (!printed) os << a.get_str();
    }
    return os.str();
}

} // namespace wittswan
