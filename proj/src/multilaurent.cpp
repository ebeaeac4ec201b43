#include "wittswan/multilaurent.hpp"

#include <algorithm>
#include <sstream>

namespace wittswan {

MultiLaurentPoly::MultiLaurentPoly(int p, std::vector<std::string> vars)
    : p_(p), vars_(std::move(vars)) {
    require_supported_prime(p);
    if (vars_.empty()) throw std::invalid_argument("MultiLaurentPoly: empty variable list");
}

MultiLaurentPoly MultiLaurentPoly::monomial(int p, std::vector<std::string> vars,
                                            const ExpVec& exps, long coeff) {
    MultiLaurentPoly f(p, std::move(vars));
    f.add_term(exps, coeff);
    return f;
}

MultiLaurentPoly MultiLaurentPoly::constant(int p, std::vector<std::string> vars, long coeff) {
    ExpVec z(vars.size(), 0);
    return monomial(p, std::move(vars), z, coeff);
}

void MultiLaurentPoly::check(const MultiLaurentPoly& o) const {
    if (p_ != o.p_) throw std::invalid_argument("MultiLaurentPoly: mixed characteristics");
    if (vars_ != o.vars_) throw std::invalid_argument("MultiLaurentPoly: mixed variable lists");
}

void MultiLaurentPoly::add_term(const ExpVec& exps, long coeff) {
    if (exps.size() != vars_.size())
        throw std::invalid_argument("MultiLaurentPoly: exponent arity mismatch");
    int c = normalize_mod(coeff, p_);
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        int s = (it->second + c) % p_;
        if (s == 0) terms_.erase(it);
        else it->second = s;
    }
}

Ord MultiLaurentPoly::total_order() const {
    if (terms_.empty()) return Ord::inf();
    long s = 0;
    for (int e : terms_.begin()->first) s += e;
    return Ord(s);
}

MultiLaurentPoly MultiLaurentPoly::operator+(const MultiLaurentPoly& o) const {
    check(o);
    MultiLaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiLaurentPoly MultiLaurentPoly::operator-(const MultiLaurentPoly& o) const {
    check(o);
    MultiLaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiLaurentPoly MultiLaurentPoly::operator-() const {
    MultiLaurentPoly r(p_, vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, -c);
    return r;
}

MultiLaurentPoly MultiLaurentPoly::operator*(const MultiLaurentPoly& o) const {
    check(o);
    MultiLaurentPoly r(p_, vars_);
    ExpVec e(vars_.size());
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            for (size_t k = 0; k < e.size(); ++k) e[k] = e1[k] + e2[k];
            r.add_term(e, static_cast<long>(c1) * c2);
        }
    return r;
}

MultiLaurentPoly MultiLaurentPoly::scaled(Fp c) const {
    if (c.p() != p_) throw std::invalid_argument("MultiLaurentPoly: mixed characteristics");
    MultiLaurentPoly r(p_, vars_);
    for (const auto& [e, cc] : terms_) r.add_term(e, static_cast<long>(cc) * c.value());
    return r;
}

bool MultiLaurentPoly::operator==(const MultiLaurentPoly& o) const {
    return p_ == o.p_ && vars_ == o.vars_ && terms_ == o.terms_;
}

LaurentPoly MultiLaurentPoly::to_univariate() const {
    if (vars_.size() != 1)
        throw std::invalid_argument("MultiLaurentPoly: not univariate");
    LaurentPoly r(p_, vars_[0]);
    for (const auto& [e, c] : terms_) r.add_term(e[0], c);
    return r;
}

MultiLaurentPoly MultiLaurentPoly::frobenius() const {
    MultiLaurentPoly r(p_, vars_);
    for (const auto& [e, c] : terms_) {
        ExpVec pe = e;
        for (int& x : pe) x *= p_;
        r.terms_.emplace(pe, c);
    }
    return r;
}

MultiLaurentPoly MultiLaurentPoly::pow(long e) const {
    if (e < 0) throw std::invalid_argument("MultiLaurentPoly: negative power");
    MultiLaurentPoly r = constant(p_, vars_, 1);
    if (e == 0) return r;
    MultiLaurentPoly base = *this;
    while (e > 0) {
        int digit = static_cast<int>(e % p_);
        for (int k = 0; k < digit; ++k) r = r * base;
        e /= p_;
        if (e > 0) base = base.frobenius();
    }
    return r;
}

MultiLaurentPoly MultiLaurentPoly::shifted(const ExpVec& s) const {
    if (s.size() != vars_.size())
        throw std::invalid_argument("MultiLaurentPoly: shift arity mismatch");
    MultiLaurentPoly r(p_, vars_);
    for (const auto& [e, c] : terms_) {
        ExpVec ne = e;
        for (size_t k = 0; k < ne.size(); ++k) ne[k] += s[k];
        r.terms_.emplace(ne, c);
    }
    return r;
}

MultiLaurentPoly MultiLaurentPoly::derivative(int var) const {
    if (var < 0 || var >= nvars())
        throw std::invalid_argument("MultiLaurentPoly: bad variable index");
    MultiLaurentPoly r(p_, vars_);
    for (const auto& [e, c] : terms_) {
        ExpVec ne = e;
        ne[var] -= 1;
        r.add_term(ne, static_cast<long>(c) * e[var]);
    }
    return r;
}

MultiLaurentPoly MultiLaurentPoly::with_vars_swapped(int i, int j) const {
    MultiLaurentPoly r(p_, vars_);
    for (const auto& [e, c] : terms_) {
        ExpVec ne = e;
        std::swap(ne[i], ne[j]);
        r.terms_.emplace(ne, c);
    }
    return r;
}

bool MultiLaurentPoly::is_symmetric() const {
    // adjacent transpositions generate the full symmetric group
    for (int i = 0; i + 1 < nvars(); ++i)
        if (with_vars_swapped(i, i + 1) != *this) return false;
    return true;
}

namespace {

// strict lexicographic order on exponent vectors
bool lex_less(const ExpVec& a, const ExpVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

MultiLaurentPoly MultiLaurentPoly::divexact(const MultiLaurentPoly& o) const {
    check(o);
    if (o.is_zero()) throw std::invalid_argument("MultiLaurentPoly: division by zero");
    MultiLaurentPoly q(p_, vars_);
    if (is_zero()) return q;

    // clear per-variable minimal exponents so both operands are honest
    // polynomials; the denominator then has no monomial factor and the
    // quotient exists in Laurent form iff it exists in polynomial form
    int n = nvars();
    ExpVec smin_n(n, 0), smin_d(n, 0);
    auto min_exps = [n](const MultiLaurentPoly& f, ExpVec& out) {
        bool first = true;
        for (const auto& [e, c] : f.terms()) {
            (void)c;
            for (int k = 0; k < n; ++k)
                out[k] = first ? e[k] : std::min(out[k], e[k]);
            first = false;
        }
    };
    min_exps(*this, smin_n);
    min_exps(o, smin_d);
    ExpVec neg_n = smin_n, neg_d = smin_d;
    for (int k = 0; k < n; ++k) { neg_n[k] = -neg_n[k]; neg_d[k] = -neg_d[k]; }
    MultiLaurentPoly num = shifted(neg_n);
    MultiLaurentPoly den = o.shifted(neg_d);

    // leading term of den under lex
    ExpVec dl;
    int dl_c = 0;
    for (const auto& [e, c] : den.terms())
        if (dl.empty() || lex_less(dl, e)) { dl = e; dl_c = c; }
    Fp dlead(p_, dl_c);

    while (!num.is_zero()) {
        ExpVec nl;
        int nl_c = 0;
        for (const auto& [e, c] : num.terms())
            if (nl.empty() || lex_less(nl, e)) { nl = e; nl_c = c; }
        ExpVec qe(n);
        for (int k = 0; k < n; ++k) {
            qe[k] = nl[k] - dl[k];
            if (qe[k] < 0)
                throw std::invalid_argument("MultiLaurentPoly: inexact division");
        }
        Fp qc = Fp(p_, nl_c) / dlead;
        MultiLaurentPoly step = monomial(p_, vars_, qe, qc.value());
        q = q + step;
        num = num - step * den;
    }

    ExpVec back(n);
    for (int k = 0; k < n; ++k) back[k] = smin_n[k] - smin_d[k];
    return q.shifted(back);
}

std::string MultiLaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool printed = false;
        if (c != 1) { os << c; printed = true; }
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (printed) os << "*";
            os << vars_[k];
            if (e[k] != 1) os << "^" << e[k];
            printed = true;
        }
        if (!printed) os << c;
    }
    return os.str();
}

Ord mindeg_total(const MultiLaurentPoly& f) {
    for (const auto& [e, c] : f.terms()) {
        (void)c;
        for (int x : e)
            if (x < 0)
                throw std::invalid_argument("mindeg_total: negative exponent");
    }
    return f.total_order();
}

std::vector<std::string> indexed_vars(const std::string& base, int d) {
    std::vector<std::string> v;
    v.reserve(d);
    for (int i = 1; i <= d; ++i) v.push_back(base + std::to_string(i));
    return v;
}

MultiLaurentPoly pullback_i(const LaurentPoly& f, int i, int d) {
    if (i < 1 || i > d) throw std::invalid_argument("pullback_i: index out of range");
    return embed_axis(f, i - 1, indexed_vars(f.var(), d));
}

MultiLaurentPoly embed_axis(const LaurentPoly& f, int axis,
                            std::vector<std::string> vars) {
    MultiLaurentPoly r(f.p(), std::move(vars));
    ExpVec e(r.nvars(), 0);
    for (const auto& [exp, c] : f.terms()) {
        e[axis] = static_cast<int>(exp);
        r.add_term(e, c);
    }
    return r;
}

} // namespace wittswan
