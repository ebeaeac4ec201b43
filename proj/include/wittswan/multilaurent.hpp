#ifndef WITTSWAN_MULTILAURENT_HPP
#define WITTSWAN_MULTILAURENT_HPP

#include <map>
#include <string>
#include <vector>

#include "wittswan/fp.hpp"
#include "wittswan/laurent.hpp"
#include "wittswan/ord.hpp"

namespace wittswan {

using ExpVec = std::vector<int>;

// graded lexicographic: total degree first, then lexicographic
struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

// Sparse multivariate Laurent polynomial over F_p with a fixed ordered
// variable list. Coefficients are integers in [1, p).
class MultiLaurentPoly {
public:
    MultiLaurentPoly(int p, std::vector<std::string> vars);

    static MultiLaurentPoly monomial(int p, std::vector<std::string> vars,
                                     const ExpVec& exps, long coeff);
    static MultiLaurentPoly constant(int p, std::vector<std::string> vars, long coeff);

    int p() const { return p_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<ExpVec, int, GrlexLess>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    // minimal exponent sum over all terms; Ord::inf() for 0
    Ord total_order() const;

    MultiLaurentPoly operator+(const MultiLaurentPoly& o) const;
    MultiLaurentPoly operator-(const MultiLaurentPoly& o) const;
    MultiLaurentPoly operator*(const MultiLaurentPoly& o) const;
    MultiLaurentPoly operator-() const;
    MultiLaurentPoly scaled(Fp c) const;

    bool operator==(const MultiLaurentPoly& o) const;
    bool operator!=(const MultiLaurentPoly& o) const { return !(*this == o); }

    LaurentPoly to_univariate() const;

    MultiLaurentPoly pow(long e) const;
    MultiLaurentPoly frobenius() const;

    // multiply by the monomial with the given exponent vector
    MultiLaurentPoly shifted(const ExpVec& s) const;

    MultiLaurentPoly derivative(int var) const;

    MultiLaurentPoly with_vars_swapped(int i, int j) const;
    bool is_symmetric() const;

    // exact division; throws std::invalid_argument when inexact
    MultiLaurentPoly divexact(const MultiLaurentPoly& o) const;

    void add_term(const ExpVec& exps, long coeff);

    std::string str() const;

private:
    void check(const MultiLaurentPoly& o) const;
    int p_;
    std::vector<std::string> vars_;
    std::map<ExpVec, int, GrlexLess> terms_;
};

// minimal total degree; rejects negative exponents
Ord mindeg_total(const MultiLaurentPoly& f);

// order-at-origin valuation (minimal exponent sum, negative exponents allowed)
inline Ord total_order(const MultiLaurentPoly& f) { return f.total_order(); }

// substitute the single variable of f by variable i (1-based) among
// d variables named var1..vard
MultiLaurentPoly pullback_i(const LaurentPoly& f, int i, int d);

// embed a univariate Laurent polynomial as the given axis variable
MultiLaurentPoly embed_axis(const LaurentPoly& f, int axis,
                            std::vector<std::string> vars);

std::vector<std::string> indexed_vars(const std::string& base, int d);

} // namespace wittswan

#endif
