#ifndef WITTSWAN_ZPOLY_HPP
#define WITTSWAN_ZPOLY_HPP

#include <gmpxx.h>

#include <map>
#include <vector>

#include "wittswan/multilaurent.hpp"
#include "wittswan/ring.hpp"

namespace wittswan {

// Sparse multivariate polynomial over Z with nonnegative exponents.
// Carrier for the universal Witt polynomials.
class ZPoly {
public:
    explicit ZPoly(int nvars);

    static ZPoly monomial(int nvars, const ExpVec& exps, const mpz_class& coeff);
    static ZPoly variable(int nvars, int idx);
    static ZPoly constant(int nvars, const mpz_class& coeff);

    int nvars() const { return nvars_; }
    const std::map<ExpVec, mpz_class, GrlexLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    ZPoly operator-() const;
    ZPoly scaled(const mpz_class& c) const;
    ZPoly pow(long e) const;

    bool operator==(const ZPoly& o) const;
    bool operator!=(const ZPoly& o) const { return !(*this == o); }

    // divide every coefficient by c; throws std::logic_error when inexact
    ZPoly divexact_scalar(const mpz_class& c) const;

    void add_term(const ExpVec& exps, const mpz_class& coeff);

    std::string str(const std::vector<std::string>& vars) const;

    // evaluate at ring elements; `like` supplies the target ring context
    template <typename R>
    R eval(const std::vector<R>& values, const R& like) const {
        if (static_cast<int>(values.size()) != nvars_)
            throw std::invalid_argument("ZPoly: evaluation arity mismatch");
        // cache powers per variable
        std::vector<std::map<int, R>> powers(nvars_);
        R acc = RingTraits<R>::zero(like);
        for (const auto& [e, c] : terms_) {
            R term = RingTraits<R>::from_mpz(c, like);
            if (RingTraits<R>::is_zero(term)) continue;
            for (int v = 0; v < nvars_; ++v) {
                if (e[v] == 0) continue;
                auto it = powers[v].find(e[v]);
                if (it == powers[v].end())
                    it = powers[v].emplace(e[v], RingTraits<R>::pow(values[v], e[v])).first;
                term = term * it->second;
            }
            acc = acc + term;
        }
        return acc;
    }

private:
    int nvars_;
    std::map<ExpVec, mpz_class, GrlexLess> terms_;
};

} // namespace wittswan

#endif
