#ifndef WITTSWAN_ASW_HPP
#define WITTSWAN_ASW_HPP

#include "wittswan/ring.hpp"
#include "wittswan/witt.hpp"

namespace wittswan {

using WittLaurent = WittVector<LaurentPoly>;

// differential c(t) * dlog t
class LogForm {
public:
    explicit LogForm(LaurentPoly coeff) : coeff_(std::move(coeff)) {}

    static LogForm zero(int p, const std::string& var = "t") {
        return LogForm(LaurentPoly(p, var));
    }

    int p() const { return coeff_.p(); }
    const LaurentPoly& coeff() const { return coeff_; }
    bool is_zero() const { return coeff_.is_zero(); }

    LogForm operator+(const LogForm& o) const { return LogForm(coeff_ + o.coeff_); }
    LogForm operator-(const LogForm& o) const { return LogForm(coeff_ - o.coeff_); }
    LogForm scaled(Fp c) const { return LogForm(coeff_.scaled(c)); }

    bool operator==(const LogForm& o) const { return coeff_ == o.coeff_; }
    bool operator!=(const LogForm& o) const { return !(*this == o); }

    std::string str() const { return "(" + coeff_.str() + ") dlog " + coeff_.var(); }

private:
    LaurentPoly coeff_;
};

inline Ord v_log_local(const LogForm& w) { return w.coeff().order(); }

inline Ord v_witt_local(const WittLaurent& a) {
    return v_witt(a, [](const LaurentPoly& f) { return f.order(); });
}

// sum_i a_i^(p^(m-i) - 1) d a_i, expressed in the dlog t basis
LogForm fmd(const WittLaurent& a);

struct ReductionStep {
    int slot;
    LaurentPoly b; // the recorded term is (F - 1)(V_slot(b))
};

struct ReductionResult {
    WittLaurent reduced;
    std::vector<ReductionStep> steps;
};

// Cancel p-divisible pole orders slot by slot: a pole c*t^(-pk) in slot i
// is removed by subtracting (F - 1)(V_i(c*t^(-k))), which fixes all lower
// slots. Afterwards every component either is regular or has pole order
// prime to p.
ReductionResult reduce_representative(const WittLaurent& alpha);

// replay the recorded steps: alpha - reduced == sum of (F-1)(V(b)) terms
WittLaurent replay_steps(const std::vector<ReductionStep>& steps, WittCtx ctx);

// Character of the complete local field attached to a Witt vector,
// considered modulo (F - 1).
class ASWCharacter {
public:
    explicit ASWCharacter(WittLaurent alpha) : alpha_(std::move(alpha)) {}

    const WittLaurent& alpha() const { return alpha_; }
    const WittCtx& ctx() const { return alpha_.ctx(); }
    int p() const { return alpha_.p(); }

    // trivial iff the reduced representative has every component of
    // strictly positive order: no poles and zero residue vector
    bool is_trivial() const;

    // no poles after reduction
    bool is_unramified() const;

    bool same_class(const ASWCharacter& o) const;

private:
    WittLaurent alpha_;
};

inline ASWCharacter char_from_witt(WittLaurent alpha) {
    return ASWCharacter(std::move(alpha));
}

struct RswClass {
    long n;          // filtration level of the reduced representative
    LogForm witness; // fmd of the reduced representative
};

RswClass rsw_class(const ASWCharacter& chi);

// shared certification rule: an upper bound n_upper from the reduced
// representative is certified exact when the witness valuation is exactly
// -n_upper (the graded piece embeds into differentials for levels down to
// floor(n/p)); otherwise only bounds are reported
struct CertBounds {
    bool certified;
    long n;
    long lower, upper;
};

CertBounds certify_from(long n_upper, Ord witness_val, int p);

struct SwanCertificate {
    long n;
    bool certified;
    long lower, upper;
    WittLaurent reduced;
    LogForm witness;
};

SwanCertificate swan_conductor(const ASWCharacter& chi);

} // namespace wittswan

#endif
