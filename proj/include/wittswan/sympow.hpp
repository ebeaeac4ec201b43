#ifndef WITTSWAN_SYMPOW_HPP
#define WITTSWAN_SYMPOW_HPP

#include "wittswan/asw.hpp"
#include "wittswan/symmetric.hpp"

namespace wittswan {

inline constexpr int kDefaultChartCap = 3; // maximal symmetric-power degree

// Chart of the d-th symmetric power of the base disk: coordinates
// S_1..S_d downstairs, t_1..t_d upstairs, exceptional point S = 0.
struct SymmetricChart {
    int d;
    WittCtx ctx;

    static SymmetricChart make(WittCtx ctx, int d, int cap = kDefaultChartCap);

    int p() const { return ctx->p; }
    int m() const { return ctx->len - 1; }
    std::vector<std::string> tvars() const { return indexed_vars("t", d); }
    std::vector<std::string> svars() const { return indexed_vars("S", d); }
};

// sum of the d coordinate pullbacks of alpha in the Witt group upstairs
WittVector<MultiLaurentPoly> lambda_t_level(const WittLaurent& alpha,
                                            const SymmetricChart& chart);

// the same sum with every component rewritten in S_1..S_d
WittVector<SFraction> lambda_pushforward(const WittLaurent& alpha,
                                         const SymmetricChart& chart);

inline Ord v_witt_exceptional(const WittVector<SFraction>& a) {
    return v_witt(a, [](const SFraction& f) { return f.v_exceptional(); });
}

// differential sum_k c_k * dS_k/S_d on the chart
class OmegaForm {
public:
    OmegaForm(int p, int d);
    OmegaForm(std::vector<SFraction> coeffs);

    int p() const { return coeffs_[0].p(); }
    int d() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<SFraction>& coeffs() const { return coeffs_; }
    const SFraction& coeff(int k) const { return coeffs_.at(k - 1); } // 1-based

    bool is_zero() const;

    OmegaForm operator+(const OmegaForm& o) const;
    OmegaForm operator-(const OmegaForm& o) const;
    OmegaForm scaled(const SFraction& c) const;
    OmegaForm scaled(Fp c) const;
    OmegaForm times_sd_pow(long k) const;

    bool operator==(const OmegaForm& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const OmegaForm& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::vector<SFraction> coeffs_;
};

Ord v_log_exceptional(const OmegaForm& w);

// rewrite a differential sum_j h_j dt_j in the dS_k/S_d basis by inverting
// the Jacobian d S_k / d t_j; the cofactor divisions are exact
OmegaForm tform_to_omega(const std::vector<MultiLaurentPoly>& h,
                         const SymmetricChart& chart);

// trace a one-variable differential through the d coordinate projections
OmegaForm mu_pushforward(const LogForm& w, const SymmetricChart& chart);

// fmd upstairs, as the coefficient vector on dt_1..dt_d
std::vector<MultiLaurentPoly> fmd_t_level(const WittVector<MultiLaurentPoly>& a,
                                          const SymmetricChart& chart);

// omega_i = sum_j dt_j / t_j^i, computed both by the generating-series
// recursion on F(T) = prod (T - t_j) and by Jacobian inversion; the two
// routes must agree
OmegaForm omega_basis(const SymmetricChart& chart, long i);

struct AnBasisReport {
    int d;
    int j;
    int p;
    bool entries_integral;  // all matrix entries have v_exceptional >= 0
    Ord det_val;            // v_exceptional of the matrix determinant
    bool pass;              // entries_integral and det_val == 0
    std::vector<std::vector<SFraction>> matrix;
};

// expand S_d^j * omega_{jd+1} .. S_d^j * omega_{(j+1)d} over dS_k/S_d and
// test that the transition matrix is unimodular over the chart ring
AnBasisReport anbasis_check(const SymmetricChart& chart, int j);

struct SymSwanCertificate {
    long upstairs; // certified conductor of the input character
    long n;        // conductor at the exceptional valuation (upper bound if uncertified)
    bool certified;
    long lower, upper;
    WittVector<SFraction> pushforward;
    OmegaForm witness;
};

// conductor of the pushforward character at the exceptional valuation of
// the d-th symmetric power; requires a certified input certificate
SymSwanCertificate sympow_swan(const SwanCertificate& upstream,
                               const SymmetricChart& chart);

// Chart of the blow-up of the product of two disks at the origin:
// coordinates x, y, exceptional valuation = order of vanishing at the origin.
struct ProductChart {
    WittCtx ctx;

    static ProductChart make(WittCtx ctx);

    int p() const { return ctx->p; }
    std::vector<std::string> vars() const { return {"x", "y"}; }
};

// differential f * dlog x + g * dlog y with bivariate Laurent coefficients
class ProductForm {
public:
    ProductForm(MultiLaurentPoly f, MultiLaurentPoly g);

    static ProductForm zero(int p);
    // exact differential of a bivariate Laurent polynomial
    static ProductForm d_of(const MultiLaurentPoly& h);

    const MultiLaurentPoly& fx() const { return f_; }
    const MultiLaurentPoly& gy() const { return g_; }

    ProductForm operator+(const ProductForm& o) const;
    bool operator==(const ProductForm& o) const { return f_ == o.f_ && g_ == o.g_; }
    bool operator!=(const ProductForm& o) const { return !(*this == o); }

    Ord v_log() const { return min(f_.total_order(), g_.total_order()); }

    std::string str() const;

private:
    MultiLaurentPoly f_, g_;
};

struct DprodDecomposition {
    ProductForm part_x, part_y;
    Ord v_x, v_y, v_joint; // valuations of the parts and their minimum
};

// split along the two axis directions; the filtration level at the
// exceptional valuation is the maximum of the two part levels
DprodDecomposition dprod_decompose(const ProductForm& w);

struct ProdSwanCertificate {
    long n1, n2;
    long n;
    bool certified;
    long lower, upper;
    WittVector<MultiLaurentPoly> sum_rep; // external sum representative
    ProductForm witness;
};

// conductor of the external sum character at the exceptional valuation of
// the blown-up product; requires certified input certificates
ProdSwanCertificate blprod_swan(const SwanCertificate& c1, const SwanCertificate& c2,
                                const ProductChart& chart);

// smallest symmetric-power degree for which the global construction
// applies: max(2*genus - 1 + deg_mod, deg_mod)
long min_degree_bound(long genus, long deg_mod);

} // namespace wittswan

#endif
