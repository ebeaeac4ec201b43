#include "wittswan/sympow.hpp"

#include <sstream>

namespace wittswan {

namespace {

long int_pow(int p, int e) {
    long r = 1;
    while (e-- > 0) r *= p;
    return r;
}

// Laplace expansion along the first row; fine for the d <= 3 charts
template <typename P>
P small_det(const std::vector<std::vector<P>>& M, const P& zero) {
    size_t n = M.size();
    if (n == 1) return M[0][0];
    P acc = zero;
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<P>> minor;
        minor.reserve(n - 1);
        for (size_t r = 1; r < n; ++r) {
            std::vector<P> row;
            row.reserve(n - 1);
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(M[r][c]);
            minor.push_back(std::move(row));
        }
        P term = M[0][j] * small_det(minor, zero);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

template <typename P>
P minor_det(const std::vector<std::vector<P>>& M, size_t row, size_t col,
            const P& zero) {
    std::vector<std::vector<P>> minor;
    for (size_t r = 0; r < M.size(); ++r) {
        if (r == row) continue;
        std::vector<P> line;
        for (size_t c = 0; c < M.size(); ++c)
            if (c != col) line.push_back(M[r][c]);
        minor.push_back(std::move(line));
    }
    return small_det(minor, zero);
}

} // namespace

SymmetricChart SymmetricChart::make(WittCtx ctx, int d, int cap) {
    if (!ctx) throw std::invalid_argument("SymmetricChart: null context");
    if (d < 2 || d > cap)
        throw std::invalid_argument("SymmetricChart: degree " + std::to_string(d) +
                                    " outside [2, " + std::to_string(cap) + "]");
    return SymmetricChart{d, std::move(ctx)};
}

WittVector<MultiLaurentPoly> lambda_t_level(const WittLaurent& alpha,
                                            const SymmetricChart& chart) {
    detail::check_same_ctx(*alpha.ctx(), *chart.ctx);
    auto embed = [&](int axis) {
        std::vector<MultiLaurentPoly> comps;
        comps.reserve(alpha.len());
        for (const auto& c : alpha.comps())
            comps.push_back(embed_axis(c, axis, chart.tvars()));
        return WittVector<MultiLaurentPoly>(chart.ctx, std::move(comps));
    };
    WittVector<MultiLaurentPoly> acc = embed(0);
    for (int i = 1; i < chart.d; ++i) acc = witt_add(acc, embed(i));
    return acc;
}

WittVector<SFraction> lambda_pushforward(const WittLaurent& alpha,
                                         const SymmetricChart& chart) {
    WittVector<MultiLaurentPoly> up = lambda_t_level(alpha, chart);
    std::vector<SFraction> comps;
    comps.reserve(up.len());
    for (const auto& c : up.comps()) {
        if (!c.is_symmetric())
            throw std::logic_error("lambda_pushforward: component not symmetric");
        comps.push_back(sym_to_elementary(c));
    }
    return WittVector<SFraction>(chart.ctx, std::move(comps));
}

OmegaForm::OmegaForm(int p, int d) {
    if (d < 1) throw std::invalid_argument("OmegaForm: empty chart");
    for (int k = 0; k < d; ++k) coeffs_.push_back(SFraction::zero(p, d));
}

OmegaForm::OmegaForm(std::vector<SFraction> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("OmegaForm: empty chart");
    for (const auto& c : coeffs_)
        if (c.p() != coeffs_[0].p() || c.d() != static_cast<int>(coeffs_.size()))
            throw std::invalid_argument("OmegaForm: inconsistent coefficients");
}

bool OmegaForm::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

OmegaForm OmegaForm::operator+(const OmegaForm& o) const {
    if (d() != o.d()) throw std::invalid_argument("OmegaForm: chart mismatch");
    std::vector<SFraction> out;
    out.reserve(coeffs_.size());
    for (size_t k = 0; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] + o.coeffs_[k]);
    return OmegaForm(std::move(out));
}

OmegaForm OmegaForm::operator-(const OmegaForm& o) const {
    if (d() != o.d()) throw std::invalid_argument("OmegaForm: chart mismatch");
    std::vector<SFraction> out;
    out.reserve(coeffs_.size());
    for (size_t k = 0; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] - o.coeffs_[k]);
    return OmegaForm(std::move(out));
}

OmegaForm OmegaForm::scaled(const SFraction& c) const {
    std::vector<SFraction> out;
    out.reserve(coeffs_.size());
    for (const auto& x : coeffs_) out.push_back(x * c);
    return OmegaForm(std::move(out));
}

OmegaForm OmegaForm::scaled(Fp c) const {
    std::vector<SFraction> out;
    out.reserve(coeffs_.size());
    for (const auto& x : coeffs_) out.push_back(x.scaled(c));
    return OmegaForm(std::move(out));
}

OmegaForm OmegaForm::times_sd_pow(long k) const {
    std::vector<SFraction> out;
    out.reserve(coeffs_.size());
    for (const auto& x : coeffs_) out.push_back(x.times_sd_pow(k));
    return OmegaForm(std::move(out));
}

std::string OmegaForm::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 1; k <= d(); ++k) {
        if (coeffs_[k - 1].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[k - 1].str() << ") dS" << k << "/S" << d();
    }
    if (first) return "0";
    return os.str();
}

Ord v_log_exceptional(const OmegaForm& w) {
    Ord best = Ord::inf();
    for (const auto& c : w.coeffs()) best = min(best, c.v_exceptional());
    return best;
}

OmegaForm tform_to_omega(const std::vector<MultiLaurentPoly>& h,
                         const SymmetricChart& chart) {
    int d = chart.d;
    int p = chart.p();
    if (static_cast<int>(h.size()) != d)
        throw std::invalid_argument("tform_to_omega: wrong coefficient count");

    std::vector<std::vector<MultiLaurentPoly>> J;
    for (int k = 1; k <= d; ++k) {
        MultiLaurentPoly ek = elementary_symmetric(p, d, k);
        std::vector<MultiLaurentPoly> row;
        for (int j = 0; j < d; ++j) row.push_back(ek.derivative(j));
        J.push_back(std::move(row));
    }
    MultiLaurentPoly zero(p, chart.tvars());
    MultiLaurentPoly detJ = small_det(J, zero);
    if (detJ.is_zero()) throw std::logic_error("tform_to_omega: singular Jacobian");

    std::vector<SFraction> out;
    out.reserve(d);
    SFraction sd = SFraction::coordinate(p, d, d);
    for (int k = 0; k < d; ++k) {
        // dt_j = sum_k adj[j][k]/det dS_(k+1) with adj[j][k] = (-1)^(j+k) minor(k, j)
        MultiLaurentPoly Nk = zero;
        for (int j = 0; j < d; ++j) {
            MultiLaurentPoly cof = minor_det(J, k, j, zero);
            if ((j + k) % 2 == 1) cof = -cof;
            Nk = Nk + h[j] * cof;
        }
        MultiLaurentPoly gamma = Nk.divexact(detJ);
        if (!gamma.is_symmetric())
            throw std::logic_error("tform_to_omega: coefficient not symmetric");
        out.push_back(sym_to_elementary(gamma) * sd);
    }
    return OmegaForm(std::move(out));
}

OmegaForm mu_pushforward(const LogForm& w, const SymmetricChart& chart) {
    int d = chart.d;
    std::vector<MultiLaurentPoly> h;
    h.reserve(d);
    for (int j = 0; j < d; ++j) {
        // c(t_j) dlog t_j = (c(t_j)/t_j) dt_j
        MultiLaurentPoly cj = embed_axis(w.coeff(), j, chart.tvars());
        ExpVec s(d, 0);
        s[j] = -1;
        h.push_back(cj.shifted(s));
    }
    return tform_to_omega(h, chart);
}

std::vector<MultiLaurentPoly> fmd_t_level(const WittVector<MultiLaurentPoly>& a,
                                          const SymmetricChart& chart) {
    int d = chart.d;
    int m = a.len() - 1;
    int p = a.p();
    std::vector<MultiLaurentPoly> h(d, MultiLaurentPoly(p, chart.tvars()));
    for (int i = 0; i <= m; ++i) {
        MultiLaurentPoly powed = a[i].pow(int_pow(p, m - i) - 1);
        for (int j = 0; j < d; ++j) h[j] = h[j] + powed * a[i].derivative(j);
    }
    return h;
}

namespace {

// dS_c as a form over dS_k/S_d: coefficient S_d in slot c; zero outside 1..d
OmegaForm ds_form(int p, int d, long c) {
    OmegaForm w(p, d);
    if (c < 1 || c > d) return w;
    std::vector<SFraction> coeffs = w.coeffs();
    coeffs[c - 1] = SFraction::coordinate(p, d, d);
    return OmegaForm(std::move(coeffs));
}

Fp sign(int p, long a) { return (a % 2 == 0) ? Fp::one(p) : -Fp::one(p); }

// omega_1, omega_2, ... from dF = F * sum_{r>=0} omega_{r+1} T^r with
// F(T) = prod (T - t_i) = sum (-1)^(d-b) S_(d-b) T^b
std::vector<OmegaForm> omega_up(const SymmetricChart& chart, long count) {
    int p = chart.p();
    int d = chart.d;
    std::vector<OmegaForm> w; // w[a] = omega_(a+1)
    for (long a = 0; a < count; ++a) {
        OmegaForm acc = ds_form(p, d, d - a).scaled(sign(p, a));
        for (long b = 1; b <= std::min<long>(d, a); ++b) {
            SFraction sdb = (d - b == 0) ? SFraction::one(p, d)
                                         : SFraction::coordinate(p, d, d - b);
            acc = acc - w[a - b].scaled(sdb.scaled(sign(p, b)));
        }
        w.push_back(acc.times_sd_pow(-1));
    }
    return w;
}

// omega_0, omega_-1, ... from dG = -G * sum_{r>=0} omega_{-r} T^(r+1) with
// G(T) = prod (1 - t_i T)
std::vector<OmegaForm> omega_down(const SymmetricChart& chart, long count) {
    int p = chart.p();
    int d = chart.d;
    std::vector<OmegaForm> w; // w[a] = omega_(-a)
    for (long a = 0; a < count; ++a) {
        OmegaForm acc = ds_form(p, d, a + 1).scaled(sign(p, a));
        for (long r = 0; r < a; ++r) {
            if (a - r > d) continue;
            SFraction sc = SFraction::coordinate(p, d, a - r);
            acc = acc - w[r].scaled(sc.scaled(sign(p, a - r)));
        }
        w.push_back(acc);
    }
    return w;
}

OmegaForm omega_by_recursion(const SymmetricChart& chart, long i) {
    if (i >= 1) return omega_up(chart, i).back();
    return omega_down(chart, -i + 1).back();
}

} // namespace

OmegaForm omega_basis(const SymmetricChart& chart, long i) {
    OmegaForm rec = omega_by_recursion(chart, i);
    LogForm form(LaurentPoly::monomial(chart.p(), 1 - i, 1));
    OmegaForm jac = mu_pushforward(form, chart);
    if (rec != jac)
        throw std::logic_error("omega_basis: recursion and Jacobian routes disagree");
    return rec;
}

AnBasisReport anbasis_check(const SymmetricChart& chart, int j) {
    int d = chart.d;
    std::vector<std::vector<SFraction>> M;
    M.reserve(d);
    for (int r = 1; r <= d; ++r) {
        OmegaForm w = omega_basis(chart, static_cast<long>(j) * d + r).times_sd_pow(j);
        M.push_back(w.coeffs());
    }
    bool entries_ok = true;
    for (const auto& row : M)
        for (const auto& entry : row)
            if (entry.v_exceptional() < Ord(0)) entries_ok = false;
    SFraction det = small_det(M, SFraction::zero(chart.p(), d));
    Ord dv = det.v_exceptional();
    bool pass = entries_ok && dv == Ord(0);
    return {d, j, chart.p(), entries_ok, dv, pass, std::move(M)};
}

SymSwanCertificate sympow_swan(const SwanCertificate& upstream,
                               const SymmetricChart& chart) {
    if (!upstream.certified)
        throw std::invalid_argument("sympow_swan: upstream conductor is not certified");
    long n = upstream.n;
    long target = n / chart.d;
    WittVector<SFraction> lam = lambda_pushforward(upstream.reduced, chart);
    Ord vw = v_witt_exceptional(lam);
    if (vw < Ord(-target))
        throw std::logic_error("sympow_swan: pushforward escapes the filtration bound");
    OmegaForm wit = mu_pushforward(upstream.witness, chart);
    Ord lv = v_log_exceptional(wit);
    if (lv < vw)
        throw std::logic_error("sympow_swan: witness below the pushforward level");
    CertBounds cb = certify_from(target, lv, chart.p());
    return {n, cb.n, cb.certified, cb.lower, cb.upper, std::move(lam), std::move(wit)};
}

ProductChart ProductChart::make(WittCtx ctx) {
    if (!ctx) throw std::invalid_argument("ProductChart: null context");
    return ProductChart{std::move(ctx)};
}

ProductForm::ProductForm(MultiLaurentPoly f, MultiLaurentPoly g)
    : f_(std::move(f)), g_(std::move(g)) {
    if (f_.nvars() != 2 || g_.nvars() != 2 || f_.p() != g_.p() ||
        f_.vars() != g_.vars())
        throw std::invalid_argument("ProductForm: need matching bivariate coefficients");
}

ProductForm ProductForm::zero(int p) {
    MultiLaurentPoly z(p, {"x", "y"});
    return ProductForm(z, z);
}

ProductForm ProductForm::d_of(const MultiLaurentPoly& h) {
    if (h.nvars() != 2) throw std::invalid_argument("ProductForm: need a bivariate input");
    // dh = (x dh/dx) dlog x + (y dh/dy) dlog y
    ExpVec sx{1, 0}, sy{0, 1};
    return ProductForm(h.derivative(0).shifted(sx), h.derivative(1).shifted(sy));
}

ProductForm ProductForm::operator+(const ProductForm& o) const {
    return ProductForm(f_ + o.f_, g_ + o.g_);
}

std::string ProductForm::str() const {
    return "(" + f_.str() + ") dlog x + (" + g_.str() + ") dlog y";
}

DprodDecomposition dprod_decompose(const ProductForm& w) {
    int p = w.fx().p();
    MultiLaurentPoly z(p, w.fx().vars());
    ProductForm px(w.fx(), z), py(z, w.gy());
    Ord vx = w.fx().total_order();
    Ord vy = w.gy().total_order();
    return {std::move(px), std::move(py), vx, vy, min(vx, vy)};
}

ProdSwanCertificate blprod_swan(const SwanCertificate& c1, const SwanCertificate& c2,
                                const ProductChart& chart) {
    if (!c1.certified || !c2.certified)
        throw std::invalid_argument("blprod_swan: upstream conductors are not certified");
    detail::check_same_ctx(*c1.reduced.ctx(), *chart.ctx);
    detail::check_same_ctx(*c2.reduced.ctx(), *chart.ctx);
    auto embed_vec = [&](const WittLaurent& a, int axis) {
        std::vector<MultiLaurentPoly> comps;
        comps.reserve(a.len());
        for (const auto& c : a.comps())
            comps.push_back(embed_axis(c, axis, chart.vars()));
        return WittVector<MultiLaurentPoly>(chart.ctx, std::move(comps));
    };
    WittVector<MultiLaurentPoly> sum =
        witt_add(embed_vec(c1.reduced, 0), embed_vec(c2.reduced, 1));
    long target = std::max(c1.n, c2.n);
    Ord vw = v_witt(sum, [](const MultiLaurentPoly& f) { return f.total_order(); });
    if (vw < Ord(-target))
        throw std::logic_error("blprod_swan: external sum escapes the filtration bound");
    ProductForm wit(embed_axis(c1.witness.coeff(), 0, chart.vars()),
                    embed_axis(c2.witness.coeff(), 1, chart.vars()));
    Ord lv = wit.v_log();
    if (lv < vw)
        throw std::logic_error("blprod_swan: witness below the sum level");
    CertBounds cb = certify_from(target, lv, chart.p());
    return {c1.n, c2.n, cb.n,       cb.certified,
            cb.lower, cb.upper, std::move(sum), std::move(wit)};
}

long min_degree_bound(long genus, long deg_mod) {
    if (genus < 0 || deg_mod < 0)
        throw std::invalid_argument("min_degree_bound: negative input");
    return std::max(2 * genus - 1 + deg_mod, deg_mod);
}

} // namespace wittswan
