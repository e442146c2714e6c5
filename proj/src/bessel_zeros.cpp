#include "zerokit/bessel_zeros.hpp"

#include <cmath>

#include "zerokit/airy_zeros.hpp"
#include "zerokit/specfun.hpp"

namespace zk {

namespace {

const cplx I(0.0, 1.0);
const double kTol = 1e-12;

// correction coefficients of beta^{-(2i+1)}
double mm_coeff(int i, double mu, bool deriv) {
    if (!deriv) {
        switch (i) {
            case 0: return (mu - 1) / 8.0;
            case 1: return (mu - 1) * (7 * mu - 31) / 384.0;
            case 2: return (mu - 1) * ((83 * mu - 982) * mu + 3779) / 15360.0;
        }
    } else {
        switch (i) {
            case 0: return (mu + 3) / 8.0;
            case 1: return ((7 * mu + 82) * mu - 9) / 384.0;
            case 2: return (((83 * mu + 2075) * mu - 3039) * mu + 3537) / 15360.0;
        }
    }
    return 0.0;
}

void cospi_sinpi(double x, double& c, double& s) {
    double r = std::fmod(x, 2.0);
    if (r < 0) r += 2.0;
    if (r == 0.0) { c = 1; s = 0; return; }
    if (r == 0.5) { c = 0; s = 1; return; }
    if (r == 1.0) { c = -1; s = 0; return; }
    if (r == 1.5) { c = 0; s = -1; return; }
    c = std::cos(kPi * r);
    s = std::sin(kPi * r);
}

bool zero_mod_pi(cplx alpha) {
    return alpha.imag() == 0.0 && std::abs(std::remainder(alpha.real(), kPi)) < 1e-15;
}

// Root of a decreasing function on (lo, hi), widening the bracket as needed.
template <class F, class D>
double decreasing_root(F f, D df, double target, double lo, double hi, bool widen_hi) {
    while (f(lo) < target && lo > 1e-300) lo *= 0.1;
    if (widen_hi) {
        while (f(hi) > target && hi < 1e300) hi *= 2;
    }
    for (int i = 0; i < 400 && hi - lo > 1e-12 * std::max(1.0, hi); ++i) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) > target) lo = mid; else hi = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 2; ++i) {
        double d = df(x);
        if (d == 0 || !std::isfinite(d)) break;
        double xn = x - (f(x) - target) / d;
        if (xn > 0) x = xn;
    }
    return x;
}

double solve_g(double target) {
    return decreasing_root([](double y) { return eye_g(y); },
                           [](double y) { return -std::sqrt(1 + y * y) / y; }, target, 1e-8, 1.0,
                           true);
}

double solve_f(double target) {
    auto f = [](double x) { return eye_f(cplx(x, 0.0)).real(); };
    auto df = [](double x) { return -std::sqrt(std::max(0.0, 1 - x * x)) / x; };
    double x = decreasing_root(f, df, target, 1e-8, 1.0, false);
    return std::min(x, 1.0);
}

}  // namespace

cplx macmahon(const MacMahonParams& p, int terms, bool deriv, bool* low_accuracy) {
    if (terms < 0 || terms > 3) throw DomainError("macmahon: terms must be in [0, 3]");
    if (p.beta == cplx(0.0)) throw DomainError("macmahon: beta = 0");
    if (low_accuracy) *low_accuracy = std::abs(p.beta) < 3.0;
    cplx b2 = p.beta * p.beta;
    cplx bp = p.beta;
    cplx z = p.beta;
    for (int i = 0; i < terms; ++i) {
        z -= mm_coeff(i, p.mu, deriv) / bp;
        bp *= b2;
    }
    return z;
}

cplx macmahon_optimal(const MacMahonParams& p, bool deriv, int* used) {
    cplx b2 = p.beta * p.beta;
    cplx bp = p.beta;
    cplx z = p.beta;
    double last = 1e300;
    int n = 0;
    for (int i = 0; i < 3; ++i) {
        cplx t = mm_coeff(i, p.mu, deriv) / bp;
        if (std::abs(t) > last) break;
        z -= t;
        last = std::abs(t);
        bp *= b2;
        ++n;
    }
    if (used) *used = n;
    return z;
}

SolutionSpec reflect_order(const SolutionSpec& spec) {
    if (spec.family != Family::Bessel || spec.nu >= 0) return spec;
    SolutionSpec r = spec;
    r.nu = -spec.nu;
    if (spec.limit == Limit::None) r.alpha = spec.alpha + r.nu * kPi;
    return r;
}

std::vector<ZeroEstimate> pos_axis_estimates(const SolutionSpec& spec0, int k_lo, int k_hi,
                                             std::string* notice) {
    std::vector<ZeroEstimate> out;
    SolutionSpec spec = reflect_order(spec0);
    if (spec.limit != Limit::None) {
        if (notice) *notice = "Hankel functions have no zeros as Re z -> +inf";
        return out;
    }
    cplx a = reduce_alpha(spec.alpha);
    if (a.real() < 0) a += kPi;
    double mu = 4 * spec.nu * spec.nu;
    bool first = true;
    for (int k = k_lo; k <= k_hi; ++k) {
        cplx beta = (k + spec.nu / 2 - 0.25) * kPi - a;
        if (spec.deriv) beta -= kPi / 2;
        if (beta.real() <= 0) {
            if (notice) *notice = "indices with Re beta <= 0 skipped";
            continue;
        }
        MacMahonParams p{beta, mu, kPi / 2 - a};
        ZeroEstimate e;
        e.z = macmahon_optimal(p, spec.deriv, &e.order);
        e.k = k;
        e.t = beta;
        e.string = "pos_axis";
        e.low_accuracy = std::abs(beta) < 3.0;
        e.unverified_index = first;
        first = false;
        out.push_back(e);
    }
    return out;
}

std::vector<ZeroEstimate> pos_axis_estimates(double nu, cplx alpha, int k_lo, int k_hi,
                                             bool deriv, std::string* notice) {
    SolutionSpec s;
    s.family = Family::Bessel;
    s.nu = nu;
    s.alpha = alpha;
    s.deriv = deriv;
    return pos_axis_estimates(s, k_lo, k_hi, notice);
}

BranchCutAnalysis branchcut_analysis(double nu, cplx alpha) {
    if (nu < 0) {
        alpha += -nu * kPi;
        nu = -nu;
    }
    double c1, s1, c2, s2;
    cospi_sinpi(nu, c1, s1);
    cospi_sinpi(2 * nu, c2, s2);
    cplx ca = std::cos(alpha), sa = std::sin(alpha);
    if (zero_mod_pi(alpha)) sa = 0.0;
    BranchCutAnalysis r;
    r.s = sa;
    r.A_hom = c2 * ca + s2 * sa;
    r.B_hom = s2 * ca - 2 * c1 * c1 * sa;
    if (sa != cplx(0.0)) {
        r.A = r.A_hom / sa;
        r.B = r.B_hom / sa;
    } else {
        r.A = r.B = cplx(HUGE_VAL, 0.0);
    }
    const cplx A = r.A_hom, B = r.B_hom, s = sa;
    r.a = 0.5 * std::log(std::abs(A + I * (B + s)) / std::abs(A + I * (B - s)));
    r.b = 0.5 * std::log(std::abs(A + I * (s - B)) / std::abs(A - I * (B + s)));
    r.exists_above = r.a < -kTol;
    r.exists_below = r.b > kTol;
    r.on_axis = std::abs(r.a) <= kTol && std::abs(r.b) <= kTol;
    return r;
}

std::vector<ZeroEstimate> branchcut_estimates(double nu, cplx alpha, int m, int k_lo, int k_hi,
                                              bool deriv, std::string* notice) {
    std::vector<ZeroEstimate> out;
    if (nu < 0) {
        alpha += -nu * kPi;
        nu = -nu;
    }
    if (zero_mod_pi(alpha)) {
        if (notice) *notice = "J_nu: the zeros on the cut are -j_{nu,k}";
        return out;
    }
    auto bc = branchcut_analysis(nu, alpha);
    std::string label;
    if (m > 0 && bc.exists_above) label = "cut_above";
    else if (m < 0 && bc.exists_below) label = "cut_below";
    else if (bc.on_axis) label = "cut_axis";
    else {
        if (notice) *notice = "zeros on next Riemann sheet";
        return out;
    }
    cplx N = bc.A_hom + static_cast<double>(m > 0 ? 1 : -1) * I * bc.B_hom;
    cplx chi = std::log((bc.s + I * N) / (bc.s - I * N)) / (2.0 * I);
    if (deriv) chi -= kPi / 2;
    double mu = 4 * nu * nu;
    bool first = true;
    for (int k = k_lo; k <= k_hi; ++k) {
        cplx beta = (k + nu / 2 - 0.75) * kPi + chi;
        if (beta.real() <= 0) continue;
        MacMahonParams p{beta, mu, chi};
        ZeroEstimate e;
        cplx w = macmahon_optimal(p, deriv, &e.order);
        e.z = -w;
        if (label == "cut_axis") e.z = cplx(e.z.real(), 0.0);
        e.k = k;
        e.t = beta;
        e.string = label;
        e.low_accuracy = std::abs(beta) < 3.0;
        e.unverified_index = first;
        first = false;
        out.push_back(e);
    }
    return out;
}

std::vector<ZeroEstimate> hankel_belowcut(double nu, int k_lo, int k_hi, bool deriv,
                                          std::string* notice) {
    std::vector<ZeroEstimate> out;
    nu = std::abs(nu);
    double c, s;
    cospi_sinpi(nu, c, s);
    double L = c == 0.0 ? -HUGE_VAL : std::log(std::abs(2 * c));
    if (L < -kTol) {
        if (notice) *notice = "zeros on next Riemann sheet";
        return out;
    }
    bool on = std::abs(L) <= kTol;
    int p = c > 0 ? 1 : 0;
    bool first = true;
    for (int k = k_lo; k <= k_hi; ++k) {
        cplx w = kPi / 4 * (1 - 2 * p) + k * kPi + I * (0.5 * L);
        if (deriv) w += kPi / 2;
        if (w.real() <= 0) continue;
        ZeroEstimate e;
        e.z = on ? cplx(-w.real(), 0.0) : -w;
        e.k = k;
        e.t = w;
        e.order = 0;
        e.string = on ? "cut_axis" : "cut_below";
        e.low_accuracy = std::abs(w) < 3.0;
        e.unverified_index = first;
        first = false;
        out.push_back(e);
    }
    return out;
}

cplx eye_f(cplx zt) {
    if (zt == cplx(0.0)) throw DomainError("eye_f: argument 0");
    cplx s = std::sqrt(1.0 - zt * zt);
    return std::log((1.0 + s) / zt) - s;
}

double eye_g(double y) {
    if (!(y > 0)) throw DomainError("eye_g: argument must be positive");
    double r = std::sqrt(1 + y * y);
    return std::log((1 + r) / y) - r;
}

std::string to_string(EyeSide s) {
    switch (s) {
        case EyeSide::Inside: return "inside";
        case EyeSide::Outside: return "outside";
        case EyeSide::OnBoundary: return "on_boundary";
        case EyeSide::None: return "none";
    }
    return "";
}

EyeGeometry eye_axis_cuts(const SolutionSpec& spec0) {
    SolutionSpec spec = reflect_order(spec0);
    if (!(spec.nu > 0.5)) throw DomainError("eye_axis_cuts: needs |nu| > 1/2");
    EyeGeometry g;
    const double nu = spec.nu;
    auto side = [&](int j, std::optional<double>& y, std::optional<double>& x0, EyeSide& flag) {
        // j = -1: lower half-plane, log|1 - e^{-2i alpha}|; j = +1 uses e^{2i alpha}
        bool none = (spec.limit == Limit::None && zero_mod_pi(spec.alpha)) ||
                    (j < 0 && spec.limit == Limit::PlusInf) ||
                    (j > 0 && spec.limit == Limit::MinusInf);
        if (none) {
            flag = EyeSide::None;
            return;
        }
        double lq = spec.limit != Limit::None ? 0.0
                                              : log1m_exp(2.0 * j * I * spec.alpha).real();
        double target = -lq / (2 * nu);
        y = solve_g(target);
        if (std::abs(lq) <= kTol) {
            flag = EyeSide::OnBoundary;
        } else if (lq < 0) {
            flag = EyeSide::Inside;
            x0 = solve_f(target);
        } else {
            flag = EyeSide::Outside;
        }
    };
    side(-1, g.y_minus, g.x0_lower, g.airy_type_lower);
    side(+1, g.y_plus, g.x0_upper, g.airy_type_upper);
    return g;
}

EyeGeometry eye_axis_cuts(double nu, cplx alpha) {
    SolutionSpec s;
    s.family = Family::Bessel;
    s.nu = nu;
    s.alpha = alpha;
    return eye_axis_cuts(s);
}

BesselClassification classify_bessel(const SolutionSpec& spec0) {
    SolutionSpec spec = reflect_order(spec0);
    BesselClassification c;
    if (std::abs(spec.nu) <= 0.5) {
        c.notes.push_back("eye geometry not derived for |nu| <= 1/2; Airy-type flags from |1-e^{-+2i alpha}|");
    }
    if (spec.limit != Limit::None) {
        double cs, sn;
        cospi_sinpi(spec.nu, cs, sn);
        double L = cs == 0.0 ? -HUGE_VAL : std::log(std::abs(2 * cs));
        bool below = L > kTol, on = std::abs(L) <= kTol;
        c.notes.push_back("Hankel functions have no zeros as Re z -> +inf");
        if (spec.limit == Limit::MinusInf) {
            c.cut_below = below;
            c.airy_lower = true;
        } else {
            c.cut_above = below;
            c.airy_upper = true;
        }
        c.cut_axis = on;
        if (!below && !on) c.notes.push_back("cut string on the next Riemann sheet");
        return c;
    }
    c.pos_axis = true;
    auto bc = branchcut_analysis(spec.nu, spec.alpha);
    c.cut_above = bc.exists_above;
    c.cut_below = bc.exists_below;
    c.cut_axis = bc.on_axis;
    if (zero_mod_pi(spec.alpha)) {
        c.notes.push_back("J_nu: only real zeros; those on the cut are -j_{nu,k}");
        return c;
    }
    c.airy_lower = true;
    c.airy_upper = true;
    return c;
}

BesselClassification classify_bessel(double nu, cplx alpha) {
    SolutionSpec s;
    s.family = Family::Bessel;
    s.nu = nu;
    s.alpha = alpha;
    return classify_bessel(s);
}

BesselAlpha alpha_from_bessel_zero(double nu, cplx z0, bool deriv) {
    auto cj = reflect_coeffs(nu, 1.0, 0.0);
    auto cy = reflect_coeffs(nu, 0.0, 1.0);
    auto J = eval_cyl_combo(cj.nu, cj.cj, cj.cy, z0);
    auto Y = eval_cyl_combo(cy.nu, cy.cj, cy.cy, z0);
    cplx a = deriv ? J.df : J.f;
    cplx b = deriv ? Y.df : Y.f;
    double scale = std::abs(a) + std::abs(b);
    BesselAlpha r;
    if (std::abs(a + I * b) <= 1e-13 * scale) {
        r.limit = Limit::MinusInf;  // H1
        return r;
    }
    if (std::abs(a - I * b) <= 1e-13 * scale) {
        r.limit = Limit::PlusInf;  // H2
        return r;
    }
    if (b == cplx(0.0)) {
        r.alpha = kPi / 2;
        return r;
    }
    r.alpha = reduce_alpha(std::atan(a / b));
    if (r.alpha.real() == -kPi / 2) r.alpha += kPi;
    return r;
}

}  // namespace zk
