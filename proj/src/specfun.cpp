#include "zerokit/specfun.hpp"

#include <cmath>

#include "quad_kernels.hpp"

namespace zk {

namespace {

const cplx I(0.0, 1.0);
const double kSeriesAiry = 9.0;
const double kSeriesBessel = 20.0;
const double kInvSqrtPi = 0.5641895835477562869480794515607726;

cplx cis(double t) { return {std::cos(t), std::sin(t)}; }

const cplx kOmega = cis(2.0 * kPi / 3.0);
const cplx kOmegaBar = std::conj(kOmega);

// cos(n pi) and sin(n pi) with the argument reduced exactly first.
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

// Ai and Ai' for |z| > 9 and |arg z| <= 2pi/3.
void ai_asymptotic(cplx z, cplx& ai, cplx& aip) {
    cplx sz = std::sqrt(z);
    cplx zeta = 2.0 / 3.0 * z * sz;
    if (std::abs(zeta.real()) > 700.0) {
        throw ScaledOverflow("Airy value outside double range", -zeta.real());
    }
    cplx s = 1.0, sp = 1.0;
    double u = 1.0;
    cplx zinv = 1.0 / zeta;
    cplx zp = 1.0;
    double last = 1e300;
    for (int k = 1; k < 200; ++k) {
        u *= (6.0 * k - 5) * (6.0 * k - 3) * (6.0 * k - 1) / ((2.0 * k - 1) * 216.0 * k);
        double v = -(6.0 * k + 1) / (6.0 * k - 1) * u;
        zp *= -zinv;
        cplx t = u * zp, tp = v * zp;
        double m = std::abs(t) + std::abs(tp);
        if (m > last) break;
        s += t;
        sp += tp;
        last = m;
        if (m < 1e-17) break;
    }
    cplx q = std::sqrt(sz);  // z^{1/4}
    cplx e = std::exp(-zeta) * (0.5 * kInvSqrtPi);
    ai = e / q * s;
    aip = -q * e * sp;
}

void ai_core(cplx z, cplx& ai, cplx& aip) {
    if (std::abs(z) <= kSeriesAiry) {
        auto r = detail::airy_series(z);
        ai = r.ai;
        aip = r.aip;
        return;
    }
    if (std::abs(std::arg(z)) <= 2.0 * kPi / 3.0) {
        ai_asymptotic(z, ai, aip);
        return;
    }
    cplx a1, d1, a2, d2;
    ai_asymptotic(kOmega * z, a1, d1);
    ai_asymptotic(kOmegaBar * z, a2, d2);
    ai = -kOmega * a1 - kOmegaBar * a2;
    aip = -kOmega * kOmega * d1 - kOmegaBar * kOmegaBar * d2;
}

// Picks the representation with the smallest terms, i.e. least cancellation.
struct Pair {
    cplx a, b;
    double size() const { return std::max(std::abs(a), std::abs(b)); }
    cplx sum() const { return a + b; }
};

cplx least_cancel(std::initializer_list<Pair> ps) {
    const Pair* best = nullptr;
    for (const auto& p : ps) {
        if (!best || p.size() < best->size()) best = &p;
    }
    return best->sum();
}

Eval airy_solution(const SolutionSpec& spec, cplx z) {
    cplx p, q;
    if (spec.limit == Limit::MinusInf) {
        p = 1.0; q = 0.0;
    } else if (spec.limit == Limit::PlusInf) {
        p = 0.0; q = 1.0;
    } else {
        cplx ca = std::cos(spec.alpha), cb = std::sin(spec.alpha);
        p = ca * cis(-kPi / 3) + cb * cis(kPi / 6);
        q = ca * cis(kPi / 3) + cb * cis(-kPi / 6);
    }
    // basis Ai(z), P = Ai(w z), Q = Ai(conj(w) z)
    cplx a0, d0, a1, d1, a2, d2;
    ai_core(z, a0, d0);
    ai_core(kOmega * z, a1, d1);
    ai_core(kOmegaBar * z, a2, d2);
    d1 *= kOmega;
    d2 *= kOmegaBar;
    cplx ra = q * cis(-kPi / 3), rb = p - q * cis(-2 * kPi / 3);   // Ai, P
    cplx sa = p * cis(kPi / 3), sb = q - p * cis(2 * kPi / 3);     // Ai, Q
    cplx f = least_cancel({{p * a1, q * a2}, {ra * a0, rb * a1}, {sa * a0, sb * a2}});
    cplx df = least_cancel({{p * d1, q * d2}, {ra * d0, rb * d1}, {sa * d0, sb * d2}});
    return {f, df};
}

// Hankel expansions for |z| >= 20 at order mu, in the sectors where they apply.
cplx hankel_direct(double mu, cplx z, int kind) {
    double sgn = kind == 1 ? 1.0 : -1.0;
    cplx omega = z - mu * kPi / 2 - kPi / 4;
    cplx zi = 1.0 / z;
    cplx s = 1.0, t = 1.0;
    double a = 1.0;
    double m4 = 4.0 * mu * mu;
    double last = 1e300;
    for (int k = 1; k < 200; ++k) {
        double o = 2.0 * k - 1;
        a *= (m4 - o * o) / (8.0 * k);
        t = t * (sgn * I) * zi;
        cplx term = a * t;
        double m = std::abs(term);
        if (m == 0.0) break;
        if (m > last) break;
        s += term;
        last = m;
        if (m < 1e-17 * std::abs(s)) break;
    }
    return std::sqrt(2.0 / (kPi * z)) * std::exp(sgn * I * omega) * s;
}

void hankel_mu(double mu, cplx z, cplx& h1, cplx& h2) {
    double arg = std::arg(z);
    double c, sn;
    cospi_sinpi(mu, c, sn);
    cplx e(c, sn);  // e^{i mu pi}
    if (arg >= -kPi / 2) {
        h1 = hankel_direct(mu, z, 1);
    } else {
        cplx w = -z;
        h1 = 2.0 * c * hankel_direct(mu, w, 1) + std::conj(e) * hankel_direct(mu, w, 2);
    }
    if (arg <= kPi / 2) {
        h2 = hankel_direct(mu, z, 2);
    } else {
        cplx w = -z;
        h2 = 2.0 * c * hankel_direct(mu, w, 2) + e * hankel_direct(mu, w, 1);
    }
}

// H1, H2 at orders nu and nu+1 via upward recurrence from nu - floor(nu).
void hankel_pair(double nu, cplx z, cplx& h1, cplx& h2, cplx& h1n, cplx& h2n) {
    double fl = std::floor(nu);
    double mu = nu - fl;
    cplx a1, a2, b1, b2;
    hankel_mu(mu, z, a1, a2);
    hankel_mu(mu + 1, z, b1, b2);
    int steps = static_cast<int>(fl);
    double o = mu + 1;
    for (int i = 0; i < steps; ++i, o += 1) {
        cplx c1 = 2.0 * o / z * b1 - a1;
        cplx c2 = 2.0 * o / z * b2 - a2;
        a1 = b1; a2 = b2;
        b1 = c1; b2 = c2;
    }
    h1 = a1; h2 = a2; h1n = b1; h2n = b2;
}

}  // namespace

std::string to_string(Family f) { return f == Family::Airy ? "airy" : "bessel"; }

std::string to_string(Limit l) {
    switch (l) {
        case Limit::None: return "none";
        case Limit::MinusInf: return "minus_inf";
        case Limit::PlusInf: return "plus_inf";
    }
    return "none";
}

AiryPair airy_eval(cplx z, AiryKind kind) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError("airy_eval: non-finite argument");
    }
    if (std::abs(z) <= kSeriesAiry) {
        auto r = detail::airy_series(z);
        return kind == AiryKind::Ai ? AiryPair{r.ai, r.aip} : AiryPair{r.bi, r.bip};
    }
    if (kind == AiryKind::Ai) {
        AiryPair p;
        ai_core(z, p.f, p.df);
        return p;
    }
    cplx a1, d1, a2, d2;
    ai_core(kOmega * z, a1, d1);
    ai_core(kOmegaBar * z, a2, d2);
    return {cis(kPi / 6) * a1 + cis(-kPi / 6) * a2,
            cis(kPi / 6) * kOmega * d1 + cis(-kPi / 6) * kOmegaBar * d2};
}

Eval eval_cyl_combo(double nu, cplx cj, cplx cy, cplx z) {
    z = principal(z);
    if (z == cplx(0.0, 0.0)) throw DomainError("Bessel functions: z = 0");
    if (nu < 0) throw DomainError("Bessel functions: negative order must be reflected first");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError("Bessel functions: non-finite argument");
    }
    double az = std::abs(z);
    if (az < kSeriesBessel) {
        auto r = detail::cyl_series_combo(nu, cj, cy, z);
        return {r.f, r.df};
    }
    cplx H1, H2, H1n, H2n;
    hankel_pair(nu, z, H1, H2, H1n, H2n);
    cplx h1 = 0.5 * (cj - I * cy), h2 = 0.5 * (cj + I * cy);
    cplx f, f1;
    if (az < nu + 10.0) {
        cplx j, jn;
        detail::j_series_pair(nu, z, j, jn);
        cplx y = (H1 - H2) / (2.0 * I), yn = (H1n - H2n) / (2.0 * I);
        f = least_cancel({{h1 * H1, h2 * H2}, {cj * j, cy * y}});
        f1 = least_cancel({{h1 * H1n, h2 * H2n}, {cj * jn, cy * yn}});
    } else {
        f = h1 * H1 + h2 * H2;
        f1 = h1 * H1n + h2 * H2n;
    }
    return {f, nu / z * f - f1};
}

CylPair cyl_eval(double nu, cplx z, CylKind kind) {
    cplx cj = 1.0, cy = 0.0;
    switch (kind) {
        case CylKind::J: break;
        case CylKind::Y: cj = 0.0; cy = 1.0; break;
        case CylKind::H1: cy = I; break;
        case CylKind::H2: cy = -I; break;
    }
    auto e = eval_cyl_combo(nu, cj, cy, z);
    return {e.f, e.df};
}

CylCoeffs reflect_coeffs(double nu, cplx cj, cplx cy) {
    if (nu >= 0) return {nu, cj, cy};
    double c, s;
    cospi_sinpi(-nu, c, s);
    return {-nu, cj * c + cy * s, -cj * s + cy * c};
}

CylCoeffs cyl_coeffs(const SolutionSpec& spec) {
    cplx cj, cy;
    if (spec.limit == Limit::MinusInf) {
        cj = 1.0; cy = I;
    } else if (spec.limit == Limit::PlusInf) {
        cj = 1.0; cy = -I;
    } else {
        cj = std::cos(spec.alpha);
        cy = -std::sin(spec.alpha);
    }
    return reflect_coeffs(spec.nu, cj, cy);
}

Eval eval_solution(const SolutionSpec& spec, cplx z) {
    if (spec.family == Family::Airy) return airy_solution(spec, z);
    auto c = cyl_coeffs(spec);
    return eval_cyl_combo(c.nu, c.cj, c.cy, z);
}

Eval eval_continued(const SolutionSpec& spec, cplx w, int m) {
    if (spec.family == Family::Airy) {
        throw DomainError("eval_continued: Airy functions are entire");
    }
    auto c = cyl_coeffs(spec);
    double cs, sn;
    cospi_sinpi(c.nu, cs, sn);
    cplx e(cs, sn);
    cplx h1 = 0.5 * (c.cj - I * c.cy), h2 = 0.5 * (c.cj + I * c.cy);
    cplx g1, g2;
    if (m > 0) {
        g1 = h2 * e;
        g2 = -h1 * std::conj(e) + 2.0 * cs * h2;
    } else {
        g1 = 2.0 * cs * h1 - h2 * e;
        g2 = h1 * std::conj(e);
    }
    return eval_cyl_combo(c.nu, g1 + g2, I * (g1 - g2), w);
}

Eval eval_side(const SolutionSpec& spec, cplx z, int side) {
    if (spec.family == Family::Airy) return eval_solution(spec, z);
    z = principal(z);
    if (side > 0 && z.real() < 0 && z.imag() < 0) {
        auto g = eval_continued(spec, -z, +1);
        return {g.f, -g.df};
    }
    if (side < 0 && z.real() < 0 && z.imag() >= 0) {
        auto g = eval_continued(spec, -z, -1);
        return {g.f, -g.df};
    }
    return eval_solution(spec, z);
}

cplx second_derivative(const SolutionSpec& spec, cplx z, cplx f, cplx df) {
    if (spec.family == Family::Airy) return z * f;
    double n2 = spec.nu * spec.nu;
    return -df / z - (1.0 - n2 / (z * z)) * f;
}

cplx gen_airy(cplx alpha, cplx z, bool deriv) {
    SolutionSpec s;
    s.family = Family::Airy;
    s.alpha = alpha;
    auto e = airy_solution(s, z);
    return deriv ? e.df : e.f;
}

cplx gen_cyl(double nu, cplx alpha, cplx z, bool deriv) {
    SolutionSpec s;
    s.family = Family::Bessel;
    s.alpha = alpha;
    s.nu = nu;
    auto e = eval_solution(s, z);
    return deriv ? e.df : e.f;
}

}  // namespace zk
