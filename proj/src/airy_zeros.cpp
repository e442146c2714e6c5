#include "zerokit/airy_zeros.hpp"

#include <cmath>

#include "zerokit/specfun.hpp"

namespace zk {

namespace {

const cplx I(0.0, 1.0);

constexpr std::array<double, 4> kT{1.0, 5.0 / 48.0, -5.0 / 36.0, 77125.0 / 82944.0};
constexpr std::array<double, 4> kU{1.0, -7.0 / 48.0, 35.0 / 288.0, -181223.0 / 207360.0};

cplx series(const std::array<double, 4>& c, cplx t, bool* warn) {
    if (warn) *warn = std::abs(t) < 2.0;
    cplx t2 = 1.0 / (t * t);
    cplx s = c[3];
    s = s * t2 + c[2];
    s = s * t2 + c[1];
    s = s * t2 + c[0];
    return std::pow(t, 2.0 / 3.0) * s;
}

}  // namespace

std::string to_string(AiryString s) {
    switch (s) {
        case AiryString::NegAxis: return "neg_axis";
        case AiryString::RayPlus: return "ray_plus";
        case AiryString::RayMinus: return "ray_minus";
    }
    return "";
}

std::string to_string(Side s) {
    switch (s) {
        case Side::Above: return "above";
        case Side::Below: return "below";
        case Side::On: return "on";
        case Side::None: return "none";
    }
    return "";
}

cplx T_series(cplx t, bool* warn) { return series(kT, t, warn); }
cplx U_series(cplx t, bool* warn) { return series(kU, t, warn); }
std::array<double, 4> T_coefficients() { return kT; }
std::array<double, 4> U_coefficients() { return kU; }

cplx log1m_exp(cplx x) {
    if (x.real() > 30.0) {
        // 1 - e^x = -e^x (1 - e^-x)
        double im = std::remainder(x.imag() + kPi, 2 * kPi);
        if (im <= -kPi) im += 2 * kPi;
        return cplx(x.real(), im) + std::log(1.0 - std::exp(-x));
    }
    return std::log(1.0 - std::exp(x));
}

cplx reduce_alpha(cplx alpha) {
    double r = std::remainder(alpha.real(), kPi);  // [-pi/2, pi/2]
    if (r <= -kPi / 2) r += kPi;
    return {r, alpha.imag()};
}

namespace {

// |1 - e^{-2i alpha}| (sign=+1) or |1 - e^{2i alpha}| (sign=-1), as a log.
double log_gap(cplx alpha, int sign) {
    return log1m_exp(-2.0 * sign * I * alpha).real();
}

bool alpha_is_zero_mod_pi(cplx alpha) {
    return alpha.imag() == 0.0 && std::abs(std::remainder(alpha.real(), kPi)) < 1e-15;
}

}  // namespace

std::vector<ZeroEstimate> airy_estimates(const SolutionSpec& spec, AiryString string, int k_lo,
                                         int k_hi, std::string* notice) {
    std::vector<ZeroEstimate> out;
    auto say = [&](const std::string& s) {
        if (notice) *notice = s;
    };
    const bool deriv = spec.deriv;
    const double off = deriv ? 3.0 : 1.0;
    cplx shift;  // the alpha-dependent part of t_k
    switch (string) {
        case AiryString::NegAxis:
            if (spec.limit != Limit::None) {
                say("no zeros approaching the negative axis for this limit solution");
                return out;
            }
            {
                // choose Re alpha in [0, pi) so that k = 1 is the first admissible index
                cplx a = reduce_alpha(spec.alpha);
                if (a.real() < 0) a += kPi;
                shift = -1.5 * a;
            }
            break;
        case AiryString::RayPlus:
            if (spec.limit == Limit::PlusInf ||
                (spec.limit == Limit::None && alpha_is_zero_mod_pi(spec.alpha))) {
                say("no zeros on this ray");
                return out;
            }
            shift = spec.limit == Limit::MinusInf ? cplx(0.0)
                                                  : I * 0.75 * log1m_exp(-2.0 * I * spec.alpha);
            break;
        case AiryString::RayMinus:
            if (spec.limit == Limit::MinusInf ||
                (spec.limit == Limit::None && alpha_is_zero_mod_pi(spec.alpha))) {
                say("no zeros on this ray");
                return out;
            }
            shift = spec.limit == Limit::PlusInf ? cplx(0.0)
                                                 : -I * 0.75 * log1m_exp(2.0 * I * spec.alpha);
            break;
    }
    bool first = true;
    for (int k = k_lo; k <= k_hi; ++k) {
        cplx t = 3.0 * kPi / 8.0 * (4.0 * k - off) + shift;
        if (t.real() <= 0) {
            say("indices with Re t_k <= 0 skipped");
            continue;
        }
        bool warn = false;
        cplx v = deriv ? U_series(t, &warn) : T_series(t, &warn);
        ZeroEstimate e;
        e.k = k;
        e.t = t;
        e.order = 4;
        e.string = to_string(string);
        e.low_accuracy = warn;
        e.unverified_index = first;
        first = false;
        switch (string) {
            case AiryString::NegAxis: e.z = -v; break;
            case AiryString::RayPlus: e.z = std::polar(1.0, kPi / 3) * v; break;
            case AiryString::RayMinus: e.z = std::polar(1.0, -kPi / 3) * v; break;
        }
        out.push_back(e);
    }
    return out;
}

std::vector<ZeroEstimate> airy_estimates(cplx alpha, AiryString string, int k_lo, int k_hi,
                                         bool deriv, std::string* notice) {
    SolutionSpec s;
    s.family = Family::Airy;
    s.alpha = alpha;
    s.deriv = deriv;
    return airy_estimates(s, string, k_lo, k_hi, notice);
}

cplx airy_first_approx(cplx alpha, AiryString string, int k, bool deriv) {
    double off = deriv ? 3.0 : 1.0;
    cplx base = 3.0 * kPi / 8.0 * (4.0 * k - off);
    switch (string) {
        case AiryString::NegAxis: return -std::pow(base - 1.5 * alpha, 2.0 / 3.0);
        case AiryString::RayPlus:
            return std::polar(1.0, kPi / 3) *
                   std::pow(base + I * 0.75 * log1m_exp(-2.0 * I * alpha), 2.0 / 3.0);
        case AiryString::RayMinus:
            return std::polar(1.0, -kPi / 3) *
                   std::pow(base - I * 0.75 * log1m_exp(2.0 * I * alpha), 2.0 / 3.0);
    }
    return 0.0;
}

double airy_ray_r0(cplx alpha, int sign) {
    return std::pow(std::abs(0.75 * log_gap(alpha, sign)), 2.0 / 3.0);
}

AiryPattern classify_airy(const SolutionSpec& spec) {
    AiryPattern p;
    const double tol = 1e-12;
    if (spec.limit == Limit::MinusInf) {
        p.on_ray_plus = true;
        p.side_plus = Side::On;
        p.absent_rays = {AiryString::NegAxis, AiryString::RayMinus};
        return p;
    }
    if (spec.limit == Limit::PlusInf) {
        p.on_ray_minus = true;
        p.side_minus = Side::On;
        p.absent_rays = {AiryString::NegAxis, AiryString::RayPlus};
        return p;
    }
    cplx a = spec.alpha;
    p.on_neg_axis = std::abs(a.imag()) < tol;
    if (alpha_is_zero_mod_pi(a)) {
        p.absent_rays = {AiryString::RayPlus, AiryString::RayMinus};
        return p;
    }
    double lp = log_gap(a, +1);  // log|1 - e^{-2i alpha}|
    double lm = log_gap(a, -1);  // log|1 - e^{2i alpha}|
    p.on_ray_plus = std::abs(lp) < tol;
    p.on_ray_minus = std::abs(lm) < tol;
    p.side_plus = p.on_ray_plus ? Side::On : (lp > 0 ? Side::Above : Side::Below);
    p.side_minus = p.on_ray_minus ? Side::On : (lm > 0 ? Side::Below : Side::Above);
    return p;
}

AiryPattern classify_airy(cplx alpha) {
    SolutionSpec s;
    s.family = Family::Airy;
    s.alpha = alpha;
    return classify_airy(s);
}

AlphaResult alpha_from_airy_zero(cplx z0, bool deriv) {
    auto ai = airy_eval(z0, AiryKind::Ai);
    auto bi = airy_eval(z0, AiryKind::Bi);
    cplx a = deriv ? ai.df : ai.f;
    cplx b = deriv ? bi.df : bi.f;
    double scale = std::abs(a) + std::abs(b);
    AlphaResult r;
    if (std::abs(a + I * b) <= 1e-13 * scale) {
        r.limit = Limit::PlusInf;   // Ai(z e^{-2 pi i/3})
        return r;
    }
    if (std::abs(a - I * b) <= 1e-13 * scale) {
        r.limit = Limit::MinusInf;  // Ai(z e^{2 pi i/3})
        return r;
    }
    if (b == cplx(0.0)) {
        r.alpha = kPi / 2;
        return r;
    }
    r.alpha = reduce_alpha(std::atan(-a / b));
    if (r.alpha.real() == -kPi / 2) r.alpha += kPi;
    return r;
}

}  // namespace zk
