#include "zerokit/lg_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace zk {

namespace {

const cplx I(0.0, 1.0);

double fold_angle(double t) {
    t = std::fmod(t, 2 * kPi);
    if (t <= -kPi) t += 2 * kPi;
    if (t > kPi) t -= 2 * kPi;
    // snap values that are pi up to rounding
    if (std::abs(t + kPi) < 1e-14) t = kPi;
    return t;
}

double nu_prime(double nu) {
    if (!(nu > 0.5)) throw DomainError("Riccati-Bessel level function needs nu > 1/2");
    return std::sqrt(nu * nu - 0.25);
}

cplx unit(cplx z) { return z / std::abs(z); }

std::vector<cplx> turning_points(const Coefficient& A) {
    switch (A.kind) {
        case Coefficient::Kind::Airy: return {0.0};
        case Coefficient::Kind::RiccatiBessel: {
            double np = nu_prime(A.nu);
            return {np, -np};
        }
        default: return {};
    }
}

}  // namespace

std::vector<double> principal_directions(int m, cplx a) {
    if (m < 1) throw DomainError("principal_directions: multiplicity must be >= 1");
    if (a == cplx(0.0, 0.0)) throw DomainError("principal_directions: a = 0");
    std::vector<double> out;
    double arga = std::arg(a);
    for (int k = 0; k <= m + 1; ++k) {
        out.push_back(fold_angle((-arga + 2 * kPi * k) / (m + 2)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

cplx airy_asl_point(double r0, double theta, int sector) {
    if (!(r0 > 0)) throw DomainError("airy_asl_point: r0 must be positive");
    if (sector < -1 || sector > 1) throw DomainError("airy_asl_point: sector must be -1, 0 or 1");
    double lo = (2 * sector - 1) * kPi / 3, hi = (2 * sector + 1) * kPi / 3;
    if (!(theta > lo && theta < hi)) {
        throw DomainError("airy_asl_point: theta outside the open sector (curve diverges)");
    }
    double c = std::abs(std::cos(1.5 * theta));
    if (c == 0.0) throw DomainError("airy_asl_point: divergence at sector boundary");
    double r = r0 * std::pow(c, -2.0 / 3.0);
    return std::polar(r, theta);
}

double bessel_F(cplx eta) {
    if (eta == cplx(0.0, 0.0)) throw DomainError("bessel_F: eta = 0");
    cplx s = std::sqrt(1.0 - eta * eta);
    return std::abs(std::exp(s) * eta / (s + 1.0));
}

double eye_constant_residual(double c) {
    double r = std::sqrt(1 + c * c);
    return r - std::log((1 + r) / c);
}

EyeConstant solve_eye_constant() {
    double lo = 0.1, hi = 2.0;  // residual < 0 at lo, > 0 at hi
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        double mid = 0.5 * (lo + hi);
        if (eye_constant_residual(mid) < 0) lo = mid; else hi = mid;
    }
    double c = 0.5 * (lo + hi);
    for (int i = 0; i < 2; ++i) {
        // d/dc of the residual is sqrt(1+c^2)/c
        double d = std::sqrt(1 + c * c) / c;
        c -= eye_constant_residual(c) / d;
    }
    return {c};
}

Coefficient Coefficient::generic(std::function<cplx(cplx)> a) {
    Coefficient c;
    c.kind = Kind::Generic;
    c.A = std::move(a);
    return c;
}

Coefficient Coefficient::airy() {
    Coefficient c;
    c.kind = Kind::Airy;
    c.A = [](cplx z) { return -z; };
    return c;
}

Coefficient Coefficient::riccati_bessel(double nu) {
    Coefficient c;
    c.kind = Kind::RiccatiBessel;
    c.nu = nu;
    double q = nu * nu - 0.25;
    c.A = [q](cplx z) { return 1.0 - q / (z * z); };
    return c;
}

double asl_level(const Coefficient& A, cplx z, cplx* grad) {
    switch (A.kind) {
        case Coefficient::Kind::Airy: {
            cplx s = std::sqrt(z);
            if (grad) *grad = 1.5 * s;
            return (z * s).real();
        }
        case Coefficient::Kind::RiccatiBessel: {
            double np = nu_prime(A.nu);
            cplx eta = z / np;
            cplx s = std::sqrt(1.0 - eta * eta);
            if (grad) *grad = -s / (eta * np);
            return -std::log(bessel_F(eta));
        }
        default:
            throw DomainError("asl_level: no level function for a generic coefficient");
    }
}

CurveSample trace_asl(cplx start, const Coefficient& A, int direction, double max_arc,
                      double step) {
    CurveSample out;
    out.label = "asl";
    cplx a0 = A.A(start);
    if (std::abs(a0) < 1e-8) throw TurningPointError("trace_asl: A(start) = 0");
    const bool project = A.kind != Coefficient::Kind::Generic;
    const auto tps = turning_points(A);
    double target = project ? asl_level(A, start) : 0.0;

    auto field = [&](cplx z, cplx prev, bool& bad) {
        cplx a = A.A(z);
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || std::abs(a) < 1e-8) {
            bad = true;
            return prev;
        }
        cplx d = std::polar(1.0, -0.5 * std::arg(a));
        if ((d * std::conj(prev)).real() < 0) d = -d;
        return d;
    };

    cplx d = std::polar(1.0, -0.5 * std::arg(a0)) * static_cast<double>(direction >= 0 ? 1 : -1);
    cplx z = start;
    out.points.push_back(z);
    double arc = 0;
    out.stop_reason = "max_arc";
    while (arc < max_arc) {
        double h = std::min(step, max_arc - arc);
        bool bad = false;
        cplx k1 = field(z, d, bad);
        cplx k2 = field(z + 0.5 * h * k1, k1, bad);
        cplx k3 = field(z + 0.5 * h * k2, k2, bad);
        cplx k4 = field(z + h * k3, k3, bad);
        if (bad) { out.stop_reason = "turning_point"; break; }
        cplx zn = z + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (project) {
            for (int it = 0; it < 3; ++it) {
                cplx g;
                double l = asl_level(A, zn, &g);
                double gg = std::norm(g);
                if (gg < 1e-20) break;
                zn -= (l - target) * std::conj(g) / gg;
            }
        }
        cplx an = A.A(zn);
        if (!std::isfinite(an.real()) || !std::isfinite(an.imag()) || std::abs(an) > 1e12) {
            out.stop_reason = "pole";
            break;
        }
        if (std::abs(an) < 1e-8) {
            out.points.push_back(zn);
            out.stop_reason = "turning_point";
            break;
        }
        bool near_tp = false;
        for (cplx t : tps) {
            if (std::abs(zn - t) < 1.5 * step) near_tp = true;
        }
        arc += std::abs(zn - z);
        d = unit(zn - z);
        z = zn;
        out.points.push_back(z);
        if (near_tp) { out.stop_reason = "turning_point"; break; }
        if (arc > 10 * step && std::abs(z - start) < step) {
            out.points.push_back(start);
            out.stop_reason = "closed";
            break;
        }
    }
    return out;
}

std::vector<CurveSample> trace_level_curves(const Coefficient& A, double level, double max_arc,
                                            double step) {
    if (!(level > 0)) throw DomainError("trace_level_curves: level must be positive");
    auto both_ways = [&](cplx start, const std::string& label) {
        auto fw = trace_asl(start, A, +1, max_arc, step);
        CurveSample c;
        c.label = label;
        if (fw.stop_reason == "closed") {
            c.points = fw.points;
            c.stop_reason = "closed";
            return c;
        }
        auto bw = trace_asl(start, A, -1, max_arc, step);
        c.points.assign(bw.points.rbegin(), bw.points.rend());
        c.points.insert(c.points.end(), fw.points.begin() + 1, fw.points.end());
        c.stop_reason = bw.stop_reason + "/" + fw.stop_reason;
        return c;
    };

    std::vector<CurveSample> out;
    if (A.kind == Coefficient::Kind::Airy) {
        for (int j = -1; j <= 1; ++j) {
            cplx s = std::polar(level, 2 * kPi * j / 3);
            out.push_back(both_ways(s, "sector_" + std::to_string(j)));
        }
        return out;
    }
    if (A.kind != Coefficient::Kind::RiccatiBessel) {
        throw DomainError("trace_level_curves: needs a built-in coefficient");
    }
    double np = nu_prime(A.nu);
    // F(-i y) increases monotonically from 0 to infinity
    double lo = 1e-12, hi = 1.0;
    while (bessel_F(cplx(0, -hi)) < level) hi *= 2;
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
        double mid = 0.5 * (lo + hi);
        if (bessel_F(cplx(0, -mid)) < level) lo = mid; else hi = mid;
    }
    double y = 0.5 * (lo + hi);
    auto lower = both_ways(cplx(0, -y * np), "lower");
    CurveSample upper;
    upper.label = "upper";
    upper.stop_reason = lower.stop_reason;
    for (cplx p : lower.points) upper.points.push_back(std::conj(p));
    out.push_back(lower);
    out.push_back(upper);
    return out;
}

std::string to_csv(const CurveSample& c) {
    std::ostringstream os;
    os << "re,im\n";
    char buf[64];
    for (cplx p : c.points) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.real(), p.imag());
        os << buf;
    }
    return os.str();
}

}  // namespace zk
