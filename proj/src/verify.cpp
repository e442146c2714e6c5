#include "zerokit/verify.hpp"

#include <cmath>
#include <limits>

#include "zerokit/specfun.hpp"

namespace zk {

namespace {

constexpr double kMaxPhase = kPi / 4;
constexpr int kMaxDepth = 12;
constexpr double kSpacing = 0.1;

struct Sample {
    cplx z;
    cplx f;
    cplx ld;  // f'/f, unused without a derivative
};

void check(cplx v) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) || v == cplx(0.0))
        throw BoundaryZeroError("function vanishes or is not finite on the contour");
}

Sample sample(const ScalarFn& f, cplx z) {
    cplx v = f(z);
    check(v);
    return {z, v, 0.0};
}

Sample sample(const AnalyticFn& f, cplx z) {
    FnValue v = f(z);
    check(v.f);
    cplx ld = v.df / v.f;
    if (!std::isfinite(ld.real()) || !std::isfinite(ld.imag()))
        throw BoundaryZeroError("derivative not finite on the contour");
    return {z, v.f, ld};
}

// Without a derivative a segment is accepted when both of its halves turn by
// at most pi/4. With one, the turning rate at both ends must also be small
// and agree with the observed change.
double edge_phase(const ScalarFn& f, const Sample& a, const Sample& b, int depth) {
    Sample m = sample(f, 0.5 * (a.z + b.z));
    double d1 = std::arg(m.f / a.f), d2 = std::arg(b.f / m.f);
    if (std::abs(d1) <= kMaxPhase && std::abs(d2) <= kMaxPhase) return d1 + d2;
    if (depth >= kMaxDepth) throw BoundaryZeroError("phase step unresolved near the contour");
    return edge_phase(f, a, m, depth + 1) + edge_phase(f, m, b, depth + 1);
}

double edge_phase(const AnalyticFn& f, const Sample& a, const Sample& b, int depth) {
    double d = std::arg(b.f / a.f);
    cplx h = b.z - a.z;
    double ra = (a.ld * h).imag(), rb = (b.ld * h).imag();
    if (std::abs(d) <= kMaxPhase && std::abs(ra) <= kMaxPhase && std::abs(rb) <= kMaxPhase &&
        std::abs(d - 0.5 * (ra + rb)) <= kMaxPhase / 2)
        return d;
    if (depth >= kMaxDepth) throw BoundaryZeroError("phase step unresolved near the contour");
    Sample m = sample(f, 0.5 * (a.z + b.z));
    return edge_phase(f, a, m, depth + 1) + edge_phase(f, m, b, depth + 1);
}

std::vector<cplx> box(double x0, double y0, double x1, double y1) {
    return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
}

Rectangle grown(const Rectangle& r, double d) {
    Rectangle g = r;
    g.lo -= cplx(d, d);
    g.hi += cplx(d, d);
    return g;
}

template <class Fn>
int winding(const Fn& f, const std::vector<cplx>& polygon) {
    double total = 0.0;
    const size_t n = polygon.size();
    for (size_t i = 0; i < n; ++i) {
        cplx a = polygon[i], b = polygon[(i + 1) % n];
        int samples = std::max(4, static_cast<int>(std::ceil(std::abs(b - a) / kSpacing)));
        Sample prev = sample(f, a);
        for (int j = 1; j <= samples; ++j) {
            Sample s = sample(f, a + (b - a) * (static_cast<double>(j) / samples));
            total += edge_phase(f, prev, s, 0);
            prev = s;
        }
    }
    double w = total / (2 * kPi);
    double r = std::round(w);
    if (std::abs(w - r) > 0.1) throw BoundaryZeroError("winding number not close to an integer");
    return static_cast<int>(r);
}

template <class Fn>
int count_rect(const Fn& f, const Rectangle& rect) {
    for (int attempt = 0;; ++attempt) {
        Rectangle r = grown(rect, 0.37 * rect.margin * attempt);
        try {
            return winding(f, box(r.lo.real(), r.lo.imag(), r.hi.real(), r.hi.imag()));
        } catch (const BoundaryZeroError&) {
            if (attempt >= 3) throw;
        }
    }
}

}  // namespace

int winding_number(const ScalarFn& f, const std::vector<cplx>& polygon) {
    return winding(f, polygon);
}

int winding_number(const AnalyticFn& f, const std::vector<cplx>& polygon) {
    return winding(f, polygon);
}

int argument_principle_count(const ScalarFn& f, const Rectangle& rect) { return count_rect(f, rect); }

int argument_principle_count(const AnalyticFn& f, const Rectangle& rect) {
    return count_rect(f, rect);
}

cplx target_value(const SolutionSpec& spec, cplx z, int side) {
    Eval e = (spec.family == Family::Bessel && side != 0) ? eval_side(spec, z, side)
                                                          : eval_solution(spec, principal(z));
    return spec.deriv ? e.df : e.f;
}

FnValue target_pair(const SolutionSpec& spec, cplx z, int side) {
    Eval e = (spec.family == Family::Bessel && side != 0) ? eval_side(spec, z, side)
                                                          : eval_solution(spec, principal(z));
    if (!spec.deriv) return {e.f, e.df};
    return {e.df, second_derivative(spec, z, e.f, e.df)};
}

ResidualInfo zero_residual(const SolutionSpec& spec, cplx z, int side) {
    Eval e = (spec.family == Family::Bessel && side != 0) ? eval_side(spec, z, side)
                                                          : eval_solution(spec, principal(z));
    cplx F = e.f, dF = e.df;
    if (spec.deriv) {
        F = e.df;
        dF = second_derivative(spec, z, e.f, e.df);
    }
    ResidualInfo r;
    r.residual = std::abs(F) / std::max(std::abs(dF) * std::abs(z), 1.0);
    r.newton_step = dF == cplx(0.0) ? HUGE_VAL : std::abs(F / dF);
    if (!std::isfinite(r.residual)) r.residual = HUGE_VAL;
    if (!std::isfinite(r.newton_step)) r.newton_step = HUGE_VAL;
    return r;
}

std::vector<CountPiece> count_pieces(const SolutionSpec& spec, const Rectangle& rect) {
    const double x0 = rect.lo.real(), x1 = rect.hi.real();
    const double y0 = rect.lo.imag(), y1 = rect.hi.imag();
    const double e = rect.margin;
    if (!(x0 < x1 && y0 < y1)) throw DomainError("degenerate rectangle");
    bool touches = spec.family == Family::Bessel && x0 < e && y0 < e && y1 > -e;
    if (!touches) return {{box(x0, y0, x1, y1), 0}};
    if (y1 <= e) throw DomainError("upper edge too close to the branch cut");
    if (y0 > -e) throw DomainError("lower edge too close to the branch cut");
    if (x1 >= -e && x1 <= e) throw DomainError("right edge crosses the branch point keep-out");
    std::vector<CountPiece> out;
    CountPiece up;
    up.side = 1;
    if (x1 < -e) {
        up.polygon = box(x0, -e, x1, y1);
    } else if (x0 < -e) {
        up.polygon = {{x0, -e}, {-e, -e}, {-e, e}, {e, e}, {e, -e}, {x1, -e}, {x1, y1}, {x0, y1}};
    } else {
        up.polygon = {{e, -e}, {x1, -e}, {x1, y1}, {x0, y1}, {x0, e}, {e, e}};
    }
    out.push_back(up);
    if (y0 < -e) out.push_back({box(x0, y0, x1, -e), -1});
    return out;
}

bool in_count_region(const SolutionSpec& spec, const Rectangle& rect, cplx z) {
    z = principal(z);
    if (z.real() < rect.lo.real() || z.real() > rect.hi.real() || z.imag() < rect.lo.imag() ||
        z.imag() > rect.hi.imag())
        return false;
    if (spec.family != Family::Bessel) return true;
    const double e = rect.margin;
    if (std::abs(z.real()) <= e && std::abs(z.imag()) <= e) return false;
    if (z.real() < 0 && z.imag() < 0 && z.imag() > -e) return false;
    return true;
}

CountResult count_zeros(const SolutionSpec& spec, const Rectangle& rect) {
    for (int attempt = 0;; ++attempt) {
        Rectangle r = grown(rect, 0.37 * rect.margin * attempt);
        try {
            int total = 0;
            for (const auto& piece : count_pieces(spec, r)) {
                int side = piece.side;
                total += winding_number(
                    AnalyticFn([&](cplx z) { return target_pair(spec, z, side); }), piece.polygon);
            }
            return {total, r, attempt};
        } catch (const BoundaryZeroError&) {
            if (attempt >= 3) throw;
        }
    }
}

std::vector<Certificate> residual_certify(const SolutionSpec& spec, const std::vector<Zero>& zeros,
                                          double tol) {
    std::vector<Certificate> out;
    out.reserve(zeros.size());
    for (size_t i = 0; i < zeros.size(); ++i) {
        Certificate c;
        c.z = zeros[i].z;
        auto r = zero_residual(spec, c.z);
        c.residual = r.residual;
        c.newton_step = r.newton_step;
        c.nn_distance = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < zeros.size(); ++j)
            if (j != i) c.nn_distance = std::min(c.nn_distance, std::abs(zeros[j].z - c.z));
        c.flagged = !(c.newton_step <= 100 * tol * std::max(1.0, std::abs(c.z)));
        out.push_back(c);
    }
    return out;
}

}  // namespace zk
