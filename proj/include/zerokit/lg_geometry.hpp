#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zerokit/types.hpp"

namespace zk {

struct CurveSample {
    std::vector<cplx> points;
    std::string label;
    std::string stop_reason;
};

struct EyeConstant {
    double c;
};

// Angles (-arg a + 2k pi)/(m+2), k = 0..m+1, folded into (-pi, pi] and sorted.
std::vector<double> principal_directions(int m, cplx a);

// Point r(theta) e^{i theta} of the Airy anti-Stokes curve in sector j.
cplx airy_asl_point(double r0, double theta, int sector);

// |e^{s} eta / (s + 1)|, s = sqrt(1 - eta^2).
double bessel_F(cplx eta);

EyeConstant solve_eye_constant();
double eye_constant_residual(double c);

// Coefficient A(z) of w'' + A w = 0. For the two built-in families the level
// function of the anti-Stokes lines is known and used to project the trace.
struct Coefficient {
    enum class Kind { Generic, Airy, RiccatiBessel };
    Kind kind = Kind::Generic;
    double nu = 0.0;
    std::function<cplx(cplx)> A;

    static Coefficient generic(std::function<cplx(cplx)> a);
    static Coefficient airy();                  // A = -z
    static Coefficient riccati_bessel(double nu);  // A = 1 - (nu^2 - 1/4)/z^2
};

// Level function l(z) of the anti-Stokes lines and its complex gradient g
// (dl = Re(g dz)). Only for the built-in kinds.
double asl_level(const Coefficient& A, cplx z, cplx* grad = nullptr);

// Follows the anti-Stokes line through start (dz along e^{-i arg A/2}).
CurveSample trace_asl(cplx start, const Coefficient& A, int direction, double max_arc,
                      double step = 0.05);

// Level curves F(z / sqrt(nu^2 - 1/4)) = level of the Riccati-Bessel
// coefficient (both conjugate halves), or for Airy (level = r0) the three
// sector curves.
std::vector<CurveSample> trace_level_curves(const Coefficient& A, double level, double max_arc,
                                            double step = 0.05);

std::string to_csv(const CurveSample& c);

}  // namespace zk
