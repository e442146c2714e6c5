#pragma once

#include "zerokit/types.hpp"

namespace zk {

struct AiryPair {
    cplx f;
    cplx df;
};

struct CylPair {
    cplx f;
    cplx df;
};

enum class AiryKind { Ai, Bi };
enum class CylKind { J, Y, H1, H2 };

// Ai, Bi and derivatives. Relative accuracy around 1e-13 for |z| <= 50.
AiryPair airy_eval(cplx z, AiryKind kind);

// J, Y, H1, H2 of real order nu >= 0 and derivatives on the principal sheet.
CylPair cyl_eval(double nu, cplx z, CylKind kind);

// cos(a) Ai + sin(a) Bi, or its derivative.
cplx gen_airy(cplx alpha, cplx z, bool deriv);

// cos(a) J_nu - sin(a) Y_nu, or its derivative. Negative nu is reflected.
cplx gen_cyl(double nu, cplx alpha, cplx z, bool deriv);

// Value and derivative of a solution described by a SolutionSpec (the deriv
// flag of the spec is ignored here: f is always the solution itself).
struct Eval {
    cplx f;
    cplx df;
};

Eval eval_solution(const SolutionSpec& spec, cplx z);

// Analytic continuation of a Bessel-family solution across the negative axis.
// Returns g(w) = f(w e^{i m pi}) and g'(w) for m = +1 or -1, with w on the
// principal sheet. For z = -w this is the continuation of f from the upper
// (m=+1) or lower (m=-1) half-plane.
Eval eval_continued(const SolutionSpec& spec, cplx w, int m);

// Continuation of the principal function from the upper (side=+1) or lower
// (side=-1) half-plane, valid on a neighbourhood of the negative axis.
Eval eval_side(const SolutionSpec& spec, cplx z, int side);

// Coefficients (cJ, cY) with f = cJ J_nu + cY Y_nu, nu >= 0 after reflection.
struct CylCoeffs {
    double nu;
    cplx cj;
    cplx cy;
};
CylCoeffs cyl_coeffs(const SolutionSpec& spec);

// Rewrites cj J_nu + cy Y_nu for negative nu in terms of order |nu|.
CylCoeffs reflect_coeffs(double nu, cplx cj, cplx cy);

// f and f' for f = cj J_nu + cy Y_nu, nu >= 0, z on the principal sheet.
Eval eval_cyl_combo(double nu, cplx cj, cplx cy, cplx z);

// Second derivative from the differential equation.
cplx second_derivative(const SolutionSpec& spec, cplx z, cplx f, cplx df);

// Principal-sheet normalisation: a negative real z with -0 imaginary part gets +0.
inline cplx principal(cplx z) {
    if (z.imag() == 0.0 && z.real() < 0.0) return {z.real(), 0.0};
    return z;
}

}  // namespace zk
