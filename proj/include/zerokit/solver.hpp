#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zerokit/types.hpp"

namespace zk {

struct FixedPointResult {
    cplx z;
    int iterations = 0;
    double residual = 0.0;
    bool converged = false;
};

struct SweepConfig {
    double tol = 1e-13;
    int max_iter = 30;
    Rectangle region{{-10.0, -10.0}, {10.0, 10.0}};
    std::optional<double> L;   // launch abscissa; default is the region edge
    int threads = 1;
    double grid_spacing = 0.5; // spacing of the seed grid of the final pass, 0 disables it
};

// z - atan(sqrt(A) y/y')/sqrt(A). The arctan is evaluated in logarithmic form
// so that y' = 0 gives the +-pi/2 step. Throws TurningPointError when A = 0.
cplx fp4_step(cplx z, cplx y, cplx dy, cplx A);

// z + atan(y'/(sqrt(A) y))/sqrt(A); converges quadratically to zeros of y'.
cplx fp2_deriv_step(cplx z, cplx y, cplx dy, cplx A);

// Fourth order map for the zeros of the derivative of cos(a) Ai + sin(a) Bi.
cplx airy_deriv_fp4(cplx z, cplx alpha);
cplx airy_deriv_fp4(const SolutionSpec& spec, cplx z);

// Fourth order map for the zeros of the derivative of a cylinder function.
cplx bessel_deriv_fp4(double nu, cplx alpha, cplx z);
cplx bessel_deriv_fp4(const SolutionSpec& spec, cplx z, int side = 0);

// z + sign pi/sqrt(A) with the principal square root.
cplx asl_step(cplx z, cplx A, int sign);

// Coefficient of the normal form whose zeros are sought: -z for Airy,
// 1 - (nu^2 - 1/4)/z^2 for Bessel, and the transformed coefficients for the
// derivative variants.
cplx normal_coefficient(const SolutionSpec& spec, cplx z);

// One step of the fourth order map appropriate for the spec.
cplx fixed_point_map(const SolutionSpec& spec, cplx z, int side = 0);

// Iterates fixed_point_map from z0 until the step stalls or max_iter.
// converged means residual < tol and a Newton correction below 10 tol max(1,|z|).
FixedPointResult refine(const SolutionSpec& spec, cplx z0, const SweepConfig& cfg, int side = 0);

// Checked on every zero after the seed: when true the zero is not reported and
// the sweep ends.
using StopRule = std::function<bool(cplx z)>;

struct SweepResult {
    std::vector<Zero> zeros;   // zeros in the region, in sweep order
    std::string stop_reason;
    std::vector<std::string> diagnostics;
};

// Refines the seed, then repeatedly steps pi/sqrt(A) with the sign whose
// direction agrees with `direction`, refining after each step.
SweepResult sweep_string(const SolutionSpec& spec, cplx seed, cplx direction,
                         const StopRule& stop, const SweepConfig& cfg, int side = 0,
                         const std::string& label = "");

struct StringReport {
    std::string label;
    std::vector<cplx> seeds;
    std::vector<std::string> stop_reasons;
    std::vector<std::string> diagnostics;
    int found = 0;
};

struct ZeroReport {
    std::vector<Zero> zeros;   // sorted by label, then Re z, then Im z
    std::vector<StringReport> strings;
    std::vector<std::string> diagnostics;
};

// All principal-sheet zeros in cfg.region (the counted set of verify's
// in_count_region). Strings are seeded from the estimates, swept, then a pass
// over every estimate and a grid of seeds picks up anything missed; zeros
// found only by the grid are labelled "extra".
ZeroReport compute_all_zeros(const SolutionSpec& spec, const SweepConfig& cfg);

}  // namespace zk
