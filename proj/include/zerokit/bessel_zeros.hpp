#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zerokit/types.hpp"

namespace zk {

struct MacMahonParams {
    cplx beta;
    double mu = 0.0;  // 4 nu^2
    cplx chi;
};

// beta - sum_{i<terms} c_i(mu)/beta^{2i+1}; terms in [0,3]. `low_accuracy`
// is set when |beta| < 3.
cplx macmahon(const MacMahonParams& p, int terms, bool deriv = false,
              bool* low_accuracy = nullptr);

// Same series truncated where its terms stop decreasing (at most 3 corrections).
cplx macmahon_optimal(const MacMahonParams& p, bool deriv, int* used = nullptr);

// Zeros as Re z -> +inf.
std::vector<ZeroEstimate> pos_axis_estimates(const SolutionSpec& spec, int k_lo, int k_hi,
                                             std::string* notice = nullptr);
std::vector<ZeroEstimate> pos_axis_estimates(double nu, cplx alpha, int k_lo, int k_hi,
                                             bool deriv, std::string* notice = nullptr);

struct BranchCutAnalysis {
    cplx A, B;          // m = +1 (infinite when sin(alpha) = 0)
    cplx A_hom, B_hom;  // A sin(alpha), B sin(alpha)
    cplx s;             // sin(alpha)
    double a = 0.0;     // Im of the rotated m=+1 string; the string sits at Im z = -a
    double b = 0.0;     // same for m = -1
    bool exists_above = false;
    bool exists_below = false;
    bool on_axis = false;
};

BranchCutAnalysis branchcut_analysis(double nu, cplx alpha);

// Strings parallel to the negative axis, reported in the original variable.
// Labels cut_above (m=+1), cut_below (m=-1), or cut_axis for strings on the cut.
std::vector<ZeroEstimate> branchcut_estimates(double nu, cplx alpha, int m, int k_lo, int k_hi,
                                              bool deriv = false, std::string* notice = nullptr);

// Below-cut string of H1 (H2 is the conjugate). Empty for {nu} in (1/3, 2/3).
std::vector<ZeroEstimate> hankel_belowcut(double nu, int k_lo, int k_hi, bool deriv = false,
                                          std::string* notice = nullptr);

cplx eye_f(cplx zt);
double eye_g(double y);

enum class EyeSide { Inside, Outside, OnBoundary, None };
std::string to_string(EyeSide s);

struct EyeGeometry {
    std::optional<double> y_plus;
    std::optional<double> y_minus;
    std::optional<double> x0_lower;
    std::optional<double> x0_upper;
    EyeSide airy_type_lower = EyeSide::None;
    EyeSide airy_type_upper = EyeSide::None;
};

EyeGeometry eye_axis_cuts(const SolutionSpec& spec);
EyeGeometry eye_axis_cuts(double nu, cplx alpha);

struct BesselClassification {
    bool pos_axis = false;
    bool cut_above = false;
    bool cut_below = false;
    bool cut_axis = false;  // zeros lying on the cut itself (e.g. -j_{nu,k} for J_nu)
    bool airy_upper = false;
    bool airy_lower = false;
    std::vector<std::string> notes;
};

BesselClassification classify_bessel(const SolutionSpec& spec);
BesselClassification classify_bessel(double nu, cplx alpha);

struct BesselAlpha {
    cplx alpha;
    Limit limit = Limit::None;
};

BesselAlpha alpha_from_bessel_zero(double nu, cplx z0, bool deriv = false);

// C_{-nu}(alpha, z) = C_nu(alpha + nu pi, z); the Hankel limits only change by a factor.
SolutionSpec reflect_order(const SolutionSpec& spec);

}  // namespace zk
