#pragma once

#include <array>
#include <string>
#include <vector>

#include "zerokit/types.hpp"

namespace zk {

enum class AiryString { NegAxis, RayPlus, RayMinus };
enum class Side { Above, Below, On, None };

std::string to_string(AiryString s);
std::string to_string(Side s);

struct AiryPattern {
    bool on_neg_axis = false;
    bool on_ray_plus = false;
    bool on_ray_minus = false;
    Side side_plus = Side::None;
    Side side_minus = Side::None;
    std::vector<AiryString> absent_rays;
};

// Truncated expansions through the t^-6 term. `warn` is set when |t| < 2.
cplx T_series(cplx t, bool* warn = nullptr);
cplx U_series(cplx t, bool* warn = nullptr);
std::array<double, 4> T_coefficients();
std::array<double, 4> U_coefficients();

// principal log(1 - e^{x}), safe for large Re x
cplx log1m_exp(cplx x);

// Estimates for k in [k_lo, k_hi]; indices with Re t_k <= 0 are skipped. An
// empty result carries the reason in `notice`.
std::vector<ZeroEstimate> airy_estimates(const SolutionSpec& spec, AiryString string, int k_lo,
                                         int k_hi, std::string* notice = nullptr);
std::vector<ZeroEstimate> airy_estimates(cplx alpha, AiryString string, int k_lo, int k_hi,
                                         bool deriv, std::string* notice = nullptr);

// Leading-order location e^{+-i pi/3} t_k^{2/3} (or -t_k^{2/3}) of the k-th zero.
cplx airy_first_approx(cplx alpha, AiryString string, int k, bool deriv = false);

// r0 of the anti-Stokes curve carrying the ray_plus (sign=+1) or ray_minus zeros.
double airy_ray_r0(cplx alpha, int sign);

AiryPattern classify_airy(cplx alpha);
AiryPattern classify_airy(const SolutionSpec& spec);

struct AlphaResult {
    cplx alpha;
    Limit limit = Limit::None;
};

// alpha = arctan(-Ai(z0)/Bi(z0)) with Re alpha in (-pi/2, pi/2]; derivative
// variant uses Ai', Bi'.
AlphaResult alpha_from_airy_zero(cplx z0, bool deriv = false);

// Representative of alpha mod pi with Re in (-pi/2, pi/2].
cplx reduce_alpha(cplx alpha);

}  // namespace zk
