#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace zk {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Result magnitude exceeds double range; log_magnitude is log|value|.
struct ScaledOverflow : std::overflow_error {
    double log_magnitude;
    ScaledOverflow(const std::string& what, double logmag)
        : std::overflow_error(what), log_magnitude(logmag) {}
};

struct TurningPointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularPointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Family { Airy, Bessel };

// General member of the family, or one of the two limits Im(alpha) -> -inf / +inf.
// Airy: MinusInf is Ai(z e^{2pi i/3}), PlusInf is Ai(z e^{-2pi i/3}).
// Bessel: MinusInf is H1, PlusInf is H2.
enum class Limit { None, MinusInf, PlusInf };

struct SolutionSpec {
    Family family = Family::Airy;
    cplx alpha{0.0, 0.0};
    double nu = 0.0;
    bool deriv = false;
    Limit limit = Limit::None;
};

struct ZeroEstimate {
    cplx z;
    int k = 0;
    std::string string;
    cplx t;           // expansion argument (t for Airy, beta for Bessel)
    int order = 0;    // correction terms used
    bool unverified_index = false;
    bool low_accuracy = false;
};

struct Zero {
    cplx z;
    double residual = 0.0;
    std::string string;
    int k = 0;
};

// Axis-parallel rectangle [lo.re, hi.re] x [lo.im, hi.im]. `margin` is the
// keep-out distance used around the branch point and the cut.
struct Rectangle {
    cplx lo;
    cplx hi;
    double margin = 1e-3;
};

std::string to_string(Family f);
std::string to_string(Limit l);

}  // namespace zk
