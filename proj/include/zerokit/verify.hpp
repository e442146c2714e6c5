#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "zerokit/types.hpp"

namespace zk {

using ScalarFn = std::function<cplx(cplx)>;

// f and f' at a point. With the derivative the phase tracker also bounds the
// rate of turning at every sample, which catches full turns hidden between
// two samples close to a zero.
struct FnValue {
    cplx f;
    cplx df;
};
using AnalyticFn = std::function<FnValue(cplx)>;

// The phase along an edge could not be resolved: a zero sits on (or very near)
// the contour, or the function is not finite there.
struct BoundaryZeroError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Winding number of f around a closed polygon (vertices in order, last edge
// closes back to the first). Phase steps are kept below pi/4 by bisection.
int winding_number(const ScalarFn& f, const std::vector<cplx>& polygon);
int winding_number(const AnalyticFn& f, const std::vector<cplx>& polygon);

// Number of zeros of f inside rect. On a boundary failure the rectangle is
// pushed outward by a fraction of the margin and retried.
int argument_principle_count(const ScalarFn& f, const Rectangle& rect);
int argument_principle_count(const AnalyticFn& f, const Rectangle& rect);

// The function whose zeros are sought (f, or f' for derivative specs). side
// selects the continuation across the negative axis (Bessel only), 0 is the
// principal branch.
cplx target_value(const SolutionSpec& spec, cplx z, int side = 0);
FnValue target_pair(const SolutionSpec& spec, cplx z, int side = 0);

// |F|/max(|F'||z|, 1) and the Newton correction |F/F'| of the target function.
struct ResidualInfo {
    double residual = 0.0;
    double newton_step = 0.0;
};
ResidualInfo zero_residual(const SolutionSpec& spec, cplx z, int side = 0);

// Pieces over which the zeros of a spec are counted. For Bessel specs whose
// rectangle meets the cut, the part above Im = -margin (less a square notch
// around the origin) is counted with the continuation from above and the part
// below with the principal function.
struct CountPiece {
    std::vector<cplx> polygon;
    int side = 0;
};
std::vector<CountPiece> count_pieces(const SolutionSpec& spec, const Rectangle& rect);

// Whether z belongs to the counted set of rect: inside, outside the notch
// around the origin and outside the thin strip just below the cut.
bool in_count_region(const SolutionSpec& spec, const Rectangle& rect, cplx z);

struct CountResult {
    int count = 0;
    Rectangle used;  // rectangle actually counted after nudges
    int nudges = 0;
};
CountResult count_zeros(const SolutionSpec& spec, const Rectangle& rect);

struct Certificate {
    cplx z;
    double residual = 0.0;
    double nn_distance = 0.0;  // infinity for a single zero
    double newton_step = 0.0;
    bool flagged = false;
};

// Flags any zero whose Newton correction exceeds 100 tol max(1, |z|).
std::vector<Certificate> residual_certify(const SolutionSpec& spec, const std::vector<Zero>& zeros,
                                          double tol = 1e-13);

}  // namespace zk
