#pragma once

// Power series kernels evaluated in binary128 arithmetic. The extra precision
// absorbs the cancellation of the Maclaurin series at moderate |z|.

#include "zerokit/types.hpp"

namespace zk::detail {

struct AiryQuad {
    cplx ai, aip, bi, bip;
};

AiryQuad airy_series(cplx z);

// f = cj J_nu + cy Y_nu and f', nu >= 0. Throws ScaledOverflow when |f| or
// |f'| leaves double range.
struct CylQuad {
    cplx f, df;
};

CylQuad cyl_series_combo(double nu, cplx cj, cplx cy, cplx z);

// J_nu and J_{nu+1} by the ascending series.
void j_series_pair(double nu, cplx z, cplx& j0, cplx& j1);

}  // namespace zk::detail
