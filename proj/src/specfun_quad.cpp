#include "quad_kernels.hpp"

#include <cmath>

extern "C" {
#include <quadmath.h>
}

namespace zk::detail {

namespace {

using qf = __float128;
using qc = __complex128;

const qf kAi0 = 0.355028053887817239260063186004183176Q;
const qf kAip0 = 0.258819403792806798405183560189203963Q;  // -Ai'(0)
const qf kSqrt3 = 1.732050807568877293527446341505872367Q;
const qf kEuler = 0.577215664901532860606512090082402431Q;
const qf kEps = 1e-36Q;

qc mk(double re, double im) {
    qc r;
    __real__ r = re;
    __imag__ r = im;
    return r;
}

qc mk(cplx z) { return mk(z.real(), z.imag()); }

cplx to_d(qc z) {
    return {static_cast<double>(crealq(z)), static_cast<double>(cimagq(z))};
}

// Rounds to double; throws when out of range.
cplx checked(qc z) {
    qf m = cabsq(z);
    if (m > 1e300Q || isinfq(m) || isnanq(m)) {
        double lm = isnanq(m) ? HUGE_VAL : static_cast<double>(logq(m));
        throw ScaledOverflow("Bessel series value outside double range", lm);
    }
    return to_d(z);
}

// J_nu(z) by the ascending series. Only called with nu > -1 or nu non-integer.
qc j_series(qf nu, qc z) {
    qc h = z / 2;
    qc mh2 = -(h * h);
    qc sum = 0;
    qc t = 1 / tgammaq(nu + 1);
    qf ah2 = cabsq(mh2);
    for (int k = 0; k < 2000; ++k) {
        sum += t;
        qf kk = k + 1;
        t = t * mh2 / (kk * (nu + kk));
        if (kk * kk > ah2 && cabsq(t) <= kEps * cabsq(sum)) break;
    }
    return cexpq(nu * clogq(h)) * sum;
}

qf harmonic(int n) {
    qf s = 0;
    for (int i = 1; i <= n; ++i) s += qf(1) / i;
    return s;
}

// Y_n(z) for integer n >= 0.
qc y_integer(int n, qc z) {
    qc h = z / 2;
    qc h2 = h * h;
    qc L = clogq(h);
    qc hn = cexpq(qf(n) * L);
    qc hmn = cexpq(-qf(n) * L);

    qc s1 = 0;
    if (n > 0) {
        // sum_{k<n} (n-k-1)!/k! h2^k
        qc p = 1;
        qf fk = 1;  // k!
        for (int k = 0; k < n; ++k) {
            if (k > 0) {
                p *= h2;
                fk *= k;
            }
            s1 += tgammaq(qf(n - k)) / fk * p;
        }
    }

    qc jn = j_series(qf(n), z);

    qc s3 = 0;
    qc u = 1 / tgammaq(qf(n + 1));
    qf ha = harmonic(0), hb = harmonic(n);
    qf ah2 = cabsq(h2);
    for (int k = 0; k < 2000; ++k) {
        qc term = (ha + hb - 2 * kEuler) * u;
        s3 += term;
        qf kk = k + 1;
        u = u * (-h2) / (kk * (n + kk));
        ha += 1 / kk;
        hb += 1 / (n + kk);
        if (kk * kk > ah2 && cabsq(u) * (fabsq(ha) + fabsq(hb) + 2) <= kEps * cabsq(s3)) break;
    }
    return -hmn / M_PIq * s1 + 2 / M_PIq * L * jn - hn / M_PIq * s3;
}

qc y_series(qf nu, qc z, bool integer) {
    if (integer) return y_integer(static_cast<int>(nu), z);
    qf s = sinq(nu * M_PIq), c = cosq(nu * M_PIq);
    return (j_series(nu, z) * c - j_series(-nu, z)) / s;
}

}  // namespace

AiryQuad airy_series(cplx zd) {
    qc z = mk(zd);
    qc z2 = z * z;
    qc z3 = z2 * z;
    qc f = 0, fp = 0, g = 0, gp = 0;
    qc t = 1;      // f terms
    qc sg = 1;     // sigma_k, g = z sum sigma_k
    qf az3 = cabsq(z3);
    for (int k = 0; k < 500; ++k) {
        qf a = 3 * k + 2, b = 3 * k + 3, c = 3 * k + 4;
        f += t;
        fp += t * z2 / a;
        g += sg;
        gp += (3 * k + 1) * sg;
        t = t * z3 / (a * b);
        sg = sg * z3 / (b * c);
        if (a * b > az3 && cabsq(t) + cabsq(sg) <= kEps * (cabsq(f) + cabsq(g) * (1 + cabsq(z)))) break;
    }
    g *= z;
    qc ai = kAi0 * f - kAip0 * g;
    qc aip = kAi0 * fp - kAip0 * gp;
    qc bi = kSqrt3 * (kAi0 * f + kAip0 * g);
    qc bip = kSqrt3 * (kAi0 * fp + kAip0 * gp);
    return {to_d(ai), to_d(aip), to_d(bi), to_d(bip)};
}

void j_series_pair(double nu, cplx zd, cplx& j0, cplx& j1) {
    qc z = mk(zd);
    j0 = checked(j_series(qf(nu), z));
    j1 = checked(j_series(qf(nu) + 1, z));
}

CylQuad cyl_series_combo(double nu, cplx cjd, cplx cyd, cplx zd) {
    qc z = mk(zd);
    qc cj = mk(cjd), cy = mk(cyd);
    qf q = nu;
    // the general Y formula keeps ~1e-34/|nu-n| relative accuracy in quad
    qf n = roundq(q);
    bool integer = fabsq(q - n) < 1e-18Q;
    if (integer) q = n;
    bool need_y = !(crealq(cy) == 0 && cimagq(cy) == 0);

    qc f = cj * j_series(q, z);
    qc f1 = cj * j_series(q + 1, z);
    if (need_y) {
        f += cy * y_series(q, z, integer);
        f1 += cy * y_series(q + 1, z, integer);
    }
    qc df = q / z * f - f1;
    return {checked(f), checked(df)};
}

}  // namespace zk::detail
