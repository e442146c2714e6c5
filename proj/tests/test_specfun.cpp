#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "zerokit/specfun.hpp"

using namespace zk;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

cplx to_c(oracle::qc q) {
    return {static_cast<double>(crealq(q)), static_cast<double>(cimagq(q))};
}

}  // namespace

TEST(Airy, ValuesAtOrigin) {
    EXPECT_NEAR(airy_eval(0.0, AiryKind::Ai).f.real(), 0.355028053887817, 1e-15);
    EXPECT_NEAR(airy_eval(0.0, AiryKind::Bi).f.real(), 0.614926627446001, 1e-15);
    EXPECT_NEAR(airy_eval(0.0, AiryKind::Ai).df.real(), -0.258819403792807, 1e-15);
}

TEST(Airy, MatchesQuadSeries) {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-9, 9);
    for (int i = 0; i < 60; ++i) {
        cplx z(u(rng), u(rng));
        auto q = oracle::airy(oracle::make(z.real(), z.imag()));
        AiryPair a = airy_eval(z, AiryKind::Ai), b = airy_eval(z, AiryKind::Bi);
        EXPECT_LT(rel(a.f, to_c(q.ai)), 1e-12) << z;
        EXPECT_LT(rel(a.df, to_c(q.aip)), 1e-12) << z;
        EXPECT_LT(rel(b.f, to_c(q.bi)), 1e-12) << z;
        EXPECT_LT(rel(b.df, to_c(q.bip)), 1e-12) << z;
    }
}

TEST(Airy, ConnectionIdentity) {
    const cplx w = std::polar(1.0, 2 * kPi / 3);
    for (cplx z : {cplx(1.5, 0.5), cplx(-4, 2), cplx(12, -7), cplx(0.2, 25)}) {
        cplx t0 = airy_eval(z, AiryKind::Ai).f;
        cplx t1 = w * airy_eval(z * w, AiryKind::Ai).f;
        cplx t2 = std::conj(w) * airy_eval(z * std::conj(w), AiryKind::Ai).f;
        double scale = std::max({std::abs(t0), std::abs(t1), std::abs(t2)});
        EXPECT_LT(std::abs(t0 + t1 + t2) / scale, 1e-12) << z;
    }
}

TEST(Airy, WronskianAgainstProductSize) {
    // off the positive axis both products grow like e^{2|Re zeta|} and cancel to 1/pi,
    // so the error is measured against their size
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-12, 12);
    for (int i = 0; i < 100; ++i) {
        cplx z(u(rng), u(rng));
        AiryPair a = airy_eval(z, AiryKind::Ai), b = airy_eval(z, AiryKind::Bi);
        double size = std::abs(a.f * b.df) + std::abs(a.df * b.f);
        EXPECT_LT(std::abs(a.f * b.df - a.df * b.f - 1.0 / kPi), 5e-14 * size) << z;
    }
    for (double x : {-5.0, -1.0, 0.5, 3.0, 6.0}) {
        AiryPair a = airy_eval(x, AiryKind::Ai), b = airy_eval(x, AiryKind::Bi);
        EXPECT_LT(std::abs((a.f * b.df - a.df * b.f) * kPi - 1.0), 1e-13) << x;
    }
}

TEST(Airy, OverflowIsReportedWithExponent) {
    try {
        airy_eval(200.0, AiryKind::Bi);
        FAIL() << "expected ScaledOverflow";
    } catch (const ScaledOverflow& e) {
        EXPECT_NEAR(e.log_magnitude, 2.0 / 3 * std::pow(200.0, 1.5), 10);
    }
}

TEST(Cylinder, SmallArgument) {
    EXPECT_NEAR(std::abs(cyl_eval(0, 1e-8, CylKind::J).f - 1.0), 0, 1e-15);
    EXPECT_THROW(cyl_eval(0, 0.0, CylKind::J), DomainError);
}

TEST(Cylinder, HankelIsJPlusIY) {
    cplx z(2, 1);
    cplx h = cyl_eval(1.5, z, CylKind::H1).f;
    cplx j = cyl_eval(1.5, z, CylKind::J).f, y = cyl_eval(1.5, z, CylKind::Y).f;
    EXPECT_LT(std::abs(h - (j + cplx(0, 1) * y)), 1e-12);
    cplx h2 = cyl_eval(1.5, z, CylKind::H2).f;
    EXPECT_LT(std::abs(h2 - (j - cplx(0, 1) * y)), 1e-12);
}

TEST(Cylinder, Wronskian) {
    cplx z(3, 2);
    CylPair j = cyl_eval(0.7, z, CylKind::J), y = cyl_eval(0.7, z, CylKind::Y);
    EXPECT_LT(rel(j.f * y.df - j.df * y.f, 2.0 / (kPi * z)), 1e-12);

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ux(-30, 30), uy(-3, 3), unu(0, 10);
    for (int i = 0; i < 100; ++i) {
        cplx w(ux(rng), uy(rng));
        double nu = unu(rng);
        CylPair a = cyl_eval(nu, w, CylKind::J), b = cyl_eval(nu, w, CylKind::Y);
        EXPECT_LT(rel(a.f * b.df - a.df * b.f, 2.0 / (kPi * w)), 1e-11) << nu << " " << w;
    }
}

TEST(Cylinder, KnownValues) {
    // J0(2.404825557695773) = 0, Y0(1) and J1(10) from tables
    EXPECT_LT(std::abs(cyl_eval(0, 2.404825557695773, CylKind::J).f), 1e-15);
    EXPECT_NEAR(cyl_eval(0, 1.0, CylKind::Y).f.real(), 0.088256964215676957983, 1e-15);
    EXPECT_NEAR(cyl_eval(1, 10.0, CylKind::J).f.real(), 0.043472746168861436670, 1e-15);
    EXPECT_NEAR(cyl_eval(2.5, 40.0, CylKind::Y).f.real(), -0.091030967876217198, 1e-13);
}

TEST(Cylinder, IntegerOrderContinuityInNu) {
    cplx z(3.3, 0.4);
    for (double n : {0.0, 1.0, 4.0}) {
        cplx a = cyl_eval(n, z, CylKind::Y).f;
        cplx b = cyl_eval(n + 1e-9, z, CylKind::Y).f;
        EXPECT_LT(std::abs(a - b), 1e-7) << n;
    }
}

TEST(GeneralSolutions, AiryCombinations) {
    for (cplx z : {cplx(-2.5), cplx(1, 1), cplx(-7, 3)}) {
        EXPECT_LT(std::abs(gen_airy(0.0, z, false) - airy_eval(z, AiryKind::Ai).f), 1e-15 * (1 + std::abs(airy_eval(z, AiryKind::Bi).f)));
        EXPECT_LT(rel(gen_airy(kPi / 2, z, false), airy_eval(z, AiryKind::Bi).f), 1e-14);
        EXPECT_LT(rel(gen_airy(kPi / 2, z, true), airy_eval(z, AiryKind::Bi).df), 1e-14);
    }
    // Ai(-2.5) = -0.112325067692966, Bi(-2.5) = -0.432422471840705
    cplx v = gen_airy(kPi / 4, -2.5, false);
    EXPECT_NEAR(v.real(), (-0.112325067692966 - 0.432422471840705) / std::sqrt(2.0), 1e-13);
}

TEST(GeneralSolutions, CylinderTwoForms) {
    cplx alpha(1, 2), z(4, -1);
    const cplx i(0, 1);
    cplx h1 = cyl_eval(0.3, z, CylKind::H1).f, h2 = cyl_eval(0.3, z, CylKind::H2).f;
    cplx hankel_form = 0.5 * (std::exp(i * alpha) * h1 + std::exp(-i * alpha) * h2);
    EXPECT_LT(rel(gen_cyl(0.3, alpha, z, false), hankel_form), 1e-12);
    EXPECT_LT(rel(gen_cyl(0.3, 0.0, z, false), cyl_eval(0.3, z, CylKind::J).f), 1e-15);
}

TEST(GeneralSolutions, Reflection) {
    cplx z(3, 1);
    cplx a = gen_cyl(-0.4, 0.2, z, false);
    cplx b = gen_cyl(0.4, 0.2 + 0.4 * kPi, z, false);
    EXPECT_LT(rel(a, b), 1e-12);
    EXPECT_LT(rel(gen_cyl(-0.4, 0.2, z, true), gen_cyl(0.4, 0.2 + 0.4 * kPi, z, true)), 1e-12);
}

TEST(Continuation, HankelAcrossTheCut) {
    // H1(w e^{i pi}) = -e^{-i nu pi} H2(w)
    SolutionSpec h1;
    h1.family = Family::Bessel;
    h1.limit = Limit::MinusInf;
    for (double nu : {0.0, 0.3, 2.7}) {
        h1.nu = nu;
        for (cplx w : {cplx(2, -0.5), cplx(7, -3), cplx(0.4, -0.1)}) {
            cplx lhs = eval_continued(h1, w, +1).f;
            cplx rhs = -std::exp(cplx(0, -nu * kPi)) * cyl_eval(nu, w, CylKind::H2).f;
            EXPECT_LT(rel(lhs, rhs), 1e-10) << nu << " " << w;
        }
    }
}

TEST(Continuation, SideMatchesPrincipalAwayFromCut) {
    SolutionSpec s;
    s.family = Family::Bessel;
    s.nu = 1.3;
    s.alpha = cplx(0.4, 0.2);
    cplx z(-3, 0.5);
    EXPECT_LT(rel(eval_side(s, z, +1).f, eval_solution(s, z).f), 1e-12);
    cplx zb(-3, -0.5);
    EXPECT_LT(rel(eval_side(s, zb, -1).f, eval_solution(s, zb).f), 1e-12);
    // continuing the upper function below the cut differs from the principal one
    EXPECT_GT(rel(eval_side(s, zb, +1).f, eval_solution(s, zb).f), 1e-3);
}

TEST(Continuation, SecondDerivativeSatisfiesEquation) {
    SolutionSpec s;
    s.family = Family::Bessel;
    s.nu = 2.2;
    s.alpha = 0.7;
    cplx z(3, 1), h = 1e-4;
    Eval e = eval_solution(s, z);
    cplx fd = (eval_solution(s, z + h).df - eval_solution(s, z - h).df) / (2.0 * h);
    EXPECT_LT(rel(second_derivative(s, z, e.f, e.df), fd), 1e-7);
}
