#include <gtest/gtest.h>

#include <cmath>

#include "zerokit/bessel_zeros.hpp"
#include "zerokit/lg_geometry.hpp"
#include "zerokit/solver.hpp"
#include "zerokit/specfun.hpp"

using namespace zk;

namespace {

SolutionSpec bessel(double nu, cplx alpha, Limit lim = Limit::None) {
    SolutionSpec s;
    s.family = Family::Bessel;
    s.nu = nu;
    s.alpha = alpha;
    s.limit = lim;
    return s;
}

const double kLn2Half = 0.5 * std::log(2.0);

}  // namespace

TEST(MacMahon, Terms) {
    MacMahonParams p{3 * kPi / 4, 0.0, 0.0};
    EXPECT_EQ(macmahon(p, 0), cplx(3 * kPi / 4));
    // one correction: 3pi/4 + 1/(6 pi) = 2.409246, 4.4e-3 above j_{0,1}
    double one = macmahon(p, 1).real();
    EXPECT_NEAR(one, 2.4092461379, 1e-9);
    EXPECT_NEAR(one - 2.404825557695773, 4.42e-3, 1e-5);
    bool low = false;
    macmahon(MacMahonParams{2.0, 0.0, 0.0}, 2, false, &low);
    EXPECT_TRUE(low);
}

TEST(MacMahon, HalfOrderIsExact) {
    auto e = pos_axis_estimates(0.5, 0.0, 1, 5, false);
    ASSERT_EQ(e.size(), 5u);
    for (const auto& x : e) EXPECT_NEAR(x.z.real(), x.k * kPi, 1e-14 * x.k);
}

TEST(PosAxis, SmallOrders) {
    auto j = pos_axis_estimates(0, 0.0, 1, 3, false);
    ASSERT_EQ(j.size(), 3u);
    // three corrections: 2.4064624, 5.5200867, 8.6537283
    EXPECT_NEAR(j[0].z.real(), 2.4064624434, 1e-9);
    EXPECT_LT(std::abs(j[0].z.real() - 2.404825557695773), 2e-3);
    EXPECT_LT(std::abs(j[1].z.real() - 5.520078110286311), 1e-4);
    EXPECT_LT(std::abs(j[2].z.real() - 8.653727912911013), 1e-5);

    auto y = pos_axis_estimates(0, kPi / 2, 1, 1, false);
    ASSERT_EQ(y.size(), 1u);
    EXPECT_NEAR(y[0].z.real(), 0.9445531065, 1e-9);
    EXPECT_LT(std::abs(y[0].z.real() - 0.893576966279168), 5.2e-2);
    EXPECT_TRUE(y[0].low_accuracy);
}

TEST(PosAxis, ImaginaryAsymptote) {
    auto e = pos_axis_estimates(1, cplx(0.3, 0.4), 5, 40, false);
    double prev = INFINITY;
    for (const auto& x : e) {
        double d = std::abs(x.z.imag() + 0.4);
        EXPECT_LT(d, prev);
        prev = d;
    }
    EXPECT_LT(prev, 1e-4);
    auto h = pos_axis_estimates(0.5, 0.5 * cplx(0, 1), 20, 20, false);
    EXPECT_NEAR(h[0].z.imag(), -0.5, 1e-3);
}

TEST(PosAxis, RefinedImaginaryPartsApproachAsymptote) {
    SolutionSpec s = bessel(1, cplx(0.3, 0.4));
    SweepConfig cfg;
    double prev = INFINITY;
    for (const auto& e : pos_axis_estimates(s, 4, 12)) {
        auto r = refine(s, e.z, cfg);
        ASSERT_TRUE(r.converged);
        double d = std::abs(r.z.imag() + 0.4);
        EXPECT_LT(d, prev);
        prev = d;
    }
}

TEST(PosAxis, HankelHasNone) {
    std::string note;
    EXPECT_TRUE(pos_axis_estimates(bessel(1, 0.0, Limit::MinusInf), 1, 5, &note).empty());
    EXPECT_FALSE(note.empty());
}

TEST(BranchCut, IntegerOrderLimit) {
    BranchCutAnalysis b = branchcut_analysis(0, kPi / 2);
    EXPECT_NEAR(b.A.real(), 0, 1e-15);
    EXPECT_NEAR(b.B.real(), -2, 1e-15);
    EXPECT_NEAR(b.a, -0.25 * std::log(9.0), 1e-14);
    EXPECT_TRUE(b.exists_above);
    EXPECT_TRUE(b.exists_below);
    EXPECT_FALSE(b.on_axis);
    // same for Y_3
    EXPECT_NEAR(branchcut_analysis(3, kPi / 2).a, -0.25 * std::log(9.0), 1e-12);
}

TEST(BranchCut, Cases) {
    BranchCutAnalysis b = branchcut_analysis(0.25, 0.3 * kPi);
    EXPECT_TRUE(b.exists_above);
    EXPECT_LT(b.a, 0);

    b = branchcut_analysis(0.5, 0.2);
    EXPECT_TRUE(b.on_axis);
    EXPECT_NEAR(std::abs(b.B_hom), 0, 1e-15);

    EXPECT_TRUE(branchcut_analysis(1.7, 0.0).on_axis);
    EXPECT_TRUE(branchcut_analysis(1.3, 0.3 * kPi).on_axis);  // alpha = {nu} pi
}

TEST(BranchCut, SignOfAMatchesB) {
    for (double nu : {0.1, 0.7, 1.35, 2.9})
        for (double alpha : {-1.2, -0.4, 0.5, 1.1}) {
            BranchCutAnalysis b = branchcut_analysis(nu, alpha);
            if (b.on_axis || std::abs(b.B_hom) < 1e-12) continue;
            // a has the sign of B (B_hom = B sin(alpha) carries the sign of sin(alpha))
            double sb = b.B_hom.real() * std::sin(alpha);
            EXPECT_EQ(b.a > 0, sb > 0) << nu << " " << alpha;
        }
}

TEST(BranchCut, Estimates) {
    auto up = branchcut_estimates(0, kPi / 2, +1, 8, 10);
    ASSERT_EQ(up.size(), 3u);
    for (const auto& e : up) {
        EXPECT_EQ(e.string, "cut_above");
        EXPECT_LT(e.z.real(), 0);
        EXPECT_NEAR(e.z.imag(), 0.25 * std::log(9.0), 2e-4);
    }
    auto dn = branchcut_estimates(0, kPi / 2, -1, 8, 8);
    ASSERT_EQ(dn.size(), 1u);
    EXPECT_EQ(dn[0].z, std::conj(up[0].z));

    auto ax = branchcut_estimates(0.5, 0.2, +1, 3, 3);
    ASSERT_EQ(ax.size(), 1u);
    EXPECT_EQ(ax[0].string, "cut_axis");
    EXPECT_EQ(ax[0].z.imag(), 0.0);

    std::string note;
    EXPECT_TRUE(branchcut_estimates(2, 0.0, +1, 1, 5, false, &note).empty());
    EXPECT_FALSE(note.empty());
}

TEST(BranchCut, Y0StringAgreesWithRefinedZeros) {
    SolutionSpec s = bessel(0, kPi / 2);
    SweepConfig cfg;
    for (const auto& e : branchcut_estimates(0, kPi / 2, +1, 4, 7)) {
        auto r = refine(s, e.z, cfg, +1);
        ASSERT_TRUE(r.converged);
        EXPECT_LT(std::abs(r.z - e.z), 1e-3) << e.k;
    }
}

TEST(Hankel, BelowCutSwitch) {
    auto h = hankel_belowcut(0, 1, 3);
    ASSERT_EQ(h.size(), 3u);
    for (const auto& e : h) {
        EXPECT_NEAR(e.z.imag(), -kLn2Half, 1e-14);
        EXPECT_EQ(e.string, "cut_below");
    }
    auto third = hankel_belowcut(1.0 / 3, 1, 2);
    ASSERT_EQ(third.size(), 2u);
    EXPECT_EQ(third[0].string, "cut_axis");
    EXPECT_NEAR(third[0].z.imag(), 0, 1e-12);

    std::string note;
    EXPECT_TRUE(hankel_belowcut(0.5, 1, 3, false, &note).empty());
    EXPECT_NE(note.find("next Riemann sheet"), std::string::npos);
    for (double nu : {0.2, 0.8, 1.1, 2.95}) EXPECT_FALSE(hankel_belowcut(nu, 1, 2).empty()) << nu;
    for (double nu : {0.4, 0.6, 1.5, 2.45}) EXPECT_TRUE(hankel_belowcut(nu, 1, 2).empty()) << nu;
}

TEST(Hankel, CrossingAtOneThird) {
    // the string depth log|2 cos(nu pi)|/2 reaches the cut at {nu} = 1/3 and then leaves the sheet
    double d = 1e-3;
    auto before = hankel_belowcut(1.0 / 3 - d, 3, 3);
    ASSERT_EQ(before.size(), 1u);
    EXPECT_NEAR(before[0].z.imag(), -0.5 * std::log(2 * std::cos((1.0 / 3 - d) * kPi)), 1e-14);
    EXPECT_LT(before[0].z.imag(), 0);
    EXPECT_NEAR(hankel_belowcut(1.0 / 3, 3, 3)[0].z.imag(), 0, 1e-12);
    EXPECT_TRUE(hankel_belowcut(1.0 / 3 + d, 3, 3).empty());
    EXPECT_NEAR(hankel_belowcut(2.0 / 3 + d, 3, 3)[0].z.imag(), -0.5 * std::log(std::abs(2 * std::cos((2.0 / 3 + d) * kPi))), 1e-14);
}

TEST(Hankel, H1ZerosBelowTheCut) {
    SolutionSpec s = bessel(0, 0.0, Limit::MinusInf);
    SweepConfig cfg;
    for (const auto& e : hankel_belowcut(0, 3, 5)) {
        auto r = refine(s, e.z, cfg, -1);
        ASSERT_TRUE(r.converged);
        EXPECT_LT(std::abs(r.z - e.z), 2e-2);
        EXPECT_LT(r.z.imag(), 0);
    }
}

TEST(Eye, Functions) {
    EXPECT_NEAR(std::abs(eye_f(1.0)), 0, 1e-15);
    EXPECT_NEAR(eye_g(solve_eye_constant().c), 0, 1e-14);
    double prev = INFINITY;
    for (double y = 1e-6; y < 100; y *= 1.7) {
        double g = eye_g(y);
        EXPECT_LT(g, prev);
        prev = g;
    }
    EXPECT_GT(eye_g(1e-12), 20);
    EXPECT_LT(eye_g(1e6), -1e5);
}

TEST(Eye, AxisCuts) {
    EyeGeometry g = eye_axis_cuts(3, kPi / 6);
    ASSERT_TRUE(g.y_minus);
    EXPECT_NEAR(*g.y_minus, solve_eye_constant().c, 1e-12);
    EXPECT_EQ(g.airy_type_lower, EyeSide::OnBoundary);

    g = eye_axis_cuts(3, 0.0);
    EXPECT_EQ(g.airy_type_lower, EyeSide::None);
    EXPECT_EQ(g.airy_type_upper, EyeSide::None);

    g = eye_axis_cuts(1, kPi / 2);
    ASSERT_TRUE(g.y_plus);
    EXPECT_NEAR(eye_g(*g.y_plus), -kLn2Half, 1e-12);
    EXPECT_NEAR(*g.y_plus, 0.872812830846, 1e-11);
    EXPECT_GT(*g.y_plus, solve_eye_constant().c);
    EXPECT_EQ(g.airy_type_upper, EyeSide::Outside);
    EXPECT_FALSE(g.x0_upper);

    g = eye_axis_cuts(3, 0.3);
    EXPECT_EQ(g.airy_type_lower, EyeSide::Inside);
    ASSERT_TRUE(g.x0_lower);
    EXPECT_GT(*g.x0_lower, 0);
    EXPECT_LT(*g.x0_lower, 1);
    EXPECT_LT(*g.y_minus, solve_eye_constant().c);

    EXPECT_THROW(eye_axis_cuts(0.4, 0.3), DomainError);
}

TEST(Classify, Families) {
    BesselClassification c = classify_bessel(bessel(3, 0.0));
    EXPECT_TRUE(c.pos_axis);
    EXPECT_FALSE(c.cut_above || c.cut_below || c.airy_upper || c.airy_lower);

    c = classify_bessel(bessel(0.2, 0.0, Limit::MinusInf));
    EXPECT_FALSE(c.pos_axis);
    EXPECT_TRUE(c.cut_below && c.airy_lower);
    EXPECT_FALSE(c.cut_above || c.airy_upper);

    c = classify_bessel(bessel(0, kPi / 2));
    EXPECT_TRUE(c.pos_axis && c.cut_above && c.cut_below && c.airy_upper && c.airy_lower);
}

TEST(Alpha, FromBesselZero) {
    EXPECT_LT(std::abs(alpha_from_bessel_zero(0, 2.404825557695773).alpha), 1e-14);
    EXPECT_NEAR(alpha_from_bessel_zero(0, 0.893576966279168).alpha.real(), kPi / 2, 1e-14);
    cplx z0(5, 0.4);
    BesselAlpha a = alpha_from_bessel_zero(1.3, z0);
    double scale = std::abs(cyl_eval(1.3, z0, CylKind::Y).f);
    EXPECT_LT(std::abs(gen_cyl(1.3, a.alpha, z0, false)), 1e-13 * scale);
    a = alpha_from_bessel_zero(1.3, z0, true);
    EXPECT_LT(std::abs(gen_cyl(1.3, a.alpha, z0, true)), 1e-13 * scale);

}

TEST(Reflection, Spec) {
    SolutionSpec s = reflect_order(bessel(-0.4, 0.2));
    EXPECT_NEAR(s.nu, 0.4, 1e-15);
    EXPECT_NEAR(s.alpha.real(), 0.2 + 0.4 * kPi, 1e-15);
}
