#include <gtest/gtest.h>

#include <cmath>

#include "zerokit/solver.hpp"
#include "zerokit/verify.hpp"

using namespace zk;

namespace {

SolutionSpec airy(cplx alpha) {
    SolutionSpec s;
    s.alpha = alpha;
    return s;
}

SolutionSpec bessel(double nu, cplx alpha) {
    SolutionSpec s;
    s.family = Family::Bessel;
    s.nu = nu;
    s.alpha = alpha;
    return s;
}

std::vector<cplx> square(cplx c, double h) {
    return {c + cplx(-h, -h), c + cplx(h, -h), c + cplx(h, h), c + cplx(-h, h)};
}

}  // namespace

TEST(Winding, Polynomials) {
    cplx c(0.3, -0.2);
    EXPECT_EQ(winding_number([c](cplx z) { return z - c; }, square(0, 1)), 1);
    EXPECT_EQ(winding_number([c](cplx z) { return (z - c) * (z - c) * (z - c); }, square(0, 1)), 3);
    EXPECT_EQ(winding_number([c](cplx z) { return z - c; }, square(cplx(5, 5), 1)), 0);
    AnalyticFn f = [c](cplx z) { return FnValue{std::pow(z - c, 5), 5.0 * std::pow(z - c, 4)}; };
    EXPECT_EQ(winding_number(f, square(0, 1)), 5);
}

TEST(Winding, FastPhaseNearTheContour) {
    // a zero 1e-4 outside the edge: sampling alone would alias the phase
    cplx c(0, -1 - 1e-4);
    AnalyticFn f = [c](cplx z) { return FnValue{z - c, 1.0}; };
    EXPECT_EQ(winding_number(f, square(0, 1)), 0);
    AnalyticFn g = [](cplx z) { return FnValue{z - cplx(0, -1 + 1e-4), 1.0}; };
    EXPECT_EQ(winding_number(g, square(0, 1)), 1);
}

TEST(Winding, ZeroOnTheContour) {
    EXPECT_THROW(winding_number([](cplx z) { return z - 1.0; }, square(0, 1)), BoundaryZeroError);
    // the rectangle counter nudges past it
    Rectangle r{{-1, -1}, {1, 1}, 1e-3};
    EXPECT_EQ(argument_principle_count([](cplx z) { return z - 1.0; }, r), 1);
}

TEST(Count, AiryBoxes) {
    EXPECT_EQ(count_zeros(airy(0.0), Rectangle{{-3, -0.5}, {-2, 0.5}}).count, 1);
    EXPECT_EQ(count_zeros(airy(0.0), Rectangle{{1, 0}, {2, 1}}).count, 0);
    EXPECT_EQ(count_zeros(airy(0.0), Rectangle{{-12, -1}, {0, 1}}).count, 9);
}

TEST(Count, J0Box) {
    EXPECT_EQ(count_zeros(bessel(0, 0.0), Rectangle{{0.5, -1}, {10, 1}}).count, 3);
}

TEST(Count, Additivity) {
    SolutionSpec s = airy(cplx(0.3, 0.2));
    int whole = count_zeros(s, Rectangle{{-8.1, -8.1}, {8.1, 8.1}}).count;
    int parts = 0;
    for (auto [lo, hi] : {std::pair{cplx(-8.1, -8.1), cplx(0.013, 0.017)},
                          std::pair{cplx(0.013, -8.1), cplx(8.1, 0.017)},
                          std::pair{cplx(-8.1, 0.017), cplx(0.013, 8.1)},
                          std::pair{cplx(0.013, 0.017), cplx(8.1, 8.1)}})
        parts += count_zeros(s, Rectangle{lo, hi}).count;
    EXPECT_EQ(whole, parts);
    EXPECT_GT(whole, 10);
}

TEST(Count, ConjugateRectangles) {
    for (SolutionSpec s : {airy(0.4), bessel(1.3, 0.7), bessel(0, kPi / 2)}) {
        Rectangle up{{-9, 0.2}, {9, 6}}, dn{{-9, -6}, {9, -0.2}};
        EXPECT_EQ(count_zeros(s, up).count, count_zeros(s, dn).count);
    }
}

TEST(Count, BesselPiecesAroundTheCut) {
    SolutionSpec s = bessel(0, kPi / 2);
    auto pieces = count_pieces(s, Rectangle{{-10, -2}, {10, 2}});
    ASSERT_EQ(pieces.size(), 2u);
    EXPECT_EQ(pieces[0].side, +1);
    EXPECT_EQ(pieces[1].side, -1);

    EXPECT_EQ(count_pieces(s, Rectangle{{1, -2}, {10, 2}}).size(), 1u);
    EXPECT_EQ(count_pieces(s, Rectangle{{-10, 0.5}, {10, 2}}).size(), 1u);
    EXPECT_THROW(count_pieces(s, Rectangle{{-10, -2}, {10, 0.0}}), DomainError);
    EXPECT_THROW(count_pieces(s, Rectangle{{-10, 0.0}, {10, 2}}), DomainError);

    Rectangle r{{-10, -2}, {10, 2}};
    EXPECT_FALSE(in_count_region(s, r, cplx(0, 0.0005)));
    EXPECT_FALSE(in_count_region(s, r, cplx(-3, -0.0005)));
    EXPECT_TRUE(in_count_region(s, r, cplx(-3, 0.0)));
    EXPECT_TRUE(in_count_region(s, r, cplx(3, -0.0005)));
    EXPECT_FALSE(in_count_region(s, r, cplx(11, 0)));
}

TEST(Residual, TargetsAndCertificates) {
    SolutionSpec s = airy(0.0);
    const double a1 = -2.338107410459767;
    EXPECT_LT(zero_residual(s, a1).residual, 1e-15);
    std::vector<Zero> zs{{a1, 0, "neg_axis", 1}, {a1 + 1e-6, 0, "neg_axis", 2}};
    auto cert = residual_certify(s, zs);
    ASSERT_EQ(cert.size(), 2u);
    EXPECT_FALSE(cert[0].flagged);
    EXPECT_TRUE(cert[1].flagged);
    EXPECT_NEAR(cert[1].newton_step, 1e-6, 1e-9);
    EXPECT_NEAR(cert[0].nn_distance, 1e-6, 1e-12);
    EXPECT_TRUE(residual_certify(s, {}).empty());
    std::vector<Zero> one{{a1, 0, "neg_axis", 1}};
    EXPECT_TRUE(std::isinf(residual_certify(s, one)[0].nn_distance));

    SolutionSpec d = airy(0.0);
    d.deriv = true;
    EXPECT_LT(std::abs(target_value(d, -1.018792971647471)), 1e-15);
    FnValue p = target_pair(d, 2.0);
    EXPECT_LT(std::abs(p.df - 2.0 * target_value(airy(0.0), 2.0)), 1e-15);
}

TEST(Count, SolverAgreesOnMixedSpecs) {
    Rectangle r{{-9, -2.5}, {9, 2.5}};
    for (SolutionSpec s : {bessel(2.3, cplx(0.4, 0.3)), bessel(0.7, 1.1), bessel(4, kPi / 2)}) {
        SweepConfig cfg;
        cfg.region = r;
        auto rep = compute_all_zeros(s, cfg);
        auto cnt = count_zeros(s, r);
        int found = 0;
        for (const auto& z : rep.zeros) found += in_count_region(s, cnt.used, z.z);
        EXPECT_EQ(found, cnt.count) << s.nu;
    }
}
