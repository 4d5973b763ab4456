#include "odl/chow.hpp"
#include "odl/odl_catalog.hpp"
#include "odl/resolutions.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <bit>

using namespace odl;
using namespace odl::oracle;

namespace {

/// Gaussian binomial [n choose k]_q as a coefficient list.
std::vector<long long> gaussian_binomial(int n, int k) {
    // count partitions in a k x (n - k) box by size
    std::vector<long long> c(static_cast<std::size_t>(k * (n - k)) + 1, 0);
    std::function<void(int, int, int)> go = [&](int rows, int maxp, int s) {
        if (rows == 0) {
            ++c[static_cast<std::size_t>(s)];
            return;
        }
        for (int x = 0; x <= maxp; ++x) go(rows - 1, x, s + x);
    };
    go(k, n - k, 0);
    return c;
}

Q t_coefficient(const ChowClass& c, int d) {
    auto it = c.terms().find(Key{d});
    return it == c.terms().end() ? Q(0) : it->second;
}

}  // namespace

TEST(Chow, GrassmannianBettiNumbers) {
    const auto b = GrassRing(2, 4).basis();
    std::vector<std::size_t> sizes;
    for (auto& x : b) sizes.push_back(x.size());
    EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 1, 2, 1, 1}));
    for (int n = 2; n <= 7; ++n)
        for (int k = 1; k < n; ++k) {
            const auto g = gaussian_binomial(n, k);
            const auto bb = GrassRing(k, n).basis();
            ASSERT_EQ(bb.size(), g.size());
            for (std::size_t d = 0; d < g.size(); ++d) EXPECT_EQ(static_cast<long long>(bb[d].size()), g[d]);
        }
}

TEST(Chow, PoincareDualityUnimodular) {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k) EXPECT_EQ(first_non_unimodular_degree(std::make_shared<GrassRing>(k, n)), -1) << k << "," << n;
    for (int m = 1; m <= 6; ++m) EXPECT_EQ(first_non_unimodular_degree(std::make_shared<QuadricRing>(m)), -1) << "Q" << m;
}

TEST(Chow, QuadricThreefoldPresentation) {
    const auto b = QuadricRing(3).basis();
    for (auto& x : b) EXPECT_EQ(x.size(), 1u);
    const auto sc = chow_ring(parse_space("Q3"));
    const auto h = sc.hyperplane(1);
    EXPECT_EQ(integrate(h * h * h), 2);
}

TEST(Chow, ProjectivePlane) {
    const auto sc = chow_ring(parse_space("P2"));
    const auto c = chern_class(parse_bundle("(sum (O 1) (O 1))", &sc.space), sc.ctx);
    const auto h = sc.hyperplane(1);
    EXPECT_EQ(c, ChowClass(sc.ctx.ring, Q(1)) + Q(2) * h + h * h);
    EXPECT_EQ(integrate(h * h), 1);
}

TEST(Chow, EulerCharacteristicsOfHypersurfaces) {
    EXPECT_EQ(euler_char_zero_locus(chow_ring(parse_space("P2")), parse_bundle("(O 3)")), 0);
    EXPECT_EQ(euler_char_zero_locus(chow_ring(parse_space("P3")), parse_bundle("(O 4)")), 24);
    EXPECT_EQ(euler_char_zero_locus(chow_ring(parse_space("P4")), parse_bundle("(O 3)")), -6);
    EXPECT_EQ(euler_char_zero_locus(chow_ring(parse_space("P4")), parse_bundle("(O 5)")), -200);
    EXPECT_EQ(holomorphic_euler_zero_locus(chow_ring(parse_space("P3")), parse_bundle("(O 4)")), 2);
    EXPECT_EQ(holomorphic_euler_zero_locus(chow_ring(parse_space("P5")), parse_bundle("(O 6)")), 2);
}

TEST(Chow, SlicedSpaceMatchesBundleZeroLocus) {
    // The quintic as a slice of P4 versus the zero locus of O(5).
    const auto sliced = chow_ring(parse_space("P4&(5)"));
    EXPECT_EQ(euler_char_zero_locus(sliced, BundleExpr::trivial(0)), -200);
}

TEST(Chow, SingularPointsOfSegreFourfold) {
    const auto sc = chow_ring(parse_space("Gr(2,6)"));
    const auto uu = parse_bundle("(tensor (dual U) (dual U))", &sc.space);
    const auto c4 = chern_class(uu, sc.ctx).component(4);
    EXPECT_EQ(integrate(c4 * c4), 32);
}

TEST(Chow, ChernCharacterAdditiveAndMultiplicative) {
    const auto sc = chow_ring(parse_space("Gr(2,5)xP2"));
    const auto a = parse_bundle("(sum (dual (U 1)) (O 1 1))", &sc.space);
    const auto b = parse_bundle("(tensor (Q 1) (O 0 1))", &sc.space);
    const auto cha = chern_character(a, sc.ctx), chb = chern_character(b, sc.ctx);
    EXPECT_EQ(chern_character(BundleExpr::sum({a, b}), sc.ctx), cha + chb);
    EXPECT_EQ(chern_character(BundleExpr::tensor({a, b}), sc.ctx), cha * chb);
    const auto w = BundleExpr::wedge(2, a);
    EXPECT_EQ(chern_class(w, sc.ctx).component(1), Q(static_cast<long>(a.rank() - 1)) * chern_class(a, sc.ctx).component(1));
}

TEST(Chow, EagonNorthcottClassIsPorteous) {
    for (int e = 1; e <= 4; ++e)
        for (int f = 1; f <= e; ++f) {
            const auto fs = formal_space({{"E", e}, {"F", f}}, {}, e - f + 1);
            const auto E = BundleExpr::gen("E", e), F = BundleExpr::gen("F", f);
            const auto res = eagon_northcott(e, f);
            const std::vector<FactorRealization> real{gl_realization(E, false, BundleExpr::dual(E)), gl_realization(F, true, F)};
            const auto cls = degeneracy_class(relative_instance(res, real), res.codim, fs.ctx);
            EXPECT_EQ(cls, thom_porteous(E, F, f - 1, fs.ctx)) << e << "x" << f;
        }
}

TEST(Chow, SquareDeterminantalHypersurface) {
    const auto fs = formal_space({{"E", 3}, {"F", 3}}, {}, 1);
    const auto c = case_info("det(3,2)");
    const auto cls = degeneracy_class(relative_instance(*c.resolution, c.realizations(), {}, c.constraints), 1, fs.ctx);
    EXPECT_EQ(fs.polynomial(cls), "-e1 + f1");
}

TEST(Chow, PorteousMatchesLocalisation) {
    const std::vector<std::vector<long>> roots{{1, 4, -2, 7}, {3, -5, 2, 11}, {-1, 6, 9, 2}};
    const std::vector<std::vector<long>> froots{{5, -3, 8, 13}, {0, 1, -7, 4}, {2, -9, 6, 3}};
    for (int e = 1; e <= 4; ++e)
        for (int f = 1; f <= 4; ++f)
            for (int r = 0; r < std::min(e, f); ++r)
                for (std::size_t s = 0; s < roots.size(); ++s) {
                    std::vector<long> a(roots[s].begin(), roots[s].begin() + e), b(froots[s].begin(), froots[s].begin() + f);
                    const int codim = (e - r) * (f - r);
                    const auto ctx = specialised_context({{"E", a}, {"F", b}}, codim);
                    const auto cls = thom_porteous(BundleExpr::gen("E", e), BundleExpr::gen("F", f), r, ctx);
                    EXPECT_EQ(t_coefficient(cls, codim), porteous_localisation(a, b, r)) << e << "," << f << "," << r;
                }
}

TEST(Chow, PorteousSmallCases) {
    // 2 x 3 maps of rank <= 1: codimension 2, class c2(F - E).
    const auto fs = formal_space({{"E", 2}, {"F", 3}}, {}, 4);
    const auto E = BundleExpr::gen("E", 2), F = BundleExpr::gen("F", 3);
    const auto c = chern_class(F, fs.ctx) * series_inverse(chern_class(E, fs.ctx));
    EXPECT_EQ(thom_porteous(E, F, 1, fs.ctx), c.component(2));
    // 3 x 3 maps of rank <= 1: codimension 4, det [[c2, c3], [c1, c2]].
    const auto gs = formal_space({{"E", 3}, {"F", 3}}, {}, 4);
    const auto E3 = BundleExpr::gen("E", 3), F3 = BundleExpr::gen("F", 3);
    const auto d = chern_class(F3, gs.ctx) * series_inverse(chern_class(E3, gs.ctx));
    EXPECT_EQ(thom_porteous(E3, F3, 1, gs.ctx), d.component(2) * d.component(2) - d.component(3) * d.component(1));
}

TEST(Chow, UnsupportedSpacesAreErrors) {
    EXPECT_THROW(chow_ring(parse_space("IGr(3,9)")), Error);
    EXPECT_THROW(euler_char_zero_locus(chow_ring(parse_space("P2")), parse_bundle("(sum (O 1) (O 1) (O 1))")), Error);
}
