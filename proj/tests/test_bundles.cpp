#include "odl/bundles.hpp"
#include "odl/chow.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace odl;
using namespace odl::oracle;

TEST(Bundles, RankAndDeterminantOfBasicOperations) {
    const auto E = BundleExpr::gen("E", 5);
    EXPECT_EQ(BundleExpr::wedge(2, E).rank(), 10);
    EXPECT_EQ(det_expr(BundleExpr::wedge(2, E)), LineClass::of("E", 4));
    EXPECT_EQ(det_expr(BundleExpr::sym(2, E)), LineClass::of("E", 6));
    EXPECT_EQ(det_expr(BundleExpr::dual(BundleExpr::wedge(3, E))), LineClass::of("E", -6));
    EXPECT_EQ(BundleExpr::schur(Partition{2, 1}, E).rank(), 40);
}

TEST(Bundles, DeterminantOfDualIsInverse) {
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        const auto t = random_tree(rng, 3);
        EXPECT_EQ(det_expr(BundleExpr::dual(t)), -det_expr(t)) << t.sexpr();
    }
}

TEST(Bundles, DoubleDualIsIdentity) {
    const auto e = parse_bundle("(tensor (wedge 2 (gen E 4)) (line L))");
    EXPECT_EQ(BundleExpr::dual(BundleExpr::dual(e)), e);
}

TEST(Bundles, SpinorBundles) {
    const auto L = LineClass::of("L");
    for (int e = 1; e <= 8; ++e) {
        const auto E = BundleExpr::gen("E", e);
        EXPECT_EQ(spinor_bundle(E, L, 1).rank(), 1LL << (e - 1));
        EXPECT_EQ(spinor_bundle(E, L, -1).rank(), 1LL << (e - 1));
    }
    const auto E5 = BundleExpr::gen("E", 5), E6 = BundleExpr::gen("E", 6);
    EXPECT_EQ(det_expr(spinor_bundle(E5, L, 1)), (LineClass{{"E", 8}, {"L", 12}}));
    EXPECT_EQ(det_expr(spinor_bundle(E6, L, 1)), (LineClass{{"E", 16}, {"L", 48}}));
    // S+ = S-* (x) L^2 (x) det E in rank 5
    EXPECT_EQ(det_expr(spinor_bundle(E5, L, 1)), -det_expr(spinor_bundle(E5, L, -1)) + Q(16) * (LineClass{{"L", 2}, {"E", 1}}));
}

TEST(Bundles, SplittingPrincipleOracle) {
    const SplittingOracle oracle;
    const std::vector<long> ea{3, -1}, fa{2, 5, -4};
    const long la = 7;
    const int top = 6;
    const auto ctx = specialised_context({{"E", ea}, {"F", fa}, {"L", {la}}}, top);
    std::mt19937 rng(20240611);
    for (int i = 0; i < 200; ++i) {
        const auto t = random_tree(rng, 3);
        const Roots rs = oracle.roots(t);
        ASSERT_EQ(static_cast<long long>(rs.size()), t.rank()) << t.sexpr();
        // determinant
        Root sum{};
        for (auto& r : rs) sum = add(sum, r);
        ASSERT_EQ(sum[0], sum[1]);
        ASSERT_EQ(sum[2], sum[3]);
        ASSERT_EQ(sum[3], sum[4]);
        EXPECT_EQ(det_expr(t), (LineClass{{"E", sum[0]}, {"F", sum[2]}, {"L", sum[5]}})) << t.sexpr();
        // total Chern class with the roots specialised
        std::vector<Q> c(top + 1, Q(0));
        c[0] = 1;
        for (auto& r : rs) {
            const long v = r[0] * ea[0] + r[1] * ea[1] + r[2] * fa[0] + r[3] * fa[1] + r[4] * fa[2] + r[5] * la;
            for (int d = top; d >= 1; --d) c[static_cast<std::size_t>(d)] += Q(v) * c[static_cast<std::size_t>(d - 1)];
        }
        const auto got = chern_class(t, ctx);
        for (int d = 0; d <= top; ++d) {
            auto it = got.terms().find(Key{d});
            const Q g = it == got.terms().end() ? Q(0) : it->second;
            EXPECT_EQ(g, c[static_cast<std::size_t>(d)]) << t.sexpr() << " c_" << d;
        }
    }
}

TEST(Bundles, ParserRoundTrip) {
    const auto s = parse_space("Gr(2,5)xP3");
    const auto e = parse_bundle("(sum (dual (U 1)) (O 1 0) (copies 2 (O 0 1)) (trivial 1))", &s);
    EXPECT_EQ(e.rank(), 6);
    EXPECT_EQ(resolve_on_space(det_expr(e), s), (LineClass{{"h1", 2}, {"h2", 2}}));
    EXPECT_EQ(parse_bundle(e.sexpr(), &s), e);
}

TEST(Bundles, CanonicalOfSpace) {
    EXPECT_EQ(canonical_of_space(parse_space("P4&(5)")), LineClass{});
    EXPECT_EQ(canonical_of_space(parse_space("Gr(2,5)")), LineClass::of("h1", -5));
    EXPECT_EQ(canonical_of_space(parse_space("P3xP3xP3")), (LineClass{{"h1", -4}, {"h2", -4}, {"h3", -4}}));
    EXPECT_EQ(canonical_of_space(parse_space("IGr(4,9)")), LineClass::of("h1", -6));
}

TEST(Bundles, Errors) {
    EXPECT_THROW(parse_bundle("(frobnicate E)"), Error);
    EXPECT_THROW(parse_bundle("(U 1)"), Error);
    EXPECT_THROW(BundleExpr::minus(BundleExpr::trivial(1), BundleExpr::trivial(2)), Error);
}
