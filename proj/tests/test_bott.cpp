#include "odl/bott.hpp"
#include "odl/chow.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace odl;
using namespace odl::oracle;

TEST(Bott, LineBundlesOnProjectiveSpace) {
    for (int n = 1; n <= 4; ++n)
        for (int d = -10; d <= 10; ++d) {
            auto r = bott_gl(pn_weight(std::vector<int>(static_cast<std::size_t>(n), 0), -d));
            if (d >= 0) {
                ASSERT_FALSE(r.vanishing);
                EXPECT_EQ(r.degree, 0);
                EXPECT_EQ(r.module_dim, binomial(n + d, n));
            } else if (d <= -n - 1) {
                ASSERT_FALSE(r.vanishing);
                EXPECT_EQ(r.degree, n);
                EXPECT_EQ(r.module_dim, binomial(-d - 1, n));
            } else {
                EXPECT_TRUE(r.vanishing);
            }
        }
}

TEST(Bott, SerreDualityOnProjectiveSpace) {
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::vector<int>> as;
        std::vector<int> cur;
        sequences(n, -2, 2, cur, as);
        for (auto& a : as)
            for (int b = -6; b <= 6; ++b) {
                std::vector<int> dual(a.rbegin(), a.rend());
                for (auto& x : dual) x = -x;
                const auto r = bott_gl(pn_weight(a, b));
                const auto s = bott_gl(pn_weight(dual, -b + n + 1));
                ASSERT_EQ(r.vanishing, s.vanishing);
                if (r.vanishing) continue;
                EXPECT_EQ(r.degree + s.degree, n);
                EXPECT_EQ(r.module_dim, s.module_dim);
            }
    }
}

TEST(Bott, RiemannRochOnProjectiveSpace) {
    for (int n = 1; n <= 4; ++n) {
        const auto sc = chow_ring(parse_space("P" + std::to_string(n)));
        std::vector<std::vector<int>> as;
        std::vector<int> cur;
        sequences(n, 0, 2, cur, as);
        for (auto& a : as)
            for (int b = -4; b <= 4; ++b) {
                const auto r = bott_gl(pn_weight(a, b));
                const Z euler = r.vanishing ? Z(0) : (r.degree % 2 == 0 ? r.module_dim : Z(-r.module_dim));
                const auto v = parse_bundle(bundle_text(a, b), &sc.space);
                EXPECT_EQ(hrr_euler(sc, v), Q(euler)) << "P" << n << " " << bundle_text(a, b);
            }
    }
}

TEST(Bott, GrassmannianCotangentCohomology) {
    // H^1(Gr(2,4), U (x) Q*) = H^{1,1} is one-dimensional.
    auto r = bott_gl({0, -1, 1, 0});
    ASSERT_FALSE(r.vanishing);
    EXPECT_EQ(r.degree, 1);
    EXPECT_EQ(r.module_dim, 1);
}

TEST(Bott, WeymanVanishing) {
    for (auto [d1, d2] : {std::pair{3, 4}, std::pair{4, 6}, std::pair{4, 5}}) {
        const auto rep = verify_weyman_vanishing(d1, d2, 8);
        EXPECT_TRUE(rep.passed) << d1 << "," << d2;
        EXPECT_EQ(rep.levels.size(), 8u);
    }
}

TEST(Bott, OrthogonalReadingOfOddFormFails) {
    const auto rep = verify_weyman_vanishing(4, 5, 1, OddRule::Orthogonal);
    EXPECT_FALSE(rep.passed);
    EXPECT_EQ(rep.family, IsoFamily::B);
}

TEST(Bott, IsotropicAuditClosedForms) {
    for (auto fam : {IsoFamily::B, IsoFamily::C, IsoFamily::D})
        for (int d = 2; d <= 4; ++d)
            for (int s = 1; s <= d; ++s)
                for (auto& lam : partitions_in_box(s, 3)) {
                    const auto b = bott_isotropic(lam, s, d, fam);
                    if (b.result.vanishing) continue;
                    EXPECT_EQ(b.audit.q1, b.audit.q1_predicted);
                    EXPECT_EQ(b.audit.q2, b.audit.q2_predicted);
                }
}

TEST(Bott, RejectsOutOfRangeWeyman) {
    EXPECT_THROW(verify_weyman_vanishing(3, 7, 2), Error);
}
