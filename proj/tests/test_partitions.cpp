#include "odl/lie_core.hpp"
#include "odl/partitions.hpp"

#include <gtest/gtest.h>

using namespace odl;

namespace {

/// dim S_lambda C^n through the A_{n-1} Weyl formula on the labels lambda_i - lambda_{i+1}.
Z weyl_oracle(const Partition& p, int n) {
    if (p.length() > n) return 0;
    if (n == 1) return 1;
    std::vector<int> lab;
    for (int i = 0; i + 1 < n; ++i) lab.push_back(p[static_cast<std::size_t>(i)] - p[static_cast<std::size_t>(i + 1)]);
    return weyl_dim(make_type(Family::A, n - 1), lab);
}

}  // namespace

TEST(Partitions, ConjugateIsInvolution) {
    for (int n = 0; n <= 10; ++n)
        for (auto& p : partitions_of(n, n, n)) {
            EXPECT_EQ(conjugate(conjugate(p)), p);
            EXPECT_EQ(conjugate(p).size(), p.size());
        }
}

TEST(Partitions, SchurDimMatchesWeylFormula) {
    for (int n = 1; n <= 6; ++n)
        for (int s = 0; s <= 7; ++s)
            for (auto& p : partitions_of(s, n, s)) EXPECT_EQ(schur_dim(p, n), weyl_oracle(p, n)) << p.str() << " n=" << n;
    EXPECT_EQ(schur_dim(Partition{2, 2, 2, 1, 1, 1}, 6), 20);
}

TEST(Partitions, LittlewoodRichardsonDimensionIdentity) {
    const int n = 4;
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 3; ++b)
            for (auto& p : partitions_of(a, n, a))
                for (auto& q : partitions_of(b, n, b)) {
                    Z rhs = 0;
                    for (auto& [nu, c] : lr_product(p, q, n)) rhs += Z(static_cast<long>(c)) * schur_dim(nu, n);
                    EXPECT_EQ(schur_dim(p, n) * schur_dim(q, n), rhs) << p.str() << " * " << q.str();
                }
}

TEST(Partitions, LittlewoodRichardsonKnownValue) {
    // c^nu_{lambda mu}, arguments (lambda, mu, nu)
    EXPECT_EQ(lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}), 2);
    EXPECT_EQ(lr_coefficient(Partition{1}, Partition{1, 1}, Partition{2, 1}), 1);
    EXPECT_EQ(lr_coefficient(Partition{1, 1}, Partition{1}, Partition{3}), 0);
}

TEST(Partitions, CauchyRankIdentity) {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int j = 0; j <= a * b; ++j) {
                Z sum = 0;
                for (auto& t : cauchy_exterior(j, a, b)) sum += schur_dim(t.lambda, a) * schur_dim(t.lambda_conj, b);
                EXPECT_EQ(sum, binomial(a * b, j)) << a << "x" << b << " j=" << j;
            }
}

TEST(Partitions, BoxCount) {
    EXPECT_EQ(partitions_in_box(2, 2).size(), 6u);
    EXPECT_EQ(partitions_in_box(3, 3).size(), 20u);
}
