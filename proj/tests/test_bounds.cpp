/*
 * Copyright 2026 The negacirc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>
#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include <negacirc/bounds.hpp>

namespace negacirc {
namespace {

using u64 = std::uint64_t;

/* sum_{i=0}^{d} C(n, i) (q-1)^i with a Pascal-triangle row, all exact */
BigInt ball_volume(u64 n, u64 q, u64 d) {
    std::vector<BigInt> binom(n + 1, 0);
    binom[0] = 1;
    for (u64 row = 1; row <= n; ++row)
        for (u64 i = row; i > 0; --i) binom[i] += binom[i - 1];
    BigInt total = 0, powq1 = 1;
    for (u64 i = 0; i <= d; ++i) {
        total += binom[i] * powq1;
        powq1 *= q - 1;
    }
    return total;
}

TEST(Entropy, ExactEndpoints) {
    for (u64 q : {2u, 3u, 11u}) {
        const double top = static_cast<double>(q - 1) / static_cast<double>(q);
        EXPECT_EQ(entropy_q(q, 0.0), 0.0);
        EXPECT_EQ(entropy_q(q, top), 1.0);
    }
}

TEST(Entropy, StrictlyIncreasingOnTheDomain) {
    for (u64 q : {2u, 3u, 11u}) {
        const double top = static_cast<double>(q - 1) / static_cast<double>(q);
        double prev = 0.0;
        for (int k = 1; k <= 200; ++k) {
            const double h = entropy_q(q, top * k / 200.0);
            EXPECT_GT(h, prev) << "q=" << q << " k=" << k;
            prev = h;
        }
        EXPECT_EQ(prev, 1.0);
    }
}

TEST(Entropy, DomainErrors) {
    EXPECT_THROW(entropy_q(1, 0.1), std::invalid_argument);
    EXPECT_THROW(entropy_q(3, -0.001), std::domain_error);
    EXPECT_THROW(entropy_q(3, 0.667), std::domain_error); // above 2/3
    EXPECT_THROW(entropy_q(3, std::nan("")), std::domain_error);
}

TEST(InverseEntropy, RoundTripsWithinTolerance) {
    for (u64 q : {2u, 3u, 11u}) {
        for (int k = 1; k < 100; ++k) {
            const double y = k / 100.0;
            const InverseEntropyResult r = inverse_entropy(q, y);
            EXPECT_LE(std::fabs(entropy_q(q, r.value) - y), 1e-12) << "q=" << q << " y=" << y;
        }
        EXPECT_EQ(inverse_entropy(q, 0.0).value, 0.0);
        EXPECT_EQ(inverse_entropy(q, 1.0).value, static_cast<double>(q - 1) / static_cast<double>(q));
    }
    EXPECT_THROW(inverse_entropy(3, 1.5), std::domain_error);
    EXPECT_THROW(inverse_entropy(3, -0.1), std::domain_error);
    EXPECT_THROW(inverse_entropy(1, 0.5), std::invalid_argument);
}

TEST(InverseEntropy, PinnedWindowForTernaryOneEighth) {
    const double v = inverse_entropy(3, 0.125).value;
    EXPECT_GT(v, 0.025);
    EXPECT_LT(v, 0.026);
}

TEST(AsymptoticFloor, OrderedBelowTheGilbertVarshamovReference) {
    for (u64 q : {3u, 7u, 11u}) {
        const double four = asymptotic_floor(q, 4);
        const double two = asymptotic_floor(q, 2);
        const double gv = gilbert_varshamov_reference(q);
        EXPECT_GT(four, 0.0);
        EXPECT_LT(four, two); // H^(-1)(1/16) < H^(-1)(1/8)
        EXPECT_LT(two, gv);   // both fall short of the rate-1/2 GV radius
    }
    EXPECT_THROW(asymptotic_floor(3, 3), std::invalid_argument);
}

TEST(Expurgation, HonestFailureAtTheTinyLength) {
    // at (p, q) = (3, 11) the cap already exceeds the codeword budget at
    // weight zero, so no distance is certified
    const ExpurgationMargin m = expurgation_margin(3, 11);
    EXPECT_EQ(m.n, 6u);
    EXPECT_EQ(m.bound, BigInt(1452));
    EXPECT_EQ(m.codeword_budget, BigInt(1331)); // 11^3
    EXPECT_FALSE(m.margin.has_value());
    EXPECT_EQ(m.lhs, BigInt(1452));
}

TEST(Expurgation, MarginZeroAt7And3) {
    const ExpurgationMargin m = expurgation_margin(7, 3);
    EXPECT_EQ(m.bound, BigInt(252));
    EXPECT_EQ(m.codeword_budget, BigInt(2187)); // 3^7
    EXPECT_EQ(m.margin, std::optional<u64>(0)); // 252 < 2187 but 252 * 29 is not
    EXPECT_EQ(m.lhs, BigInt(252));
}

TEST(Expurgation, DefiningInequalityOnAGrid) {
    for (u64 p : {3u, 7u, 11u, 19u, 23u}) {
        for (u64 q : {3u, 7u, 11u, 27u}) {
            const ExpurgationMargin m = expurgation_margin(p, q);
            const BigInt budget = m.codeword_budget;
            if (!m.margin) {
                EXPECT_GE(m.bound * ball_volume(m.n, q, 0), budget);
                EXPECT_EQ(m.lhs, m.bound);
                continue;
            }
            const u64 d = *m.margin;
            EXPECT_EQ(m.lhs, m.bound * ball_volume(m.n, q, d));
            EXPECT_LT(m.lhs, budget) << "p=" << p << " q=" << q;
            if (d < m.n) EXPECT_GE(m.bound * ball_volume(m.n, q, d + 1), budget);
        }
    }
}

TEST(Expurgation, BallVolumeIsMonotone) {
    for (u64 d = 0; d + 1 <= 14; ++d) EXPECT_LT(ball_volume(14, 3, d), ball_volume(14, 3, d + 1));
}

TEST(Expurgation, Rejections) {
    EXPECT_THROW(expurgation_margin(1, 3), std::invalid_argument);
    EXPECT_THROW(expurgation_margin(4, 3), std::invalid_argument);
}

} // namespace
} // namespace negacirc
