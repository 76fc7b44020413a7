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

#include <cstdint>
#include <map>
#include <vector>

#include <gtest/gtest.h>

#include <negacirc/fields.hpp>

namespace negacirc {
namespace {

using u64 = std::uint64_t;

/* the three field axioms worth checking mechanically, on index arithmetic */
void check_axioms_sampled(const FieldRef& F, int rounds, u64 seed) {
    Rng rng(seed);
    const u64 q = F->order();
    for (int i = 0; i < rounds; ++i) {
        const u64 a = rng.below(q), b = rng.below(q), c = rng.below(q);
        EXPECT_EQ(F->idx_add(a, b), F->idx_add(b, a));
        EXPECT_EQ(F->idx_mul(a, b), F->idx_mul(b, a));
        EXPECT_EQ(F->idx_add(F->idx_add(a, b), c), F->idx_add(a, F->idx_add(b, c)));
        EXPECT_EQ(F->idx_mul(F->idx_mul(a, b), c), F->idx_mul(a, F->idx_mul(b, c)));
        EXPECT_EQ(F->idx_mul(a, F->idx_add(b, c)), F->idx_add(F->idx_mul(a, b), F->idx_mul(a, c)));
        EXPECT_EQ(F->idx_add(a, F->idx_neg(a)), 0u);
        if (a != 0) EXPECT_EQ(F->idx_mul(a, F->idx_inv(a)), 1u);
        EXPECT_EQ(F->idx_mul(a, 1), a);
        EXPECT_EQ(F->idx_mul(a, 0), 0u);
    }
}

/* index arithmetic (tables or reduction rows) against FieldElement residue
 * arithmetic, which recomputes from the modulus every time */
void cross_check_elementwise(const FieldRef& F, int rounds, u64 seed) {
    Rng rng(seed);
    const u64 q = F->order();
    for (int i = 0; i < rounds; ++i) {
        const u64 a = rng.below(q), b = rng.below(q);
        const FieldElement x = F->element_at(a), y = F->element_at(b);
        EXPECT_EQ(F->idx_add(a, b), (x + y).index());
        EXPECT_EQ(F->idx_sub(a, b), (x - y).index());
        EXPECT_EQ(F->idx_mul(a, b), (x * y).index());
        if (b != 0) EXPECT_EQ(F->idx_inv(b), y.inverse().index());
    }
}

TEST(MakeField, BasicParameters) {
    const FieldRef F = make_field(11, 1);
    EXPECT_EQ(F->order(), 11u);
    EXPECT_EQ(F->characteristic(), 11u);
    EXPECT_EQ(F->degree(), 1u);
    EXPECT_TRUE(F->modulus().empty()); // prime fields carry no modulus

    const FieldRef G = make_field(3, 6);
    EXPECT_EQ(G->order(), 729u);
    EXPECT_EQ(G->degree(), 6u);
    EXPECT_EQ(G->modulus().size(), 7u);
}

TEST(MakeField, Rejections) {
    EXPECT_THROW(make_field(4, 1), std::invalid_argument);
    EXPECT_THROW(make_field(1, 1), std::invalid_argument);
    EXPECT_THROW(make_field(0, 2), std::invalid_argument);
    EXPECT_THROW(make_field(3, 0), std::invalid_argument);
}

TEST(MakeField, SameAsDistinguishesFields) {
    const FieldRef a = make_field(3, 2), b = make_field(3, 2), c = make_field(3, 1), d = make_field(11, 1);
    EXPECT_TRUE(a->same_as(*b));
    EXPECT_FALSE(a->same_as(*c));
    EXPECT_FALSE(c->same_as(*d));
}

TEST(MakeField, PinnedModuli) {
    // lowest monic irreducible in the deterministic search order
    const std::vector<u64> quad{1, 0, 1}; // x^2 + 1
    EXPECT_EQ(make_field(3, 2)->modulus(), quad);
    EXPECT_EQ(make_field(7, 2)->modulus(), quad);
    EXPECT_EQ(make_field(11, 2)->modulus(), quad);
    const std::vector<u64> sextic{1, 0, 0, 0, 1, 1, 1}; // 1 + x^4 + x^5 + x^6
    EXPECT_EQ(make_field(3, 6)->modulus(), sextic);
}

TEST(FieldAxioms, ExhaustiveOnSmallFields) {
    for (auto [p0, e] : {std::pair<u64, u64>{3, 2}, {3, 3}, {5, 2}, {7, 1}}) {
        const FieldRef F = make_field(p0, e);
        const u64 q = F->order();
        for (u64 a = 0; a < q; ++a) {
            EXPECT_EQ(F->idx_add(a, F->idx_neg(a)), 0u);
            if (a != 0) EXPECT_EQ(F->idx_mul(a, F->idx_inv(a)), 1u);
            for (u64 b = 0; b < q; ++b) {
                EXPECT_EQ(F->idx_add(a, b), F->idx_add(b, a));
                EXPECT_EQ(F->idx_mul(a, b), F->idx_mul(b, a));
            }
        }
    }
}

TEST(FieldAxioms, SampledOnLargerFields) {
    check_axioms_sampled(make_field(3, 6), 500, 11);   // full tables
    check_axioms_sampled(make_field(3, 7), 500, 12);   // log tables (2187)
    check_axioms_sampled(make_field(11, 4), 500, 13);  // log tables (14641)
    check_axioms_sampled(make_field(11, 6), 500, 14);  // generic path (1771561)
    check_axioms_sampled(make_field(101, 3), 500, 15); // generic path (1030301)
}

TEST(IndexArithmetic, MatchesResidueArithmetic) {
    // the index routines use precomputed tables; FieldElement recomputes
    // through polynomial reduction, so agreement cross-checks both
    cross_check_elementwise(make_field(3, 2), 200, 21);
    cross_check_elementwise(make_field(3, 6), 2000, 22);
    cross_check_elementwise(make_field(3, 7), 2000, 23);
    cross_check_elementwise(make_field(11, 2), 2000, 24);
    cross_check_elementwise(make_field(11, 6), 2000, 25);
}

TEST(IndexArithmetic, ExhaustiveCrossCheckOnF729) {
    const FieldRef F = make_field(3, 6);
    for (u64 a = 0; a < 729; ++a) {
        const FieldElement x = F->element_at(a);
        for (u64 b = 0; b < 729; b += 7) { // stride keeps this under a second
            const FieldElement y = F->element_at(b);
            ASSERT_EQ(F->idx_mul(a, b), (x * y).index());
        }
    }
}

TEST(Packing, RoundTripsAllIndices) {
    const FieldRef F = make_field(5, 3);
    for (u64 t = 0; t < F->order(); ++t) EXPECT_EQ(F->element_at(t).index(), t);
    EXPECT_THROW(F->element_at(F->order()), std::invalid_argument);
}

TEST(Elements, ConstructorsAndIdentities) {
    const FieldRef F = make_field(7, 2);
    EXPECT_TRUE(F->zero().is_zero());
    EXPECT_EQ(F->one().index(), 1u);
    EXPECT_EQ(F->from_integer(10).index(), 3u); // 10 mod 7
    EXPECT_EQ((F->one() + F->zero()), F->one());
    EXPECT_THROW(F->zero().inverse(), std::domain_error);
}

TEST(Elements, MixedFieldOperandsRejected) {
    const FieldRef F = make_field(3, 2), G = make_field(3, 3);
    EXPECT_THROW(F->one() + G->one(), std::invalid_argument);
}

TEST(Frobenius, FixesBaseFieldAndIsAdditive) {
    const FieldRef F = make_field(3, 6);
    Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        const FieldElement x = F->element_at(rng.below(F->order()));
        const FieldElement y = F->element_at(rng.below(F->order()));
        EXPECT_EQ(frobenius(x + y, 3, 1), frobenius(x, 3, 1) + frobenius(y, 3, 1));
        EXPECT_EQ(frobenius(x * y, 3, 1), frobenius(x, 3, 1) * frobenius(y, 3, 1));
        EXPECT_EQ(frobenius(x, 3, 6), x); // full degree returns to the identity
    }
    for (u64 c = 0; c < 3; ++c) {
        const FieldElement x = F->from_integer(c);
        EXPECT_EQ(frobenius(x, 3, 1), x);
    }
}

TEST(Frobenius, PowerEqualsIteratedBase) {
    const FieldRef F = make_field(7, 2);
    for (u64 t = 0; t < F->order(); ++t) {
        const FieldElement x = F->element_at(t);
        EXPECT_EQ(frobenius(x, 7, 2), frobenius(frobenius(x, 7, 1), 7, 1));
    }
}

TEST(ElementOrder, MultisetMatchesDivisorCounts) {
    // in a cyclic group of size q-1 there are phi(d) elements of order d
    const FieldRef F = make_field(7, 2);
    std::map<u64, u64> by_order;
    for (u64 t = 1; t < F->order(); ++t) ++by_order[element_order(F->element_at(t))];
    u64 total = 0;
    for (const auto& [d, cnt] : by_order) {
        EXPECT_EQ((F->order() - 1) % d, 0u) << "order " << d << " must divide q-1";
        total += cnt;
    }
    EXPECT_EQ(total, F->order() - 1);
    EXPECT_EQ(by_order[1], 1u);
    EXPECT_EQ(by_order[2], 1u);
    EXPECT_EQ(by_order[48], 16u); // phi(48)
}

TEST(ElementOrder, ZeroRejected) {
    const FieldRef F = make_field(3, 1);
    EXPECT_THROW(element_order(F->zero()), std::invalid_argument);
}

TEST(ElementText, RoundTripsBothSeparators) {
    const FieldRef F = make_field(3, 4);
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        const FieldElement x = F->element_at(rng.below(F->order()));
        EXPECT_EQ(parse_element(F, element_to_text(x, ','), ','), x);
        EXPECT_EQ(parse_element(F, element_to_text(x, ';'), ';'), x);
    }
    const FieldRef P = make_field(11, 1);
    EXPECT_EQ(element_to_text(P->from_integer(7)), "7");
    EXPECT_EQ(parse_element(P, "7", ','), P->from_integer(7));
}

TEST(ElementText, MalformedRejected) {
    const FieldRef F = make_field(3, 2);
    EXPECT_THROW(parse_element(F, "1,2,3", ','), std::invalid_argument); // too many residues
    EXPECT_THROW(parse_element(F, "x,1", ','), std::invalid_argument);
    EXPECT_THROW(parse_element(F, "", ','), std::invalid_argument);
}

TEST(TableTiers, ReportedSizesMatchThresholds) {
    EXPECT_TRUE(make_field(3, 6)->has_full_tables());    // 729 <= 1024
    EXPECT_FALSE(make_field(3, 7)->has_full_tables());   // 2187 > 1024
    EXPECT_TRUE(make_field(3, 7)->has_log_tables());     // 2187 <= 65536
    EXPECT_FALSE(make_field(11, 6)->has_log_tables());   // 1771561 > 65536
}

} // namespace
} // namespace negacirc
