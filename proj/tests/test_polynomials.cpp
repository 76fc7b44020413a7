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
#include <functional>
#include <vector>

#include <gtest/gtest.h>

#include <negacirc/polynomials.hpp>

namespace negacirc {
namespace {

using u64 = std::uint64_t;

Poly random_poly(const FieldRef& F, int max_degree, Rng& rng) {
    std::vector<u64> idx(rng.below(static_cast<u64>(max_degree) + 2));
    for (u64& v : idx) v = rng.below(F->order());
    return Poly(F, std::move(idx)); // constructor trims leading zeros
}

/* every monic polynomial of the given degree, ascending coefficient order */
void each_monic(const FieldRef& F, std::size_t deg, const std::function<void(const Poly&)>& fn) {
    const u64 q = F->order();
    std::vector<u64> idx(deg + 1, 0);
    idx[deg] = 1;
    while (true) {
        fn(Poly(F, idx));
        std::size_t i = 0;
        while (i < deg && ++idx[i] == q) idx[i++] = 0;
        if (i == deg) return;
    }
}

/* trial division: irreducible iff no monic divisor of degree 1..d/2 */
bool naive_is_irreducible(const Poly& f) {
    const std::size_t d = static_cast<std::size_t>(f.degree());
    if (d == 1) return true;
    bool reducible = false;
    for (std::size_t k = 1; 2 * k <= d && !reducible; ++k)
        each_monic(f.field(), k, [&](const Poly& g) {
            if (!reducible && (f % g).is_zero()) reducible = true;
        });
    return !reducible;
}

TEST(PolyBasics, TrimsAndReportsDegree) {
    const FieldRef F = make_field(3, 1);
    EXPECT_EQ(Poly(F, {1, 2, 0, 0}).degree(), 1);
    EXPECT_EQ(Poly(F, {0, 0}).degree(), -1);
    EXPECT_TRUE(Poly(F).is_zero());
    EXPECT_EQ(Poly::from_integers(F, {-1, 4}).indices(), (std::vector<u64>{2, 1}));
    EXPECT_EQ(Poly::x_pow_plus_one(F, 4).indices(), (std::vector<u64>{1, 0, 0, 0, 1}));
    EXPECT_EQ(Poly::x_pow_minus_one(F, 2).indices(), (std::vector<u64>{2, 0, 1}));
    EXPECT_TRUE(Poly::x(F).is_monic());
    EXPECT_EQ(poly_weight(Poly::from_integers(F, {1, 0, 2, 0, 1})), 3u);
    EXPECT_EQ(poly_weight(Poly(F)), 0u);
}

TEST(PolyArithmetic, RingLawsOnRandomTriples) {
    for (auto [p0, e] : {std::pair<u64, u64>{3, 1}, {11, 1}, {3, 2}}) {
        const FieldRef F = make_field(p0, e);
        Rng rng(101 + p0 + e);
        for (int i = 0; i < 200; ++i) {
            const Poly a = random_poly(F, 6, rng), b = random_poly(F, 6, rng), c = random_poly(F, 6, rng);
            EXPECT_EQ(a + b, b + a);
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ((a + b) * c, a * c + b * c);
            EXPECT_EQ(a - a, Poly(F));
            EXPECT_EQ((a * b) * c, a * (b * c));
        }
    }
}

TEST(Division, QuotientRemainderIdentity) {
    const FieldRef F = make_field(11, 1);
    Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        const Poly a = random_poly(F, 9, rng);
        Poly b = random_poly(F, 5, rng);
        if (b.is_zero()) b = Poly::x(F);
        const auto [q, r] = divrem(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
    }
}

TEST(Division, Rejections) {
    const FieldRef F = make_field(3, 1);
    EXPECT_THROW(divrem(Poly::x(F), Poly(F)), std::domain_error);
    // non-exact division refuses rather than discarding the remainder
    EXPECT_THROW(Poly::from_integers(F, {1, 1}) / Poly::from_integers(F, {0, 1}), std::domain_error);
    const FieldRef G = make_field(3, 2);
    EXPECT_THROW(divrem(Poly::x(F), Poly::x(G)), std::invalid_argument);
}

TEST(Gcd, BezoutIdentityOnRandomPairs) {
    const FieldRef F = make_field(3, 2);
    Rng rng(17);
    for (int i = 0; i < 300; ++i) {
        const Poly a = random_poly(F, 7, rng), b = random_poly(F, 7, rng);
        Poly g(F), s(F), t(F);
        poly_ext_gcd(a, b, g, s, t);
        EXPECT_EQ(s * a + t * b, g);
        EXPECT_EQ(poly_gcd(a, b), g);
        if (!g.is_zero()) {
            EXPECT_TRUE(g.is_monic());
            if (!a.is_zero()) EXPECT_TRUE((a % g).is_zero());
            if (!b.is_zero()) EXPECT_TRUE((b % g).is_zero());
        } else {
            EXPECT_TRUE(a.is_zero());
            EXPECT_TRUE(b.is_zero());
        }
    }
}

TEST(Gcd, KnownCommonFactor) {
    const FieldRef F = make_field(5, 1);
    const Poly f = Poly::from_integers(F, {1, 1});           // x + 1
    const Poly a = f * Poly::from_integers(F, {2, 0, 1});    // (x+1)(x^2+2)
    const Poly b = f * Poly::from_integers(F, {3, 1});       // (x+1)(x+3)
    EXPECT_EQ(poly_gcd(a, b), f);
}

TEST(Powmod, MatchesRepeatedMultiplication) {
    const FieldRef F = make_field(11, 1);
    const Poly mod = Poly::from_integers(F, {1, 0, 0, 1}); // x^3 + 1
    Rng rng(23);
    for (int i = 0; i < 50; ++i) {
        const Poly base = random_poly(F, 4, rng);
        const u64 e = rng.below(40);
        Poly expect = Poly(F, {1});
        for (u64 k = 0; k < e; ++k) expect = (expect * base) % mod;
        EXPECT_EQ(poly_powmod(base, e, mod), expect);
        EXPECT_EQ(poly_powmod(base, BigInt(e), mod), expect);
    }
    // a big-integer exponent exercised through the order-6 cycle of x mod x^3+1
    const Poly x = Poly::x(F);
    EXPECT_EQ(poly_powmod(x, u64{6}, mod), Poly(F, {1}));
    const BigInt huge = BigInt(1) << 70;
    EXPECT_EQ(poly_powmod(x, huge, mod), poly_powmod(x, static_cast<u64>(huge % 6), mod));
}

TEST(Reciprocal, InvolutionOnMonicAndDetection) {
    const FieldRef F = make_field(11, 1);
    Rng rng(29);
    for (int i = 0; i < 200; ++i) {
        Poly f = random_poly(F, 6, rng);
        if (f.is_zero() || f.coefficient(0).is_zero()) continue; // needs f(0) != 0
        EXPECT_EQ(reciprocal(reciprocal(f)), f.monic());
    }
    EXPECT_TRUE(is_self_reciprocal(Poly::from_integers(F, {1, 0, 1})));
    EXPECT_TRUE(is_self_reciprocal(Poly::from_integers(F, {1, 5, 1})));
    EXPECT_FALSE(is_self_reciprocal(Poly::from_integers(F, {1, 0, 6, 0, 4, 0, 1})));
    // the two sextic factors above x^2+1 over F_11 at n = 14 are mutual reciprocals
    const Poly g1 = Poly::from_integers(F, {1, 0, 6, 0, 4, 0, 1});
    const Poly g2 = Poly::from_integers(F, {1, 0, 4, 0, 6, 0, 1});
    EXPECT_EQ(reciprocal(g1), g2);
    EXPECT_EQ(reciprocal(g2), g1);
    EXPECT_THROW(reciprocal(Poly::from_integers(F, {0, 1})), std::invalid_argument);
}

TEST(Irreducibility, AgreesWithTrialDivision) {
    // every monic polynomial of degree <= 4 over F_3 and <= 3 over F_5
    for (auto [p0, dmax] : {std::pair<u64, std::size_t>{3, 4}, {5, 3}}) {
        const FieldRef F = make_field(p0, 1);
        for (std::size_t d = 1; d <= dmax; ++d)
            each_monic(F, d, [&](const Poly& f) {
                ASSERT_EQ(is_irreducible(f), naive_is_irreducible(f)) << poly_to_text(f);
            });
    }
}

TEST(Irreducibility, QuadraticCountMatchesClosedForm) {
    // exactly (q^2 - q)/2 monic irreducible quadratics over F_q
    for (u64 q : {3u, 5u, 7u}) {
        const FieldRef F = make_field(q, 1);
        u64 count = 0;
        each_monic(F, 2, [&](const Poly& f) {
            if (is_irreducible(f)) ++count;
        });
        EXPECT_EQ(count, (q * q - q) / 2) << "q=" << q;
    }
}

TEST(Irreducibility, RejectsConstants) {
    const FieldRef F = make_field(3, 1);
    EXPECT_THROW(is_irreducible(Poly(F, {1})), std::invalid_argument);
    EXPECT_THROW(is_irreducible(Poly(F)), std::invalid_argument);
}

TEST(Factorize, ReconstructsInputWithIrreducibleParts) {
    for (auto [p0, e] : {std::pair<u64, u64>{3, 1}, {11, 1}, {3, 2}}) {
        const FieldRef F = make_field(p0, e);
        Rng rng(43 + p0);
        for (int i = 0; i < 40; ++i) {
            Poly f = random_poly(F, 8, rng);
            if (f.degree() < 1) continue;
            const FactorizationResult res = factorize(f);
            Poly prod(F, {res.leading.index()});
            for (const auto& [g, m] : res.factors) {
                EXPECT_TRUE(g.is_monic());
                EXPECT_TRUE(is_irreducible(g));
                for (u64 k = 0; k < m; ++k) prod = prod * g;
            }
            EXPECT_EQ(prod, f);
            for (std::size_t k = 1; k < res.factors.size(); ++k)
                EXPECT_TRUE(poly_lex_less(res.factors[k - 1].first, res.factors[k].first) ||
                            res.factors[k - 1].first.degree() < res.factors[k].first.degree());
        }
    }
}

TEST(Factorize, RepeatedRootMultiplicity) {
    const FieldRef F = make_field(3, 1);
    // x^3 + 1 = (x + 1)^3 in characteristic 3
    const FactorizationResult res = factorize(Poly::x_pow_plus_one(F, 3));
    ASSERT_EQ(res.factors.size(), 1u);
    EXPECT_EQ(res.factors[0].first, Poly::from_integers(F, {1, 1}));
    EXPECT_EQ(res.factors[0].second, 3u);
}

TEST(Factorize, SeedIndependentResult) {
    const FieldRef F = make_field(11, 1);
    const Poly f = Poly::x_pow_plus_one(F, 12);
    const FactorizationResult a = factorize(f, 1);
    const FactorizationResult b = factorize(f, 999);
    ASSERT_EQ(a.factors.size(), b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        EXPECT_EQ(a.factors[i].first, b.factors[i].first);
        EXPECT_EQ(a.factors[i].second, b.factors[i].second);
    }
}

TEST(Cyclotomic, ProductOverDivisorsIsXPowRMinusOne) {
    for (u64 p0 : {3u, 11u}) {
        const FieldRef F = make_field(p0, 1);
        for (u64 r = 1; r <= 30; ++r) {
            if (r % p0 == 0) continue; // defined only away from the characteristic
            Poly prod(F, {1});
            for (u64 d = 1; d <= r; ++d)
                if (r % d == 0) prod = prod * cyclotomic(d, F);
            EXPECT_EQ(prod, Poly::x_pow_minus_one(F, r)) << "r=" << r << " p=" << p0;
        }
    }
}

TEST(Cyclotomic, SplitsXPow2pPlusOne) {
    // x^(2p) + 1 = Phi_4(x) * Phi_{4p}(x) for odd primes p away from q
    for (auto [p, q] : {std::pair<u64, u64>{11, 3}, {3, 11}, {7, 3}, {3, 7}}) {
        const FieldRef F = make_field(q, 1);
        EXPECT_EQ(cyclotomic(4, F) * cyclotomic(4 * p, F), Poly::x_pow_plus_one(F, 2 * p));
    }
}

TEST(Cyclotomic, RejectsMultiplesOfCharacteristic) {
    const FieldRef F = make_field(3, 1);
    EXPECT_THROW(cyclotomic(6, F), std::invalid_argument);
    EXPECT_THROW(cyclotomic(0, F), std::invalid_argument);
}

TEST(Text, RoundTripsAndRejectsMalformed) {
    const FieldRef F = make_field(11, 1);
    Rng rng(51);
    for (int i = 0; i < 100; ++i) {
        const Poly f = random_poly(F, 8, rng);
        EXPECT_EQ(parse_poly(F, poly_to_text(f)), f);
    }
    EXPECT_EQ(poly_to_text(Poly(F)), "0");
    EXPECT_EQ(poly_to_text(Poly::from_integers(F, {1, 0, 1})), "1,0,1");
    const FieldRef G = make_field(3, 2);
    const Poly g = Poly(G, {0, 4, 8});
    EXPECT_EQ(parse_poly(G, poly_to_text(g)), g); // extension coefficients use ';'
    EXPECT_THROW(parse_poly(F, "1,,2"), std::invalid_argument);
    EXPECT_THROW(parse_poly(F, "1,x"), std::invalid_argument);
}

TEST(LexOrder, OrdersByDegreeThenCoefficients) {
    const FieldRef F = make_field(3, 1);
    const Poly a = Poly::from_integers(F, {2, 1});       // x + 2
    const Poly b = Poly::from_integers(F, {0, 0, 1});    // x^2
    const Poly c = Poly::from_integers(F, {1, 0, 1});    // x^2 + 1
    EXPECT_TRUE(poly_lex_less(a, b));
    EXPECT_TRUE(poly_lex_less(b, c));
    EXPECT_FALSE(poly_lex_less(c, b));
    EXPECT_FALSE(poly_lex_less(a, a));
}

} // namespace
} // namespace negacirc
