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

#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "integers.hpp"
#include "polynomials.hpp"

namespace negacirc {

/* Classifies the factorization of x^(2p) + 1 over F_q.  When p = 3 mod 4,
 * q = 3 mod 4 and q has order p - 1 mod 4p, the polynomial splits into
 * x^2 + 1 and two irreducible factors of degree p - 1, which are either both
 * self-reciprocal or reciprocals of each other; the two cases are told apart
 * by whether the order of q mod p is exactly divisible by 2, equivalently by
 * whether some odd power of q is -1 mod 4p. */

enum class PairClass { kSelfReciprocalPair, kReciprocalPair, kNotApplicable };

inline const char* to_string(PairClass c) {
    switch (c) {
        case PairClass::kSelfReciprocalPair: return "self_reciprocal_pair";
        case PairClass::kReciprocalPair: return "reciprocal_pair";
        case PairClass::kNotApplicable: return "not_applicable";
    }
    return "not_applicable";
}

struct ClassificationChecks {
    bool q_mod4_is3 = false;
    bool p_mod4_is3 = false;
    bool coprime = false;
    bool ord_4p_eq_p_minus_1 = false;
    bool ord_p_mod4_is2 = false;
    bool q_primitive_mod_p = false;
};

struct ClassificationReport {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::uint64_t n = 0; // 2p
    FieldRef field;
    ClassificationChecks checks;
    std::uint64_t ord_p_q = 0;
    std::uint64_t ord_4p_q = 0;
    PairClass pair_class = PairClass::kNotApplicable;
    FactorizationResult factorization;
    GoodIntegerVerdict oddly_good;
    std::uint64_t seed = kDefaultSeed;
};

namespace detail {

/* q must be p0^e for an odd prime p0 */
inline std::pair<std::uint64_t, std::uint64_t> odd_prime_power(std::uint64_t q) {
    if (q < 3) throw std::invalid_argument("classify: q must be an odd prime power");
    const auto fac = factor_u64(q);
    if (fac.size() != 1 || fac[0].first == 2)
        throw std::invalid_argument("classify: q must be an odd prime power");
    return {fac[0].first, static_cast<std::uint64_t>(fac[0].second)};
}

/* the two degree-(p-1) factors in canonical order, after removing x^2 + 1 */
inline std::pair<const Poly*, const Poly*> large_pair(const ClassificationReport& r, const Poly& quad) {
    const Poly* g1 = nullptr;
    const Poly* g2 = nullptr;
    for (const auto& [f, m] : r.factorization.factors) {
        (void)m;
        if (f == quad) continue;
        if (!g1)
            g1 = &f;
        else if (!g2)
            g2 = &f;
    }
    return {g1, g2};
}

} // namespace detail

inline ClassificationReport classify(std::uint64_t p, std::uint64_t q, std::uint64_t seed = kDefaultSeed) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("classify: p must be an odd prime");
    const auto [p0, e] = detail::odd_prime_power(q);
    if (p == p0) throw std::invalid_argument("classify: p and q must be coprime");

    ClassificationReport r;
    r.p = p;
    r.q = q;
    r.n = 2 * p;
    r.seed = seed;
    r.field = make_field(p0, e);

    r.ord_p_q = mult_order(q, p);
    r.ord_4p_q = mult_order(q, 4 * p);
    r.checks.q_mod4_is3 = (q % 4 == 3);
    r.checks.p_mod4_is3 = (p % 4 == 3);
    r.checks.coprime = true; // enforced above
    r.checks.ord_4p_eq_p_minus_1 = (r.ord_4p_q == p - 1);
    r.checks.ord_p_mod4_is2 = (r.ord_p_q % 4 == 2);
    r.checks.q_primitive_mod_p = (r.ord_p_q == p - 1);

    r.factorization = factorize(Poly::x_pow_plus_one(r.field, r.n), seed);
    r.oddly_good = good_integer_verdict(4 * p, q, 1);

    const bool hypotheses = r.checks.q_mod4_is3 && r.checks.p_mod4_is3 && r.checks.ord_4p_eq_p_minus_1;
    if (!hypotheses) {
        r.pair_class = PairClass::kNotApplicable;
        return r;
    }

    // structural shape forced by the hypotheses: x^2 + 1 times two
    // irreducible factors of degree p - 1
    const Poly quad = Poly::from_integers(r.field, {1, 0, 1});
    if (r.factorization.factors.size() != 3)
        throw internal_check_error("classify: expected exactly three irreducible factors");
    bool quad_found = false;
    for (const auto& [f, m] : r.factorization.factors) {
        if (m != 1) throw internal_check_error("classify: repeated factor under squarefree hypotheses");
        if (f == quad)
            quad_found = true;
        else if (f.degree() != static_cast<int>(p - 1))
            throw internal_check_error("classify: unexpected factor degree");
    }
    if (!quad_found) throw internal_check_error("classify: x^2 + 1 is not among the factors");

    r.pair_class = r.checks.ord_p_mod4_is2 ? PairClass::kSelfReciprocalPair : PairClass::kReciprocalPair;

    // the three case indicators must agree; a mismatch is a bug, not an input error
    const bool by_case = (r.pair_class == PairClass::kSelfReciprocalPair);
    if (by_case != r.oddly_good.is_oddly_good || by_case != r.checks.ord_p_mod4_is2)
        throw internal_check_error("classify: case tag, odd witness and order residue disagree");

    auto [g1, g2] = detail::large_pair(r, quad);
    if (!g1 || !g2) throw internal_check_error("classify: missing large factors");
    if (by_case) {
        if (!is_self_reciprocal(*g1) || !is_self_reciprocal(*g2))
            throw internal_check_error("classify: factors are not self-reciprocal in the expected case");
    } else {
        if (reciprocal(*g1) != *g2 || is_self_reciprocal(*g1) || is_self_reciprocal(*g2))
            throw internal_check_error("classify: factors do not form a reciprocal pair in the expected case");
    }
    return r;
}

/* recomputes everything in the report from scratch; returns true when every
 * field matches, otherwise false with one message per discrepancy */
inline bool verify_report(const ClassificationReport& r, std::vector<std::string>* discrepancies = nullptr) {
    std::vector<std::string> local;
    auto flag = [&local](std::string msg) { local.push_back(std::move(msg)); };

    try {
        if (!is_prime(r.p) || r.p == 2) flag("p is not an odd prime");
        const auto [p0, e] = detail::odd_prime_power(r.q);
        if (p0 == r.p) flag("p divides q");
        if (r.n != 2 * r.p) flag("n != 2p");
        const FieldRef field = make_field(p0, e);
        if (!field->same_as(*r.field)) flag("field spec does not match (p0, e)");

        if (mult_order(r.q, r.p) != r.ord_p_q) flag("ord_p(q) mismatch");
        if (mult_order(r.q, 4 * r.p) != r.ord_4p_q) flag("ord_4p(q) mismatch");

        ClassificationChecks c;
        c.q_mod4_is3 = (r.q % 4 == 3);
        c.p_mod4_is3 = (r.p % 4 == 3);
        c.coprime = true;
        c.ord_4p_eq_p_minus_1 = (r.ord_4p_q == r.p - 1);
        c.ord_p_mod4_is2 = (r.ord_p_q % 4 == 2);
        c.q_primitive_mod_p = (r.ord_p_q == r.p - 1);
        if (c.q_mod4_is3 != r.checks.q_mod4_is3) flag("check q_mod4_is3 mismatch");
        if (c.p_mod4_is3 != r.checks.p_mod4_is3) flag("check p_mod4_is3 mismatch");
        if (c.coprime != r.checks.coprime) flag("check coprime mismatch");
        if (c.ord_4p_eq_p_minus_1 != r.checks.ord_4p_eq_p_minus_1) flag("check ord_4p_eq_p_minus_1 mismatch");
        if (c.ord_p_mod4_is2 != r.checks.ord_p_mod4_is2) flag("check ord_p_mod4_is2 mismatch");
        if (c.q_primitive_mod_p != r.checks.q_primitive_mod_p) flag("check q_primitive_mod_p mismatch");

        const GoodIntegerVerdict v = good_integer_verdict(4 * r.p, r.q, 1);
        if (v.is_good != r.oddly_good.is_good || v.witness_k != r.oddly_good.witness_k ||
            v.is_oddly_good != r.oddly_good.is_oddly_good || v.odd_witness != r.oddly_good.odd_witness ||
            v.s != r.oddly_good.s || v.l1 != r.oddly_good.l1 || v.l2 != r.oddly_good.l2)
            flag("odd-witness verdict mismatch");

        // factor list: sorted, irreducible, multiplicities positive, exact product
        const auto& fs = r.factorization.factors;
        for (std::size_t i = 0; i + 1 < fs.size(); ++i)
            if (!poly_lex_less(fs[i].first, fs[i + 1].first)) flag("factors are not in canonical order");
        Poly prod(field, {r.factorization.leading.index()});
        for (const auto& [f, m] : fs) {
            if (m == 0) flag("factor with zero multiplicity");
            if (!f.is_monic()) flag("factor is not monic");
            if (!is_irreducible(f)) flag("factor is not irreducible");
            for (std::uint64_t i = 0; i < m; ++i) prod = prod * f;
        }
        if (prod != Poly::x_pow_plus_one(field, r.n)) flag("factor product does not equal x^n + 1");

        const bool hypotheses = c.q_mod4_is3 && c.p_mod4_is3 && c.ord_4p_eq_p_minus_1;
        const PairClass expected = !hypotheses ? PairClass::kNotApplicable
                                   : c.ord_p_mod4_is2 ? PairClass::kSelfReciprocalPair
                                                      : PairClass::kReciprocalPair;
        if (expected != r.pair_class) flag("case tag mismatch");

        if (hypotheses) {
            const Poly quad = Poly::from_integers(field, {1, 0, 1});
            auto [g1, g2] = detail::large_pair(r, quad);
            if (!g1 || !g2) {
                flag("large factors missing");
            } else if (r.pair_class == PairClass::kSelfReciprocalPair) {
                if (!is_self_reciprocal(*g1) || !is_self_reciprocal(*g2)) flag("expected self-reciprocal factors");
            } else if (r.pair_class == PairClass::kReciprocalPair) {
                if (reciprocal(*g1) != *g2) flag("expected a reciprocal factor pair");
            }
        }
    } catch (const std::exception& ex) {
        flag(std::string("verification raised: ") + ex.what());
    }

    if (discrepancies) *discrepancies = local;
    return local.empty();
}

} // namespace negacirc
