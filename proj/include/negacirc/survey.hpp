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

#include "classifier.hpp"

namespace negacirc {

/* One prime p in a scan for parameters where x^(2p) + 1 splits into
 * x^2 + 1 and two degree-(p-1) factors.  All flags are derived from
 * multiplicative orders alone, so the scan stays cheap; the case tag and
 * the odd-witness flag are cross-audited against each other on every
 * applicable row. */
struct SurveyRow {
    std::uint64_t p = 0;
    std::uint64_t ord_p = 0;   // order of q mod p
    std::uint64_t ord_4p = 0;  // order of q mod 4p
    bool p_mod4_is3 = false;
    bool ord_4p_eq_p_minus_1 = false;
    bool applies = false; // all hypotheses hold, including q = 3 mod 4
    PairClass pair_class = PairClass::kNotApplicable;
    bool oddly_good = false; // some odd k has q^k = -1 mod 4p
    bool q_primitive = false;
};

struct SurveyReport {
    std::uint64_t q = 0;
    std::uint64_t p_max = 0;
    std::uint64_t q_mod4 = 0;
    std::vector<SurveyRow> rows; // odd primes p <= p_max with p not dividing q
    std::uint64_t scanned = 0;
    std::uint64_t applicable = 0;
    std::uint64_t self_reciprocal_rows = 0;
    std::uint64_t reciprocal_rows = 0;
    std::uint64_t primitive_rows = 0; // applicable rows with ord_p(q) = p - 1
};

inline constexpr std::uint64_t kSurveyPrimeCap = 1000000;

inline SurveyReport survey(std::uint64_t q, std::uint64_t p_max) {
    detail::odd_prime_power(q); // validates q
    if (p_max > kSurveyPrimeCap)
        throw feasibility_error("survey: p_max " + std::to_string(p_max) + " exceeds the cap of " +
                                std::to_string(kSurveyPrimeCap));

    SurveyReport rep;
    rep.q = q;
    rep.p_max = p_max;
    rep.q_mod4 = q % 4;

    std::vector<bool> composite(p_max + 1, false);
    for (std::uint64_t i = 2; i * i <= p_max; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= p_max; j += i) composite[j] = true;

    for (std::uint64_t p = 3; p <= p_max; p += 2) {
        if (composite[p] || q % p == 0) continue;
        ++rep.scanned;

        SurveyRow row;
        row.p = p;
        row.ord_p = mult_order(q, p);
        // 4p = 4 * p with the factors coprime, so the order is the lcm
        const std::uint64_t ord4 = q % 4 == 1 ? 1 : 2;
        row.ord_4p = std::lcm(ord4, row.ord_p);
        if (mult_order(q, 4 * p) != row.ord_4p)
            throw internal_check_error("survey: lcm shortcut disagrees with the direct order");

        row.p_mod4_is3 = (p % 4 == 3);
        row.ord_4p_eq_p_minus_1 = (row.ord_4p == p - 1);
        row.applies = row.p_mod4_is3 && row.ord_4p_eq_p_minus_1 && (q % 4 == 3);
        row.q_primitive = (row.ord_p == p - 1);
        row.oddly_good =
            row.ord_4p % 4 == 2 && powmod(q % (4 * p), row.ord_4p / 2, 4 * p) == 4 * p - 1;

        if (row.applies) {
            row.pair_class =
                row.ord_p % 4 == 2 ? PairClass::kSelfReciprocalPair : PairClass::kReciprocalPair;
            const bool by_case = (row.pair_class == PairClass::kSelfReciprocalPair);
            if (by_case != row.oddly_good || by_case != (row.ord_p % 4 == 2))
                throw internal_check_error("survey: case tag, odd witness and order residue disagree");
            ++rep.applicable;
            if (by_case)
                ++rep.self_reciprocal_rows;
            else
                ++rep.reciprocal_rows;
            if (row.q_primitive) ++rep.primitive_rows;
        }
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace negacirc
