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

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "census.hpp"

namespace negacirc {

/* q-ary entropy H_q(t) = t log_q(q-1) - t log_q(t) - (1-t) log_q(1-t) on
 * [0, (q-1)/q], increasing from exactly 0 to exactly 1 */
inline double entropy_q(std::uint64_t q, double t) {
    if (q < 2) throw std::invalid_argument("entropy_q: q must be at least 2");
    const double top = static_cast<double>(q - 1) / static_cast<double>(q);
    if (!(t >= 0.0) || t > top) throw std::domain_error("entropy_q: t outside [0, (q-1)/q]");
    if (t == 0.0) return 0.0;
    if (t == top) return 1.0;
    const double lq = std::log(static_cast<double>(q));
    return (t * std::log(static_cast<double>(q - 1)) - t * std::log(t) - (1.0 - t) * std::log(1.0 - t)) / lq;
}

struct InverseEntropyResult {
    double value = 0.0;
    int iterations = 0;
    double tolerance = 0.0;
};

/* the t in [0, (q-1)/q] with |H_q(t) - y| <= tol, by bisection */
inline InverseEntropyResult inverse_entropy(std::uint64_t q, double y, double tol = 1e-12) {
    if (q < 2) throw std::invalid_argument("inverse_entropy: q must be at least 2");
    if (!(y >= 0.0) || y > 1.0) throw std::domain_error("inverse_entropy: y outside [0, 1]");
    const double top = static_cast<double>(q - 1) / static_cast<double>(q);
    if (y == 0.0) return {0.0, 0, tol};
    if (y == 1.0) return {top, 0, tol};

    double lo = 0.0, hi = top;
    for (int it = 1; it <= 1000; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double h = entropy_q(q, mid);
        if (std::fabs(h - y) <= tol) return {mid, it, tol};
        (h < y ? lo : hi) = mid;
    }
    throw internal_check_error("inverse_entropy: bisection did not converge");
}

/* relative-distance floor for the self-dual double-block (blocks = 2) and
 * four-block (blocks = 4) families: H_q^(-1)(1/8) and H_q^(-1)(1/16) */
inline double asymptotic_floor(std::uint64_t q, unsigned blocks) {
    if (blocks == 2) return inverse_entropy(q, 0.125).value;
    if (blocks == 4) return inverse_entropy(q, 0.0625).value;
    throw std::invalid_argument("asymptotic_floor: blocks must be 2 or 4");
}

/* rate-1/2 Gilbert-Varshamov relative distance H_q^(-1)(1/2), for scale */
inline double gilbert_varshamov_reference(std::uint64_t q) { return inverse_entropy(q, 0.5).value; }

struct ExpurgationMargin {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::uint64_t n = 0;                  // 2p
    BigInt bound;                          // q^2 (q^((n-2)/4) + 1)
    BigInt codeword_budget;                // q^(n/2)
    std::optional<std::uint64_t> margin;   // largest d with bound * ball(d) < budget
    BigInt lhs;                            // bound * ball(margin), or bound * ball(0) when none
};

/* exact counting slack: how large a weight d still satisfies
 * q^2 (q^((n-2)/4) + 1) * sum_{i=0}^{d} C(n, i) (q-1)^i < q^(n/2) */
inline ExpurgationMargin expurgation_margin(std::uint64_t p, std::uint64_t q) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("expurgation_margin: p must be an odd prime");
    if ((p - 1) % 2 != 0) throw std::invalid_argument("expurgation_margin: p - 1 must be even");

    ExpurgationMargin out;
    out.p = p;
    out.q = q;
    out.n = 2 * p;
    out.bound = containment_bound(p, q);
    out.codeword_budget = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(p));

    BigInt ball = 1;     // sum of C(n, i) (q-1)^i up to the current i
    BigInt binom = 1;    // C(n, i)
    BigInt powq1 = 1;    // (q-1)^i
    BigInt lhs_prev = out.bound * ball;
    if (lhs_prev >= out.codeword_budget) {
        out.margin = std::nullopt;
        out.lhs = lhs_prev;
        return out;
    }
    for (std::uint64_t i = 1; i <= out.n; ++i) {
        binom = binom * BigInt(out.n - i + 1) / BigInt(i);
        powq1 *= BigInt(q - 1);
        ball += binom * powq1;
        const BigInt lhs = out.bound * ball;
        if (lhs >= out.codeword_budget) {
            out.margin = i - 1;
            out.lhs = lhs_prev;
            return out;
        }
        lhs_prev = lhs;
    }
    out.margin = out.n;
    out.lhs = lhs_prev;
    return out;
}

} // namespace negacirc
