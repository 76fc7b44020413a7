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

#include <algorithm>
#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "integers.hpp"
#include "support.hpp"

namespace negacirc {

/* Exact arithmetic in F_{p^e}.  Elements are coefficient vectors of length e
 * with entries reduced mod p, taken against a single deterministic modulus
 * per (p, e): the lexicographically smallest monic irreducible polynomial of
 * degree e, coefficient sequences compared ascending-degree and entry-wise.
 * Small fields carry full index-coded multiplication tables, fields up to
 * 2^16 elements carry generator exp/log tables; larger fields fall back to
 * direct coefficient arithmetic. */

namespace detail {

/* polynomial helpers over F_p with coefficients in [0, p); vectors ascending
 * by degree, normalized (no trailing zeros) */

using PP = std::vector<std::uint64_t>;

inline void pp_trim(PP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PP pp_mul(const PP& a, const PP& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PP c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    pp_trim(c);
    return c;
}

inline std::uint64_t pp_modinv_scalar(std::uint64_t a, std::uint64_t p) {
    return powmod(a, p - 2, p);
}

/* remainder of a modulo monic-or-not b */
inline PP pp_mod(PP a, const PP& b, std::uint64_t p) {
    if (b.empty()) throw std::invalid_argument("pp_mod: division by zero polynomial");
    const std::uint64_t linv = pp_modinv_scalar(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t c = (a.back() * linv) % p;
        if (c != 0) {
            const std::size_t off = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) {
                const std::uint64_t sub = (c * b[j]) % p;
                a[off + j] = (a[off + j] + p - sub) % p;
            }
        }
        a.pop_back();
        pp_trim(a);
        if (a.size() < b.size()) break;
    }
    pp_trim(a);
    return a;
}

inline PP pp_mulmod(const PP& a, const PP& b, const PP& f, std::uint64_t p) {
    return pp_mod(pp_mul(a, b, p), f, p);
}

inline PP pp_powmod(PP base, std::uint64_t e, const PP& f, std::uint64_t p) {
    PP r{1};
    base = pp_mod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) r = pp_mulmod(r, base, f, p);
        base = pp_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

inline PP pp_gcd(PP a, PP b, std::uint64_t p) {
    while (!b.empty()) {
        PP r = pp_mod(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        const std::uint64_t linv = pp_modinv_scalar(a.back(), p);
        for (auto& c : a) c = (c * linv) % p;
    }
    return a;
}

/* extended Euclid: returns monic g = gcd(a, b) and s with s*a = g mod b */
inline void pp_ext_gcd(PP a, PP b, std::uint64_t p, PP& g, PP& s_out) {
    PP s0{1}, s1{};
    while (!b.empty()) {
        // quotient of a by b
        PP q;
        PP rem = a;
        const std::uint64_t linv = pp_modinv_scalar(b.back(), p);
        if (rem.size() >= b.size()) q.assign(rem.size() - b.size() + 1, 0);
        while (rem.size() >= b.size()) {
            const std::uint64_t c = (rem.back() * linv) % p;
            const std::size_t off = rem.size() - b.size();
            q[off] = c;
            for (std::size_t j = 0; j < b.size(); ++j) {
                const std::uint64_t sub = (c * b[j]) % p;
                rem[off + j] = (rem[off + j] + p - sub) % p;
            }
            rem.pop_back();
            pp_trim(rem);
        }
        PP s2 = s0; // s2 = s0 - q*s1
        {
            PP qs = pp_mul(q, s1, p);
            if (qs.size() > s2.size()) s2.resize(qs.size(), 0);
            for (std::size_t i = 0; i < qs.size(); ++i) s2[i] = (s2[i] + p - qs[i]) % p;
            pp_trim(s2);
        }
        a = std::move(b);
        b = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (!a.empty() && a.back() != 1) {
        const std::uint64_t linv = pp_modinv_scalar(a.back(), p);
        for (auto& c : a) c = (c * linv) % p;
        for (auto& c : s0) c = (c * linv) % p;
    }
    g = std::move(a);
    s_out = std::move(s0);
}

/* Rabin test over the prime field: f irreducible of degree d iff
 * x^(p^d) = x mod f and gcd(x^(p^(d/r)) - x, f) = 1 for every prime r | d */
inline bool pp_is_irreducible(const PP& f, std::uint64_t p) {
    if (f.size() < 2) return false;
    const std::size_t d = f.size() - 1;
    if (d == 1) return true;
    std::vector<std::size_t> checkpoints;
    for (const auto& [r, e] : factor_u64(d)) {
        (void)e;
        checkpoints.push_back(d / r);
    }
    std::sort(checkpoints.begin(), checkpoints.end());
    PP t{0, 1}; // x
    std::size_t next = 0;
    for (std::size_t i = 1; i <= d; ++i) {
        t = pp_powmod(std::move(t), p, f, p);
        if (next < checkpoints.size() && i == checkpoints[next]) {
            PP diff = t;
            if (diff.size() < 2) diff.resize(2, 0);
            diff[1] = (diff[1] + p - 1) % p;
            pp_trim(diff);
            PP g = pp_gcd(diff, f, p);
            if (g.size() != 1) return false;
            ++next;
        }
    }
    PP diff = t;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    pp_trim(diff);
    return diff.empty();
}

} // namespace detail

class FieldSpec;
using FieldRef = std::shared_ptr<const FieldSpec>;

class FieldElement;
FieldRef make_field(std::uint64_t p0, std::uint64_t e);

class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
  public:
    static constexpr std::uint64_t kFullTableMax = 1024;  // full q x q tables
    static constexpr std::uint64_t kLogTableMax = 65536;  // generator exp/log tables

    std::uint64_t characteristic() const { return p0_; }
    std::uint64_t degree() const { return e_; }
    std::uint64_t order() const { return q_; }

    /* monic modulus, residues ascending including the leading 1; empty when e = 1 */
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    bool same_as(const FieldSpec& other) const {
        return this == &other || (p0_ == other.p0_ && e_ == other.e_ && modulus_ == other.modulus_);
    }

    /* index <-> coefficient-vector coding: index = sum c_i * p0^i */
    std::uint64_t pack(const std::uint32_t* c) const {
        std::uint64_t idx = 0;
        for (std::size_t i = e_; i-- > 0;) idx = idx * p0_ + c[i];
        return idx;
    }
    void unpack(std::uint64_t idx, std::uint32_t* out) const {
        for (std::size_t i = 0; i < e_; ++i) {
            out[i] = static_cast<std::uint32_t>(idx % p0_);
            idx /= p0_;
        }
    }

    bool has_full_tables() const { return !mul_tab_.empty(); }
    bool has_log_tables() const { return !log_tab_.empty(); }

    std::uint64_t idx_add(std::uint64_t a, std::uint64_t b) const {
        if (has_full_tables()) return add_tab_[a * q_ + b];
        return idx_add_generic(a, b);
    }
    std::uint64_t idx_neg(std::uint64_t a) const {
        if (!neg_tab_.empty()) return neg_tab_[a];
        return idx_neg_generic(a);
    }
    std::uint64_t idx_sub(std::uint64_t a, std::uint64_t b) const { return idx_add(a, idx_neg(b)); }
    std::uint64_t idx_mul(std::uint64_t a, std::uint64_t b) const {
        if (has_full_tables()) return mul_tab_[a * q_ + b];
        if (has_log_tables()) {
            if (a == 0 || b == 0) return 0;
            return exp_tab_[log_tab_[a] + log_tab_[b]];
        }
        return idx_mul_generic(a, b);
    }
    std::uint64_t idx_inv(std::uint64_t a) const {
        if (a == 0) throw std::domain_error("field inverse of zero");
        if (!inv_tab_.empty()) return inv_tab_[a];
        if (has_log_tables()) return exp_tab_[(q_ - 1) - log_tab_[a]];
        return idx_inv_generic(a);
    }

    /* raw table access for scan kernels; null when unavailable */
    const std::uint16_t* mul_table() const { return mul_tab_.empty() ? nullptr : mul_tab_.data(); }
    const std::uint16_t* add_table() const { return add_tab_.empty() ? nullptr : add_tab_.data(); }
    const std::uint16_t* neg_table() const { return neg_tab_.empty() ? nullptr : neg_tab_.data(); }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_integer(std::uint64_t c) const;
    FieldElement element(std::vector<std::uint32_t> residues) const;
    FieldElement element_at(std::uint64_t idx) const;

  private:
    friend FieldRef make_field(std::uint64_t, std::uint64_t);

    FieldSpec(std::uint64_t p0, std::uint64_t e) : p0_(p0), e_(e) {
        if (!is_prime(p0)) throw std::invalid_argument("make_field: characteristic must be prime");
        if (p0 >= (std::uint64_t{1} << 31)) throw std::invalid_argument("make_field: characteristic too large");
        if (e == 0) throw std::invalid_argument("make_field: extension degree must be positive");
        q_ = 1;
        for (std::uint64_t i = 0; i < e; ++i) {
            if (q_ > (std::uint64_t{1} << 62) / p0)
                throw std::invalid_argument("make_field: field order exceeds 2^62");
            q_ *= p0;
        }
        if (e > 1) {
            find_modulus();
            build_reduction_rows();
        }
        if (q_ <= kFullTableMax)
            build_full_tables();
        else if (q_ <= kLogTableMax)
            build_log_tables();
    }

    /* first irreducible monic polynomial of degree e in entry-wise
     * ascending-degree lexicographic order: (c_0, ..., c_{e-1}) with c_0
     * most significant */
    void find_modulus() {
        detail::PP f(e_ + 1, 0);
        f[e_] = 1;
        std::vector<std::uint64_t> c(e_, 0);
        c[0] = 1; // constant term 0 would make x a divisor
        while (true) {
            for (std::size_t i = 0; i < e_; ++i) f[i] = c[i];
            if (detail::pp_is_irreducible(f, p0_)) {
                modulus_.assign(f.begin(), f.end());
                return;
            }
            // next sequence: last entry fastest
            std::size_t i = e_;
            while (i-- > 0) {
                if (++c[i] < p0_) break;
                c[i] = 0;
                if (i == 0) throw internal_check_error("make_field: no irreducible modulus found");
            }
        }
    }

    void build_reduction_rows() {
        // red_rows_[k] = coefficients of x^(e+k) mod modulus, k = 0..e-2
        red_rows_.assign(e_ - 1, std::vector<std::uint64_t>(e_, 0));
        std::vector<std::uint64_t> cur(e_);
        for (std::size_t j = 0; j < e_; ++j) cur[j] = (p0_ - modulus_[j]) % p0_; // x^e mod f
        red_rows_[0] = cur;
        for (std::size_t k = 1; k + 1 < e_; ++k) {
            std::vector<std::uint64_t> nxt(e_, 0);
            const std::uint64_t top = cur[e_ - 1];
            for (std::size_t j = e_ - 1; j > 0; --j) nxt[j] = cur[j - 1];
            nxt[0] = 0;
            if (top != 0)
                for (std::size_t j = 0; j < e_; ++j) nxt[j] = (nxt[j] + top * red_rows_[0][j]) % p0_;
            red_rows_[k] = nxt;
            cur = std::move(nxt);
        }
    }

    std::uint64_t idx_add_generic(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t r = 0, mult = 1;
        for (std::uint64_t i = 0; i < e_; ++i) {
            r += ((a % p0_ + b % p0_) % p0_) * mult;
            a /= p0_;
            b /= p0_;
            mult *= p0_;
        }
        return r;
    }
    std::uint64_t idx_neg_generic(std::uint64_t a) const {
        std::uint64_t r = 0, mult = 1;
        for (std::uint64_t i = 0; i < e_; ++i) {
            r += ((p0_ - a % p0_) % p0_) * mult;
            a /= p0_;
            mult *= p0_;
        }
        return r;
    }
    std::uint64_t idx_mul_generic(std::uint64_t a, std::uint64_t b) const {
        std::vector<std::uint32_t> ca(e_), cb(e_);
        unpack(a, ca.data());
        unpack(b, cb.data());
        std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
        mul_vectors(ca.data(), cb.data(), prod.data());
        std::vector<std::uint32_t> out(e_);
        for (std::size_t i = 0; i < e_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
        return pack(out.data());
    }
    std::uint64_t idx_inv_generic(std::uint64_t a) const {
        if (e_ == 1) return powmod(a, p0_ - 2, p0_);
        std::vector<std::uint32_t> ca(e_);
        unpack(a, ca.data());
        detail::PP av(ca.begin(), ca.end());
        detail::pp_trim(av);
        detail::PP f(modulus_.begin(), modulus_.end());
        detail::PP g, s;
        detail::pp_ext_gcd(av, f, p0_, g, s);
        if (g.size() != 1) throw internal_check_error("idx_inv_generic: element not invertible");
        const std::uint64_t ginv = detail::pp_modinv_scalar(g[0], p0_);
        std::vector<std::uint32_t> out(e_, 0);
        for (std::size_t i = 0; i < s.size() && i < e_; ++i)
            out[i] = static_cast<std::uint32_t>((s[i] * ginv) % p0_);
        return pack(out.data());
    }

  public:
    /* coefficient-vector product reduced against the modulus; out has e slots */
    void mul_vectors(const std::uint32_t* a, const std::uint32_t* b, std::uint64_t* scratch2e) const {
        std::fill(scratch2e, scratch2e + (2 * e_ - 1), 0);
        for (std::size_t i = 0; i < e_; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < e_; ++j)
                scratch2e[i + j] = (scratch2e[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p0_;
        }
        for (std::size_t k = 2 * e_ - 2; k + 1 > e_; --k) {
            const std::uint64_t c = scratch2e[k];
            if (c != 0) {
                const auto& row = red_rows_[k - e_];
                for (std::size_t j = 0; j < e_; ++j)
                    scratch2e[j] = (scratch2e[j] + c * row[j]) % p0_;
            }
            scratch2e[k] = 0;
            if (k == e_) break;
        }
    }

  private:
    void build_full_tables() {
        add_tab_.resize(q_ * q_);
        mul_tab_.resize(q_ * q_);
        neg_tab_.resize(q_);
        inv_tab_.resize(q_);
        for (std::uint64_t a = 0; a < q_; ++a) {
            neg_tab_[a] = static_cast<std::uint16_t>(idx_neg_generic(a));
            for (std::uint64_t b = 0; b <= a; ++b) {
                const std::uint16_t s = static_cast<std::uint16_t>(idx_add_generic(a, b));
                const std::uint16_t m = static_cast<std::uint16_t>(idx_mul_generic(a, b));
                add_tab_[a * q_ + b] = add_tab_[b * q_ + a] = s;
                mul_tab_[a * q_ + b] = mul_tab_[b * q_ + a] = m;
            }
        }
        inv_tab_[0] = 0;
        for (std::uint64_t a = 1; a < q_; ++a)
            inv_tab_[a] = static_cast<std::uint16_t>(idx_inv_generic(a));
    }

    void build_log_tables() {
        // find a generator by order descent through the factorization of q-1
        const auto fac = factor_u64(q_ - 1);
        std::uint64_t g = 0;
        for (std::uint64_t cand = 2; cand < q_; ++cand) {
            bool ok = true;
            for (const auto& [r, e] : fac) {
                (void)e;
                if (idx_pow_generic(cand, (q_ - 1) / r) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                g = cand;
                break;
            }
        }
        if (g == 0) throw internal_check_error("build_log_tables: no generator found");
        exp_tab_.resize(2 * (q_ - 1));
        log_tab_.assign(q_, 0);
        std::uint64_t acc = 1;
        for (std::uint64_t i = 0; i < q_ - 1; ++i) {
            exp_tab_[i] = static_cast<std::uint16_t>(acc);
            log_tab_[acc] = static_cast<std::uint32_t>(i);
            acc = idx_mul_generic(acc, g);
        }
        for (std::uint64_t i = 0; i < q_ - 1; ++i) exp_tab_[q_ - 1 + i] = exp_tab_[i];
    }

    std::uint64_t idx_pow_generic(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e > 0) {
            if (e & 1) r = idx_mul_generic(r, a);
            a = idx_mul_generic(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t p0_;
    std::uint64_t e_;
    std::uint64_t q_;
    std::vector<std::uint64_t> modulus_;
    std::vector<std::vector<std::uint64_t>> red_rows_;
    std::vector<std::uint16_t> add_tab_, mul_tab_, neg_tab_, inv_tab_;
    std::vector<std::uint16_t> exp_tab_;
    std::vector<std::uint32_t> log_tab_;
};

inline FieldRef make_field(std::uint64_t p0, std::uint64_t e) {
    return FieldRef(new FieldSpec(p0, e));
}

class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(FieldRef spec, std::vector<std::uint32_t> c) : spec_(std::move(spec)), c_(std::move(c)) {
        if (c_.size() != spec_->degree())
            throw std::invalid_argument("FieldElement: wrong number of residues");
        for (auto v : c_)
            if (v >= spec_->characteristic())
                throw std::invalid_argument("FieldElement: residue out of range");
    }

    const FieldRef& field() const { return spec_; }
    const std::vector<std::uint32_t>& residues() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
    }

    std::uint64_t index() const { return spec_->pack(c_.data()); }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        const std::uint64_t p = a.spec_->characteristic();
        std::vector<std::uint32_t> c(a.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.c_[i]) + b.c_[i]) % p);
        return FieldElement(a.spec_, std::move(c), unchecked{});
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        const std::uint64_t p = a.spec_->characteristic();
        std::vector<std::uint32_t> c(a.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.c_[i]) + p - b.c_[i]) % p);
        return FieldElement(a.spec_, std::move(c), unchecked{});
    }
    friend FieldElement operator-(const FieldElement& a) {
        const std::uint64_t p = a.spec_->characteristic();
        std::vector<std::uint32_t> c(a.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = static_cast<std::uint32_t>((p - a.c_[i]) % p);
        return FieldElement(a.spec_, std::move(c), unchecked{});
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        const std::size_t e = a.c_.size();
        if (e == 1) {
            const std::uint64_t p = a.spec_->characteristic();
            return FieldElement(a.spec_,
                                {static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.c_[0]) * b.c_[0]) % p)},
                                unchecked{});
        }
        std::vector<std::uint64_t> scratch(2 * e - 1);
        a.spec_->mul_vectors(a.c_.data(), b.c_.data(), scratch.data());
        std::vector<std::uint32_t> c(e);
        for (std::size_t i = 0; i < e; ++i) c[i] = static_cast<std::uint32_t>(scratch[i]);
        return FieldElement(a.spec_, std::move(c), unchecked{});
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

    FieldElement inverse() const {
        if (is_zero()) throw std::domain_error("field inverse of zero");
        const std::uint64_t idx = spec_->idx_inv(index());
        return spec_->element_at(idx);
    }

    FieldElement pow(std::uint64_t e) const {
        FieldElement r = spec_->one();
        FieldElement base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    FieldElement pow(const BigInt& e) const {
        if (e < 0) throw std::invalid_argument("FieldElement::pow: negative exponent");
        FieldElement r = spec_->one();
        FieldElement base = *this;
        BigInt k = e;
        while (k > 0) {
            if ((k & 1) != 0) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

  private:
    struct unchecked {};
    FieldElement(FieldRef spec, std::vector<std::uint32_t> c, unchecked) : spec_(std::move(spec)), c_(std::move(c)) {}

    void check_same(const FieldElement& other) const {
        if (!spec_ || !other.spec_) throw std::invalid_argument("FieldElement: uninitialized operand");
        if (!spec_->same_as(*other.spec_))
            throw std::invalid_argument("FieldElement: operands belong to different fields");
    }

    friend class FieldSpec;
    FieldRef spec_;
    std::vector<std::uint32_t> c_;
};

inline FieldElement FieldSpec::zero() const {
    return FieldElement(shared_from_this(), std::vector<std::uint32_t>(e_, 0), FieldElement::unchecked{});
}
inline FieldElement FieldSpec::one() const {
    std::vector<std::uint32_t> c(e_, 0);
    c[0] = 1 % p0_;
    return FieldElement(shared_from_this(), std::move(c), FieldElement::unchecked{});
}
inline FieldElement FieldSpec::from_integer(std::uint64_t v) const {
    std::vector<std::uint32_t> c(e_, 0);
    c[0] = static_cast<std::uint32_t>(v % p0_);
    return FieldElement(shared_from_this(), std::move(c), FieldElement::unchecked{});
}
inline FieldElement FieldSpec::element(std::vector<std::uint32_t> residues) const {
    return FieldElement(shared_from_this(), std::move(residues));
}
inline FieldElement FieldSpec::element_at(std::uint64_t idx) const {
    if (idx >= q_) throw std::invalid_argument("element_at: index out of range");
    std::vector<std::uint32_t> c(e_);
    unpack(idx, c.data());
    return FieldElement(shared_from_this(), std::move(c), FieldElement::unchecked{});
}

/* x^(q0^m): the conjugation base q0 is applied as m successive q0-th powers,
 * so the exponent q0^m is never materialized */
inline FieldElement frobenius(const FieldElement& x, std::uint64_t q0, std::uint64_t m) {
    if (q0 < 2) throw std::invalid_argument("frobenius: conjugation base must be at least 2");
    FieldElement r = x;
    for (std::uint64_t i = 0; i < m; ++i) r = r.pow(q0);
    return r;
}

/* multiplicative order of a nonzero element, by descent through the
 * factorization of q - 1 */
inline std::uint64_t element_order(const FieldElement& x) {
    if (x.is_zero()) throw std::invalid_argument("element_order: zero has no order");
    const std::uint64_t q = x.field()->order();
    std::uint64_t ord = q - 1;
    if (x.pow(ord) != x.field()->one())
        throw internal_check_error("element_order: x^(q-1) != 1");
    for (const auto& [r, e] : factor_u64(ord)) {
        (void)e;
        while (ord % r == 0 && x.pow(ord / r) == x.field()->one()) ord /= r;
    }
    return ord;
}

/* text form: residues ascending degree, joined by `sep` (comma when the
 * element stands alone, semicolon inside polynomial coefficient lists) */
inline std::string element_to_text(const FieldElement& x, char sep = ',') {
    std::string out;
    const auto& c = x.residues();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out.push_back(sep);
        out += std::to_string(c[i]);
    }
    return out;
}

inline FieldElement parse_element(const FieldRef& spec, std::string_view text, char sep = ',') {
    std::vector<std::uint32_t> c;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(sep, start);
        if (end == std::string_view::npos) end = text.size();
        const std::string tok(text.substr(start, end - start));
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("parse_element: malformed residue '" + tok + "'");
        const std::uint64_t v = std::stoull(tok);
        if (v >= spec->characteristic())
            throw std::invalid_argument("parse_element: residue out of range");
        c.push_back(static_cast<std::uint32_t>(v));
        if (end == text.size()) break;
        start = end + 1;
    }
    if (c.size() != spec->degree())
        throw std::invalid_argument("parse_element: wrong number of residues");
    return spec->element(std::move(c));
}

} // namespace negacirc
