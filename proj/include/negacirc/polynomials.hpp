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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fields.hpp"
#include "integers.hpp"
#include "support.hpp"

namespace negacirc {

/* Dense univariate polynomials over a FieldSpec.  Coefficients are stored as
 * packed field indices ascending by degree, normalized (no trailing zeros);
 * the zero polynomial is the empty coefficient list and reports degree -1. */
class Poly {
  public:
    Poly() = default;
    explicit Poly(FieldRef spec) : spec_(std::move(spec)) {}

    Poly(FieldRef spec, std::vector<std::uint64_t> indices) : spec_(std::move(spec)), c_(std::move(indices)) {
        for (auto v : c_)
            if (v >= spec_->order()) throw std::invalid_argument("Poly: coefficient index out of range");
        trim();
    }

    static Poly from_elements(const FieldRef& spec, const std::vector<FieldElement>& coeffs) {
        std::vector<std::uint64_t> idx;
        idx.reserve(coeffs.size());
        for (const auto& c : coeffs) {
            if (!c.field()->same_as(*spec)) throw std::invalid_argument("Poly: coefficient from different field");
            idx.push_back(c.index());
        }
        return Poly(spec, std::move(idx));
    }

    /* integer constants reduced into the prime subfield, ascending degree */
    static Poly from_integers(const FieldRef& spec, const std::vector<std::int64_t>& coeffs) {
        const std::int64_t p = static_cast<std::int64_t>(spec->characteristic());
        std::vector<std::uint64_t> idx;
        idx.reserve(coeffs.size());
        for (auto v : coeffs) {
            const std::int64_t r = ((v % p) + p) % p;
            idx.push_back(spec->from_integer(static_cast<std::uint64_t>(r)).index());
        }
        return Poly(spec, std::move(idx));
    }

    static Poly x(const FieldRef& spec) { return Poly(spec, {0, spec->one().index()}); }

    /* x^n + 1 */
    static Poly x_pow_plus_one(const FieldRef& spec, std::uint64_t n) {
        std::vector<std::uint64_t> idx(n + 1, 0);
        idx[0] = spec->one().index();
        idx[n] = spec->one().index();
        return Poly(spec, std::move(idx));
    }

    /* x^n - 1 */
    static Poly x_pow_minus_one(const FieldRef& spec, std::uint64_t n) {
        std::vector<std::uint64_t> idx(n + 1, 0);
        idx[0] = spec->idx_neg(spec->one().index());
        idx[n] = spec->one().index();
        return Poly(spec, std::move(idx));
    }

    const FieldRef& field() const { return spec_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<std::uint64_t>& indices() const { return c_; }

    FieldElement coefficient(std::size_t i) const {
        return i < c_.size() ? spec_->element_at(c_[i]) : spec_->zero();
    }
    std::uint64_t coefficient_index(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    FieldElement leading() const {
        if (c_.empty()) throw std::domain_error("Poly::leading: zero polynomial");
        return spec_->element_at(c_.back());
    }
    bool is_monic() const { return !c_.empty() && spec_->element_at(c_.back()) == spec_->one(); }

    friend bool operator==(const Poly& a, const Poly& b) {
        a.check_same(b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check_same(b);
        const FieldSpec& F = *a.spec_;
        std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            const std::uint64_t x = i < a.c_.size() ? a.c_[i] : 0;
            const std::uint64_t y = i < b.c_.size() ? b.c_[i] : 0;
            c[i] = F.idx_add(x, y);
        }
        return Poly(a.spec_, std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        a.check_same(b);
        const FieldSpec& F = *a.spec_;
        std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            const std::uint64_t x = i < a.c_.size() ? a.c_[i] : 0;
            const std::uint64_t y = i < b.c_.size() ? b.c_[i] : 0;
            c[i] = F.idx_sub(x, y);
        }
        return Poly(a.spec_, std::move(c));
    }
    friend Poly operator-(const Poly& a) {
        std::vector<std::uint64_t> c(a.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.spec_->idx_neg(a.c_[i]);
        return Poly(a.spec_, std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same(b);
        if (a.c_.empty() || b.c_.empty()) return Poly(a.spec_);
        const FieldSpec& F = *a.spec_;
        std::vector<std::uint64_t> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                c[i + j] = F.idx_add(c[i + j], F.idx_mul(a.c_[i], b.c_[j]));
            }
        }
        return Poly(a.spec_, std::move(c));
    }

    Poly scaled(const FieldElement& s) const {
        const std::uint64_t si = s.index();
        std::vector<std::uint64_t> c(c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = spec_->idx_mul(c_[i], si);
        return Poly(spec_, std::move(c));
    }

    Poly monic() const {
        if (c_.empty()) throw std::domain_error("Poly::monic: zero polynomial");
        if (is_monic()) return *this;
        return scaled(leading().inverse());
    }

    FieldElement eval(const FieldElement& at) const {
        if (!at.field()->same_as(*spec_)) throw std::invalid_argument("Poly::eval: point from different field");
        FieldElement acc = spec_->zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + spec_->element_at(c_[i]);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() < 2) return Poly(spec_);
        std::vector<std::uint64_t> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            const std::uint64_t scalar = spec_->from_integer(i).index();
            c[i - 1] = spec_->idx_mul(c_[i], scalar);
        }
        return Poly(spec_, std::move(c));
    }

  private:
    void check_same(const Poly& other) const {
        if (!spec_ || !other.spec_) throw std::invalid_argument("Poly: uninitialized operand");
        if (!spec_->same_as(*other.spec_)) throw std::invalid_argument("Poly: operands over different fields");
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    FieldRef spec_;
    std::vector<std::uint64_t> c_;
};

/* quotient and remainder; the divisor must be nonzero */
inline std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
    if (!a.field()->same_as(*b.field())) throw std::invalid_argument("divrem: operands over different fields");
    const FieldSpec& F = *a.field();
    if (a.degree() < b.degree()) return {Poly(a.field()), a};
    std::vector<std::uint64_t> rem = a.indices();
    const std::vector<std::uint64_t>& d = b.indices();
    const std::uint64_t linv = F.idx_inv(d.back());
    std::vector<std::uint64_t> quot(rem.size() - d.size() + 1, 0);
    for (std::size_t k = rem.size(); k >= d.size(); --k) {
        const std::uint64_t top = rem[k - 1];
        if (top != 0) {
            const std::uint64_t c = F.idx_mul(top, linv);
            const std::size_t off = k - d.size();
            quot[off] = c;
            for (std::size_t j = 0; j < d.size(); ++j)
                rem[off + j] = F.idx_sub(rem[off + j], F.idx_mul(c, d[j]));
        }
        if (k == d.size()) break;
    }
    return {Poly(a.field(), std::move(quot)), Poly(a.field(), std::move(rem))};
}

inline Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }
inline Poly operator/(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("Poly operator/: division is not exact");
    return q;
}

/* monic gcd; gcd(f, 0) is the monic normalization of f */
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

/* extended Euclid: g = gcd(a, b) monic with s*a + t*b = g */
inline void poly_ext_gcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t) {
    Poly r0 = a, r1 = b;
    Poly s0 = Poly(a.field(), {a.field()->one().index()}), s1 = Poly(a.field());
    Poly t0 = Poly(a.field()), t1 = Poly(a.field(), {a.field()->one().index()});
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(r0, r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        g = r0;
        s = s0;
        t = t0;
        return;
    }
    const FieldElement linv = r0.leading().inverse();
    g = r0.scaled(linv);
    s = s0.scaled(linv);
    t = t0.scaled(linv);
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& mod) {
    Poly r(base.field(), {base.field()->one().index()});
    base = base % mod;
    while (e > 0) {
        if (e & 1) r = (r * base) % mod;
        base = (base * base) % mod;
        e >>= 1;
    }
    return r;
}

inline Poly poly_powmod(Poly base, const BigInt& e, const Poly& mod) {
    if (e < 0) throw std::invalid_argument("poly_powmod: negative exponent");
    Poly r(base.field(), {base.field()->one().index()});
    base = base % mod;
    BigInt k = e;
    while (k > 0) {
        if ((k & 1) != 0) r = (r * base) % mod;
        base = (base * base) % mod;
        k >>= 1;
    }
    return r;
}

/* x^(deg f) * f(1/x), normalized monic; requires f(0) != 0 */
inline Poly reciprocal(const Poly& f) {
    if (f.is_zero() || f.indices()[0] == 0)
        throw std::invalid_argument("reciprocal: constant term must be nonzero");
    std::vector<std::uint64_t> rev(f.indices().rbegin(), f.indices().rend());
    return Poly(f.field(), std::move(rev)).monic();
}

inline bool is_self_reciprocal(const Poly& f) { return reciprocal(f) == f.monic(); }

/* number of nonzero coefficients */
inline std::size_t poly_weight(const Poly& f) {
    std::size_t w = 0;
    for (std::uint64_t idx : f.indices())
        if (idx != 0) ++w;
    return w;
}

/* ascending-degree entry-wise order on coefficient sequences, residues of
 * each coefficient compared ascending as well; used to sort factor lists */
inline bool poly_lex_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const std::size_t n = a.indices().size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto ra = a.coefficient(i).residues();
        const auto rb = b.coefficient(i).residues();
        if (ra != rb) return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
    }
    return false;
}

/* Rabin criterion over F_q: f of degree d is irreducible iff x^(q^d) = x
 * mod f and gcd(x^(q^(d/r)) - x, f) = 1 for every prime r | d.  The powers
 * x^(q^i) are produced by iterating the q-th power map, never materializing
 * q^d. */
inline bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) throw std::invalid_argument("is_irreducible: degree must be at least 1");
    const std::size_t d = static_cast<std::size_t>(f.degree());
    if (d == 1) return true;
    const std::uint64_t q = f.field()->order();
    const Poly fm = f.monic();
    std::vector<std::size_t> checkpoints;
    for (const auto& [r, e] : factor_u64(d)) {
        (void)e;
        checkpoints.push_back(d / r);
    }
    std::sort(checkpoints.begin(), checkpoints.end());
    Poly t = Poly::x(f.field());
    std::size_t next = 0;
    for (std::size_t i = 1; i <= d; ++i) {
        t = poly_powmod(t, q, fm);
        if (next < checkpoints.size() && i == checkpoints[next]) {
            if (poly_gcd(t - Poly::x(f.field()), fm).degree() != 0) return false;
            ++next;
        }
    }
    return (t - Poly::x(f.field())).is_zero();
}

/* monic irreducible factors with multiplicities, sorted ascending by
 * (degree, coefficient order); the product times `leading` reproduces the
 * input exactly */
struct FactorizationResult {
    FieldElement leading;
    std::vector<std::pair<Poly, std::uint64_t>> factors;
};

namespace detail {

inline std::uint64_t poly_hash(const Poly& f) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    mix(f.field()->characteristic());
    mix(f.field()->degree());
    for (auto v : f.field()->modulus()) mix(v);
    for (auto v : f.indices()) mix(v + 1);
    return h;
}

inline Poly pth_root(const Poly& f) {
    const FieldRef& F = f.field();
    const std::uint64_t p = F->characteristic();
    const std::uint64_t root_exp = F->order() / p; // a^(q/p) is the p-th root in F_q
    std::vector<std::uint64_t> out((f.indices().size() + p - 1) / p, 0);
    for (std::size_t i = 0; i < f.indices().size(); ++i) {
        const std::uint64_t c = f.indices()[i];
        if (c == 0) continue;
        if (i % p != 0) throw internal_check_error("pth_root: polynomial is not a p-th power");
        out[i / p] = F->element_at(c).pow(root_exp).index();
    }
    return Poly(F, std::move(out));
}

inline void squarefree_parts(const Poly& f, std::uint64_t mult, std::vector<std::pair<Poly, std::uint64_t>>& out) {
    const std::uint64_t p = f.field()->characteristic();
    Poly c = poly_gcd(f, f.derivative());
    Poly w = f / c;
    std::uint64_t i = 1;
    while (w.degree() > 0) {
        Poly y = poly_gcd(w, c);
        Poly z = w / y;
        if (z.degree() > 0) out.emplace_back(z, i * mult);
        w = std::move(y);
        c = c / w;
        i += 1;
    }
    if (c.degree() > 0) squarefree_parts(pth_root(c), mult * p, out);
}

inline void equal_degree_split(const Poly& f, std::size_t d, Rng& rng, std::vector<Poly>& out) {
    if (static_cast<std::size_t>(f.degree()) == d) {
        out.push_back(f.monic());
        return;
    }
    const FieldRef& F = f.field();
    const std::uint64_t q = F->order();
    while (true) {
        std::vector<std::uint64_t> ridx(static_cast<std::size_t>(f.degree()));
        for (auto& v : ridx) v = rng.below(q);
        Poly r(F, std::move(ridx));
        if (r.degree() < 1) continue;
        Poly g = poly_gcd(r, f);
        if (g.degree() == 0) {
            if (F->characteristic() == 2) {
                // absolute trace to F_2 splits each component with chance 1/2
                const std::uint64_t bits = F->degree() * d;
                Poly acc = r % f;
                Poly term = acc;
                for (std::uint64_t i = 1; i < bits; ++i) {
                    term = (term * term) % f;
                    acc = acc + term;
                }
                g = poly_gcd(acc, f);
            } else {
                const BigInt qd = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(d));
                Poly s = poly_powmod(r, (qd - 1) / 2, f);
                g = poly_gcd(s - Poly(F, {F->one().index()}), f);
            }
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(f / g, d, rng, out);
            return;
        }
    }
}

} // namespace detail

inline FactorizationResult factorize(const Poly& f, std::uint64_t seed = kDefaultSeed) {
    if (f.degree() < 1) throw std::invalid_argument("factorize: degree must be at least 1");
    const FieldRef& F = f.field();
    const std::uint64_t q = F->order();
    Rng rng(mix_seed(seed, detail::poly_hash(f)));

    FactorizationResult res;
    res.leading = f.leading();

    std::vector<std::pair<Poly, std::uint64_t>> sf;
    detail::squarefree_parts(f.monic(), 1, sf);

    for (const auto& [part, mult] : sf) {
        // distinct-degree: strip the product of all irreducible factors of
        // degree d for d = 1, 2, ...
        Poly rest = part;
        Poly t = Poly::x(F) % rest;
        std::size_t d = 0;
        while (rest.degree() > 0 && static_cast<int>(2 * (d + 1)) <= rest.degree()) {
            ++d;
            t = poly_powmod(t, q, rest);
            Poly g = poly_gcd(t - Poly::x(F), rest);
            if (g.degree() > 0) {
                std::vector<Poly> split;
                detail::equal_degree_split(g, d, rng, split);
                for (auto& irr : split) res.factors.emplace_back(std::move(irr), mult);
                rest = rest / g;
                t = t % rest;
            }
        }
        if (rest.degree() > 0) res.factors.emplace_back(rest.monic(), mult);
    }

    std::sort(res.factors.begin(), res.factors.end(),
              [](const auto& a, const auto& b) { return poly_lex_less(a.first, b.first); });

    Poly check(F, {res.leading.index()});
    for (const auto& [g, m] : res.factors)
        for (std::uint64_t i = 0; i < m; ++i) check = check * g;
    if (check != f) throw internal_check_error("factorize: factor product does not reproduce the input");
    return res;
}

/* r-th cyclotomic polynomial reduced into the field; computed exactly over
 * the integers by iterated division of x^d - 1 by the lower-order cyclotomic
 * polynomials, then reduced mod the characteristic */
inline Poly cyclotomic(std::uint64_t r, const FieldRef& spec) {
    if (r == 0) throw std::invalid_argument("cyclotomic: order must be positive");
    if (r % spec->characteristic() == 0)
        throw std::invalid_argument("cyclotomic: order divisible by the characteristic");

    std::vector<std::uint64_t> divisors;
    for (std::uint64_t d = 1; d * d <= r; ++d) {
        if (r % d == 0) {
            divisors.push_back(d);
            if (d != r / d) divisors.push_back(r / d);
        }
    }
    std::sort(divisors.begin(), divisors.end());

    auto div_exact = [](std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
        std::vector<std::int64_t> quot(num.size() - den.size() + 1, 0);
        for (std::size_t k = num.size(); k >= den.size(); --k) {
            const std::int64_t top = num[k - 1];
            if (top != 0) {
                if (top % den.back() != 0) throw internal_check_error("cyclotomic: inexact division");
                const std::int64_t c = top / den.back();
                const std::size_t off = k - den.size();
                quot[off] = c;
                for (std::size_t j = 0; j < den.size(); ++j) num[off + j] -= c * den[j];
            }
            if (k == den.size()) break;
        }
        for (auto v : num)
            if (v != 0) throw internal_check_error("cyclotomic: nonzero remainder");
        return quot;
    };

    std::map<std::uint64_t, std::vector<std::int64_t>> table;
    for (std::uint64_t d : divisors) {
        std::vector<std::int64_t> num(d + 1, 0);
        num[0] = -1;
        num[d] = 1;
        std::vector<std::int64_t> acc = num;
        for (std::uint64_t dd : divisors) {
            if (dd >= d || d % dd != 0) continue;
            acc = div_exact(std::move(acc), table[dd]);
        }
        table[d] = std::move(acc);
    }

    const auto& ints = table[r];
    if (ints.size() != totient(r) + 1) throw internal_check_error("cyclotomic: wrong degree");
    return Poly::from_integers(spec, ints);
}

/* text form: coefficients ascending degree joined by commas; extension-field
 * coefficients list their residues joined by semicolons */
inline std::string poly_to_text(const Poly& f) {
    if (f.is_zero()) return element_to_text(f.field()->zero(), ';');
    std::string out;
    for (int i = 0; i <= f.degree(); ++i) {
        if (i) out.push_back(',');
        out += element_to_text(f.coefficient(static_cast<std::size_t>(i)), ';');
    }
    return out;
}

inline Poly parse_poly(const FieldRef& spec, std::string_view text) {
    if (text.empty()) throw std::invalid_argument("parse_poly: empty text");
    std::vector<std::uint64_t> idx;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        idx.push_back(parse_element(spec, text.substr(start, end - start), ';').index());
        if (end == text.size()) break;
        start = end + 1;
    }
    return Poly(spec, std::move(idx));
}

} // namespace negacirc
