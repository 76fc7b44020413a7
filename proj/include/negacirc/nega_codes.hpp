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
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polynomials.hpp"

namespace negacirc {

/* Dense matrix over a small field, entries stored as packed element indices.
 * Capped at field order 2^16 so an entry fits in 16 bits; the code kernels
 * only ever run over fields far below that. */
class Matrix {
public:
    Matrix(FieldRef spec, std::size_t rows, std::size_t cols)
        : spec_(std::move(spec)), rows_(rows), cols_(cols), a_(rows * cols, 0) {
        if (spec_->order() > 65536)
            throw std::invalid_argument("Matrix: field order above 2^16 is not supported");
    }

    static Matrix identity(FieldRef spec, std::size_t n) {
        Matrix m(std::move(spec), n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    const FieldRef& field() const { return spec_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint16_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::uint64_t idx) {
        if (idx >= spec_->order()) throw std::invalid_argument("Matrix::set: element index out of range");
        a_[i * cols_ + j] = static_cast<std::uint16_t>(idx);
    }
    FieldElement elem(std::size_t i, std::size_t j) const { return spec_->element_at(at(i, j)); }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](std::uint16_t v) { return v == 0; });
    }

    Matrix transposed() const {
        Matrix t(spec_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.a_[j * rows_ + i] = at(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (!spec_->same_as(*o.spec_)) throw std::invalid_argument("Matrix: mixed fields");
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix: incompatible shapes for product");
        Matrix r(spec_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const std::uint64_t lv = at(i, k);
                if (lv == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const std::uint64_t prod = spec_->idx_mul(lv, o.at(k, j));
                    r.a_[i * o.cols_ + j] =
                        static_cast<std::uint16_t>(spec_->idx_add(r.a_[i * o.cols_ + j], prod));
                }
            }
        }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (!spec_->same_as(*o.spec_)) throw std::invalid_argument("Matrix: mixed fields");
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: incompatible shapes for sum");
        Matrix r(spec_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i)
            r.a_[i] = static_cast<std::uint16_t>(spec_->idx_add(a_[i], o.a_[i]));
        return r;
    }

    bool operator==(const Matrix& o) const {
        return spec_->same_as(*o.spec_) && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    /* writes this matrix into dst starting at (row0, col0) */
    void paste_into(Matrix& dst, std::size_t row0, std::size_t col0) const {
        if (!spec_->same_as(*dst.spec_)) throw std::invalid_argument("Matrix: mixed fields");
        if (row0 + rows_ > dst.rows_ || col0 + cols_ > dst.cols_)
            throw std::invalid_argument("Matrix: paste out of range");
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) dst.a_[(row0 + i) * dst.cols_ + (col0 + j)] = at(i, j);
    }

private:
    FieldRef spec_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint16_t> a_;
};

/* One step of the twisted cyclic shift: (v_0, ..., v_{n-1}) becomes
 * (lambda * v_{n-1}, v_0, ..., v_{n-2}). */
inline std::vector<std::uint64_t> constashift(const FieldSpec& spec, const std::vector<std::uint64_t>& v,
                                              const FieldElement& lambda) {
    if (v.empty()) return {};
    std::vector<std::uint64_t> out(v.size());
    out[0] = spec.idx_mul(lambda.index(), v.back());
    for (std::size_t i = 1; i < v.size(); ++i) out[i] = v[i - 1];
    return out;
}

inline std::vector<std::uint64_t> negashift(const FieldSpec& spec, const std::vector<std::uint64_t>& v) {
    return constashift(spec, v, -spec.one());
}

/* The image of a(x) under x -> -x^(n-1), i.e. the inverse of x in
 * F_q[x]/(x^n + 1).  As a coefficient map: out[0] = a_0 and
 * out[n-j] = -a_j for 1 <= j < n. */
inline Poly prime_map(const Poly& a, std::size_t n) {
    if (n == 0) throw std::invalid_argument("prime_map: n must be positive");
    const FieldRef& F = a.field();
    Poly red = a.degree() >= static_cast<int>(n) ? a % Poly::x_pow_plus_one(F, n) : a;
    std::vector<std::uint64_t> out(n, 0);
    for (int j = 0; j <= red.degree(); ++j) {
        const std::uint64_t cj = red.coefficient_index(static_cast<std::size_t>(j));
        if (j == 0)
            out[0] = cj;
        else
            out[n - static_cast<std::size_t>(j)] = F->idx_neg(cj);
    }
    return Poly(F, out);
}

/* n x n matrix whose rows are the successive negashifts of the coefficient
 * row of a(x).  Equivalently a(N) where N is the matrix of multiplication
 * by x on F_q[x]/(x^n + 1); the constructor cross-checks the two
 * descriptions at small sizes. */
class NegacirculantMatrix {
public:
    NegacirculantMatrix(Poly a, std::size_t n) : n_(n), a_(std::move(a)) {
        if (n_ == 0) throw std::invalid_argument("NegacirculantMatrix: n must be positive");
        if (a_.degree() >= static_cast<int>(n_)) a_ = a_ % Poly::x_pow_plus_one(a_.field(), n_);
        if (n_ <= 8) {
            const Matrix by_shift = build();
            const Matrix by_eval = evaluate_at_shift_matrix();
            if (by_shift != by_eval)
                throw internal_check_error("NegacirculantMatrix: shift rows disagree with a(N)");
        }
    }

    std::size_t size() const { return n_; }
    const Poly& first_row() const { return a_; }
    Matrix to_matrix() const { return build(); }

private:
    Matrix build() const {
        const FieldRef& F = a_.field();
        Matrix m(F, n_, n_);
        std::vector<std::uint64_t> row(n_, 0);
        for (int j = 0; j <= a_.degree(); ++j) row[static_cast<std::size_t>(j)] = a_.coefficient_index(j);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) m.set(i, j, row[j]);
            row = negashift(*F, row);
        }
        return m;
    }

    Matrix evaluate_at_shift_matrix() const {
        const FieldRef& F = a_.field();
        // N = matrix of multiplication by x, built from the trusted shift
        Matrix shift(F, n_, n_);
        {
            std::vector<std::uint64_t> row(n_, 0);
            row[1 % n_] = n_ == 1 ? F->idx_neg(1) : 1;
            for (std::size_t i = 0; i < n_; ++i) {
                for (std::size_t j = 0; j < n_; ++j) shift.set(i, j, row[j]);
                row = negashift(*F, row);
            }
        }
        Matrix acc(F, n_, n_); // zero
        for (int j = a_.degree(); j >= 0; --j) {
            acc = acc * shift;
            Matrix diag(F, n_, n_);
            for (std::size_t i = 0; i < n_; ++i) diag.set(i, i, a_.coefficient_index(static_cast<std::size_t>(j)));
            acc = acc + diag;
        }
        return acc;
    }

    std::size_t n_;
    Poly a_;
};

struct DoubleNegaCode {
    std::size_t n = 0; // generator is n x 2n
    Poly h;
    Matrix generator;
};

struct FourNegaCode {
    std::size_t n = 0; // generator is 2n x 4n
    Poly a;
    Poly b;
    Matrix generator;
};

/* [2n, n] code with generator (I | H), H negacirculant with first row h */
inline DoubleNegaCode build_double(const Poly& h, std::size_t n) {
    const FieldRef& F = h.field();
    NegacirculantMatrix H(h, n);
    Matrix gen(F, n, 2 * n);
    Matrix::identity(F, n).paste_into(gen, 0, 0);
    H.to_matrix().paste_into(gen, 0, n);
    return DoubleNegaCode{n, H.first_row(), std::move(gen)};
}

/* [4n, 2n] code with generator
 *   ( I  0    A      B   )
 *   ( 0  I  -B^T    A^T  )
 * where A, B are negacirculant with first rows a, b.  Transposes are again
 * negacirculant, with first rows given by the prime map. */
inline FourNegaCode build_four(const Poly& a, const Poly& b, std::size_t n) {
    const FieldRef& F = a.field();
    if (!F->same_as(*b.field())) throw std::invalid_argument("build_four: mixed fields");
    NegacirculantMatrix A(a, n);
    NegacirculantMatrix B(b, n);
    NegacirculantMatrix At(prime_map(A.first_row(), n), n);
    NegacirculantMatrix mBt(-prime_map(B.first_row(), n), n);
    Matrix gen(F, 2 * n, 4 * n);
    Matrix::identity(F, n).paste_into(gen, 0, 0);
    A.to_matrix().paste_into(gen, 0, 2 * n);
    B.to_matrix().paste_into(gen, 0, 3 * n);
    Matrix::identity(F, n).paste_into(gen, n, n);
    mBt.to_matrix().paste_into(gen, n, 2 * n);
    At.to_matrix().paste_into(gen, n, 3 * n);
    return FourNegaCode{n, A.first_row(), B.first_row(), std::move(gen)};
}

/* 1 + h(x) h(x^(-1)) in F_q[x]/(x^n + 1); the code (I | H_h) is self-dual
 * exactly when this vanishes */
inline Poly self_dual_defect(const Poly& h, std::size_t n) {
    const FieldRef& F = h.field();
    const Poly ring = Poly::x_pow_plus_one(F, n);
    const Poly hr = h.degree() >= static_cast<int>(n) ? h % ring : h;
    return (Poly::from_integers(F, {1}) + hr * prime_map(hr, n)) % ring;
}

/* Euclidean self-duality of the row span: dimension must be half the length
 * and every pair of rows must be orthogonal. */
inline bool is_self_dual(const Matrix& gen) {
    if (gen.cols() != 2 * gen.rows()) return false;
    return (gen * gen.transposed()).is_zero();
}

inline bool is_self_dual(const DoubleNegaCode& c) { return is_self_dual(c.generator); }
inline bool is_self_dual(const FourNegaCode& c) { return is_self_dual(c.generator); }

/* A A^T + B B^T + I = 0, the matrix form of the self-duality condition for
 * the four-block construction. */
inline bool orthogonality_identity_holds(const NegacirculantMatrix& A, const NegacirculantMatrix& B) {
    const FieldRef& F = A.first_row().field();
    const Matrix a = A.to_matrix();
    const Matrix b = B.to_matrix();
    const Matrix sum = a * a.transposed() + b * b.transposed() + Matrix::identity(F, A.size());
    return sum.is_zero();
}

inline bool orthogonality_identity_holds(const Poly& a, const Poly& b, std::size_t n) {
    return orthogonality_identity_holds(NegacirculantMatrix(a, n), NegacirculantMatrix(b, n));
}

struct MinDistanceOptions {
    std::uint64_t budget = 100000000; // refuse when q^k exceeds this
    unsigned workers = 1;
};

namespace detail {

struct SparseRow {
    std::vector<std::pair<std::uint32_t, std::uint16_t>> entries; // (column, element index)
};

} // namespace detail

/* Exact minimum weight of the nonzero codewords of the row span of gen,
 * assuming gen has full row rank.  Enumerates one representative per
 * projective message (first nonzero coordinate = 1), so the work is
 * (q^k - 1) / (q - 1) codewords; consecutive messages differ by adding a
 * single generator row, which keeps the update cost at O(row weight). */
inline std::uint64_t min_distance(const Matrix& gen, const MinDistanceOptions& opts = {}) {
    const FieldRef F = gen.field();
    const std::uint64_t q = F->order();
    const std::size_t k = gen.rows();
    const std::size_t ncols = gen.cols();
    if (k == 0) throw std::invalid_argument("min_distance: generator has no rows");

    const BigInt total_messages = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k));
    if (total_messages > BigInt(opts.budget))
        throw feasibility_error("min_distance: q^k = " + total_messages.str() + " exceeds the budget of " +
                                std::to_string(opts.budget) + " messages");
    const std::uint64_t reps = static_cast<std::uint64_t>((total_messages - 1) / (q - 1));

    std::vector<detail::SparseRow> rows(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < ncols; ++j)
            if (gen.at(i, j) != 0) rows[i].entries.push_back({static_cast<std::uint32_t>(j), gen.at(i, j)});

    // q^i for i < k fits in 64 bits because q^k passed the budget check
    std::vector<std::uint64_t> powq(k, 1);
    for (std::size_t i = 1; i < k; ++i) powq[i] = powq[i - 1] * q;

    // block ell holds the messages whose first nonzero coordinate is ell
    std::vector<std::uint64_t> block_start(k + 1, 0);
    for (std::size_t ell = 0; ell < k; ++ell) block_start[ell + 1] = block_start[ell] + powq[k - 1 - ell];
    if (block_start[k] != reps) throw internal_check_error("min_distance: block sizes do not sum to the total");

    const unsigned workers = opts.workers == 0 ? 1 : opts.workers;
    std::vector<std::uint64_t> best(workers, std::numeric_limits<std::uint64_t>::max());

    parallel_ranges(reps, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint16_t> cw(ncols);
        std::vector<std::uint32_t> digits;
        std::uint64_t local_best = std::numeric_limits<std::uint64_t>::max();

        auto add_row = [&](std::size_t r, std::uint64_t& wt) {
            for (const auto& [col, val] : rows[r].entries) {
                const std::uint16_t old = cw[col];
                const std::uint16_t neu = static_cast<std::uint16_t>(F->idx_add(old, val));
                wt += (neu != 0 ? 1 : 0) - (old != 0 ? 1 : 0);
                cw[col] = neu;
            }
        };

        for (std::size_t ell = 0; ell < k; ++ell) {
            const std::uint64_t lo = std::max(begin, block_start[ell]);
            const std::uint64_t hi = std::min(end, block_start[ell + 1]);
            if (lo >= hi) continue;

            const std::size_t suffix = k - 1 - ell; // free coordinates after the leading 1
            digits.assign(suffix, 0);
            std::fill(cw.begin(), cw.end(), 0);
            std::uint64_t wt = 0;
            add_row(ell, wt);
            {
                std::uint64_t rest = lo - block_start[ell];
                for (std::size_t t = 0; t < suffix; ++t) {
                    digits[t] = static_cast<std::uint32_t>(rest % q);
                    rest /= q;
                    for (std::uint32_t rep = 0; rep < digits[t]; ++rep) add_row(ell + 1 + t, wt);
                }
            }

            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                local_best = std::min(local_best, wt);
                if (idx + 1 == hi) break;
                std::size_t t = 0;
                while (true) {
                    add_row(ell + 1 + t, wt); // every changed digit moved by +1 mod q
                    if (++digits[t] < q) break;
                    digits[t] = 0;
                    ++t;
                }
            }
        }
        best[w] = local_best;
    });

    const std::uint64_t result = *std::min_element(best.begin(), best.end());
    if (result == std::numeric_limits<std::uint64_t>::max())
        throw internal_check_error("min_distance: enumeration produced no codewords");
    return result;
}

struct CodeSummary {
    std::size_t length = 0;
    std::size_t dimension = 0;
    bool self_dual = false;
    std::optional<std::uint64_t> min_dist;
};

inline CodeSummary summarize(const Matrix& gen, bool with_distance, const MinDistanceOptions& opts = {}) {
    CodeSummary s;
    s.length = gen.cols();
    s.dimension = gen.rows();
    s.self_dual = is_self_dual(gen);
    if (with_distance) s.min_dist = min_distance(gen, opts);
    return s;
}

} // namespace negacirc
