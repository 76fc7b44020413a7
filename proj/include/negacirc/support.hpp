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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace negacirc {

/* arbitrary-precision signed integer; every count and bound that can
 * overflow 64 bits is carried exactly in this type */
using BigInt = boost::multiprecision::cpp_int;

/* fixed default seed for every seeded computation; overridable per call or
 * via the CLI */
inline constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ULL;

/* a size or budget limit was exceeded; the operation refuses instead of
 * running unbounded */
class feasibility_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/* structural hypotheses of a construction are not satisfied by the inputs */
class hypothesis_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/* an internal cross-check failed; indicates a bug, never a bad input */
class internal_check_error : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/* splitmix64 stream; fully specified, identical on every platform */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /* uniform draw in [0, n), unbiased via rejection */
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below: empty range");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

  private:
    std::uint64_t state_;
};

/* mixes extra entropy into a seed; used to derive independent per-object
 * streams from one global seed */
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    Rng r(seed ^ (salt * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    return r.next();
}

/* Splits [0, total) into at most `workers` contiguous ranges and runs
 * fn(worker_index, begin, end) on each, concurrently when workers > 1.
 * Results must be merged by the caller in worker-index order so that the
 * outcome does not depend on the worker count. */
template <typename Fn>
void parallel_ranges(std::uint64_t total, unsigned workers, Fn&& fn) {
    if (workers == 0) workers = 1;
    if (static_cast<std::uint64_t>(workers) > total && total > 0)
        workers = static_cast<unsigned>(total);
    if (total == 0) return;
    if (workers == 1) {
        fn(0u, std::uint64_t{0}, total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = total / workers;
    const std::uint64_t rest = total % workers;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t len = chunk + (w < rest ? 1 : 0);
        const std::uint64_t end = begin + len;
        pool.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
        begin = end;
    }
    for (auto& t : pool) t.join();
}

inline unsigned default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace negacirc
