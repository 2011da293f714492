// Copyright 2026 The cpmx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "cpmx/engine.hpp"
#include "cpmx/intersector.hpp"
#include "cpmx/suffix_index.hpp"
#include "cpmx/text.hpp"

namespace cpmx::bench {

/// One timed measurement. A record whose build_ns is empty was skipped
/// because the method's size cap excludes n.
struct BenchRecord {
    IntersectorKind method = IntersectorKind::Inverse;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t trial = 0;
    std::optional<std::int64_t> build_ns;
    std::optional<std::int64_t> query_ns;
    std::optional<std::uint64_t> matches;

    [[nodiscard]] bool skipped() const noexcept { return !build_ns.has_value(); }
    friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct RangeProfilePoint {
    std::size_t m = 0;
    /// Mean T-side width over all splits k = 1..m of every sample.
    double mean_rt_width = 0;
    /// Mean R-side width over all splits k = 1..m of every sample.
    double mean_rr_width = 0;
    /// Mean T-side width of the whole pattern (split k = m).
    double mean_full_width = 0;
    std::size_t samples = 0;
};

/// Largest n each method is built for; larger sizes are recorded as skipped.
struct Caps {
    std::size_t instant = InstantTable::kDefaultMaxN;
    std::size_t log = 8192;
    std::size_t root = 100'000;

    [[nodiscard]] std::size_t for_method(IntersectorKind k) const noexcept {
        switch (k) {
            case IntersectorKind::Instant: return instant;
            case IntersectorKind::Log: return log;
            case IntersectorKind::Root: return root;
            case IntersectorKind::Inverse: break;
        }
        return static_cast<std::size_t>(-1);
    }
};

inline const std::vector<IntersectorKind>& all_methods() {
    static const std::vector<IntersectorKind> kAll = {IntersectorKind::Instant, IntersectorKind::Log,
                                                      IntersectorKind::Root, IntersectorKind::Inverse};
    return kAll;
}

namespace detail {

using Clock = std::chrono::steady_clock;

inline std::int64_t elapsed_ns(Clock::time_point since) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - since).count();
}

/// Start offsets for in-text patterns, independent of method so that every
/// method sees the same queries.
inline std::size_t sample_start(std::uint64_t seed, std::size_t m, std::size_t trial, std::size_t n) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(trial)};
    std::mt19937_64 rng(seq);
    return std::uniform_int_distribution<std::size_t>(0, n - m)(rng);
}

}  // namespace detail

/// Index + intersector construction time for each (method, n) over random DNA.
inline std::vector<BenchRecord> bench_build(const std::vector<IntersectorKind>& methods,
                                            const std::vector<std::size_t>& sizes, std::uint64_t seed,
                                            std::size_t trials = 1, const Caps& caps = {}) {
    std::vector<BenchRecord> out;
    for (std::size_t n : sizes) {
        const Text text = random_dna(n, seed);
        for (IntersectorKind method : methods) {
            if (n > caps.for_method(method)) {
                out.push_back({method, n, 0, 0, {}, {}, {}});
                continue;
            }
            for (std::size_t trial = 0; trial < trials; ++trial) {
                const auto start = detail::Clock::now();
                const SuffixIndex index = SuffixIndex::build(text);
                const Intersector x = Intersector::build(method, index, {caps.instant});
                const std::int64_t ns = detail::elapsed_ns(start);
                out.push_back({method, n, 0, trial, ns, {}, {}});
            }
        }
    }
    return out;
}

/// Per-trial ecpm timings for in-text patterns of each requested length.
/// Within a trial every method answers the same pattern, one after another.
inline std::vector<BenchRecord> bench_query(const std::vector<IntersectorKind>& methods, std::size_t n,
                                            const std::vector<std::size_t>& pattern_lengths, std::size_t trials,
                                            std::uint64_t seed, const Caps& caps = {}) {
    for (std::size_t m : pattern_lengths) {
        if (m == 0) throw Error(ErrorCode::EmptyPattern, "pattern length 0");
        if (m > n) {
            throw Error(ErrorCode::PatternTooLong, "pattern length " + std::to_string(m) + " exceeds n = " +
                                                       std::to_string(n));
        }
    }
    std::vector<BenchRecord> out;
    if (trials == 0) return out;

    const Text text = random_dna(n, seed);
    const auto index_start = detail::Clock::now();
    const SuffixIndex index = SuffixIndex::build(text);
    const std::int64_t index_ns = detail::elapsed_ns(index_start);

    struct Built {
        IntersectorKind method;
        std::optional<Intersector> x;
        std::int64_t build_ns = 0;
    };
    std::vector<Built> built;
    for (IntersectorKind method : methods) {
        if (n > caps.for_method(method)) {
            built.push_back({method, std::nullopt, 0});
            continue;
        }
        const auto start = detail::Clock::now();
        Intersector x = Intersector::build(method, index, {caps.instant});
        built.push_back({method, std::move(x), index_ns + detail::elapsed_ns(start)});
    }

    for (std::size_t m : pattern_lengths) {
        for (const auto& b : built) {
            if (!b.x) out.push_back({b.method, n, m, 0, {}, {}, {}});
        }
        for (std::size_t trial = 0; trial < trials; ++trial) {
            const std::size_t s = detail::sample_start(seed, m, trial, n);
            const std::string_view pattern = text.view().substr(s, m);
            for (const auto& b : built) {
                if (!b.x) continue;
                const auto start = detail::Clock::now();
                const auto occ = ecpm(index, *b.x, pattern);
                const std::int64_t ns = detail::elapsed_ns(start);
                out.push_back({b.method, n, m, trial, b.build_ns, ns, occ.size()});
            }
        }
    }
    return out;
}

/// Queries an all-identical text of length n. `pattern` must consist of one
/// repeated symbol; the text is that symbol repeated n times.
inline std::vector<BenchRecord> bench_adversarial(std::size_t n, std::string_view pattern, std::size_t trials,
                                                  const Caps& caps = {}) {
    if (pattern.empty()) throw Error(ErrorCode::EmptyPattern, "pattern is empty");
    if (pattern.find_first_not_of(pattern.front()) != std::string_view::npos) {
        throw std::invalid_argument("adversarial pattern must use a single symbol");
    }
    const Text text = Text::from_bytes(std::string(n, pattern.front()));
    const std::vector<IntersectorKind> methods = {IntersectorKind::Inverse, IntersectorKind::Root,
                                                  IntersectorKind::Log};
    const auto index_start = detail::Clock::now();
    const SuffixIndex index = SuffixIndex::build(text);
    const std::int64_t index_ns = detail::elapsed_ns(index_start);

    std::vector<BenchRecord> out;
    std::vector<std::pair<Intersector, std::int64_t>> built;
    for (IntersectorKind method : methods) {
        if (n > caps.for_method(method)) {
            out.push_back({method, n, pattern.size(), 0, {}, {}, {}});
            continue;
        }
        const auto start = detail::Clock::now();
        Intersector x = Intersector::build(method, index, {caps.instant});
        built.emplace_back(std::move(x), index_ns + detail::elapsed_ns(start));
    }
    for (std::size_t trial = 0; trial < trials; ++trial) {
        for (const auto& [x, build_ns] : built) {
            const auto start = detail::Clock::now();
            const auto occ = ecpm(index, x, pattern);
            const std::int64_t ns = detail::elapsed_ns(start);
            out.push_back({x.kind(), n, pattern.size(), trial, build_ns, ns, occ.size()});
        }
    }
    return out;
}

/// Mean range widths by pattern length. Every length uses prefixes of the same
/// sampled text windows, so longer patterns refine shorter ones.
inline std::vector<RangeProfilePoint> range_profile(const SuffixIndex& index,
                                                    const std::vector<std::size_t>& pattern_lengths,
                                                    std::size_t samples, std::uint64_t seed) {
    if (samples == 0) throw std::invalid_argument("range_profile needs at least one sample");
    std::vector<RangeProfilePoint> out;
    if (pattern_lengths.empty()) return out;
    const std::size_t longest = *std::max_element(pattern_lengths.begin(), pattern_lengths.end());
    if (longest > index.n()) throw Error(ErrorCode::PatternTooLong, "pattern length exceeds n");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, index.n() - longest);
    std::vector<std::size_t> starts(samples);
    for (auto& s : starts) s = pick(rng);

    const std::string_view text = index.text().view();
    for (std::size_t m : pattern_lengths) {
        if (m == 0) throw Error(ErrorCode::EmptyPattern, "pattern length 0");
        double rt_sum = 0;
        double rr_sum = 0;
        double full_sum = 0;
        for (std::size_t s : starts) {
            for (const auto& split : split_ranges(index, text.substr(s, m))) {
                rt_sum += static_cast<double>(split.rt.size());
                rr_sum += static_cast<double>(split.rr.size());
                if (split.k == m) full_sum += static_cast<double>(split.rt.size());
            }
        }
        const double splits = static_cast<double>(samples * m);
        out.push_back({m, rt_sum / splits, rr_sum / splits, full_sum / static_cast<double>(samples), samples});
    }
    return out;
}

inline std::vector<RangeProfilePoint> range_profile(std::size_t n, const std::vector<std::size_t>& pattern_lengths,
                                                    std::size_t samples, std::uint64_t seed) {
    const SuffixIndex index = SuffixIndex::build(random_dna(n, seed));
    return range_profile(index, pattern_lengths, samples, seed);
}

/// Mean over trials per (method, n, m); skipped records are counted separately.
struct Summary {
    IntersectorKind method = IntersectorKind::Inverse;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t trials = 0;
    double mean_build_ns = 0;
    double mean_query_ns = 0;
    std::uint64_t matches = 0;
    bool skipped = false;
};

inline std::vector<Summary> summarize(const std::vector<BenchRecord>& records) {
    std::map<std::tuple<std::size_t, std::size_t, int>, Summary> groups;
    for (const auto& r : records) {
        auto& s = groups[{r.n, r.m, static_cast<int>(r.method)}];
        s.method = r.method;
        s.n = r.n;
        s.m = r.m;
        if (r.skipped()) {
            s.skipped = true;
            continue;
        }
        ++s.trials;
        s.mean_build_ns += static_cast<double>(*r.build_ns);
        if (r.query_ns) s.mean_query_ns += static_cast<double>(*r.query_ns);
        if (r.matches) s.matches = *r.matches;
    }
    std::vector<Summary> out;
    for (auto& [key, s] : groups) {
        if (s.trials > 0) {
            s.mean_build_ns /= static_cast<double>(s.trials);
            s.mean_query_ns /= static_cast<double>(s.trials);
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace cpmx::bench
