// Copyright 2026 The cpmx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cpmx/error.hpp"
#include "cpmx/intersector.hpp"
#include "cpmx/suffix_index.hpp"
#include "cpmx/text.hpp"

namespace cpmx {

/// One match: T[start, start + m) equals rotation_string(P, rotation).
struct Occurrence {
    Pos start = 0;
    std::size_t rotation = 0;

    friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

/// P[k..m) ++ P[0..k): the first k symbols moved to the end.
inline std::string rotation_string(std::string_view pattern, std::size_t k) {
    if (k >= pattern.size()) {
        throw Error(ErrorCode::InvalidRange, "rotation index out of range");
    }
    std::string out(pattern.substr(k));
    out.append(pattern.substr(0, k));
    return out;
}

/// The two rank ranges searched for split k: p_f = P[0..k) on the T side and
/// reverse(P[k..m)) on the R side.
struct SplitRanges {
    std::size_t k = 0;
    SaRange rt;
    SaRange rr;
};

namespace detail {

inline void check_pattern(std::size_t n, std::string_view pattern) {
    if (pattern.empty()) throw Error(ErrorCode::EmptyPattern, "pattern is empty");
    if (pattern.size() > n) {
        throw Error(ErrorCode::PatternTooLong, "pattern length " + std::to_string(pattern.size()) +
                                                   " exceeds text length " + std::to_string(n));
    }
    if (pattern.find(static_cast<char>(kSentinel)) != std::string_view::npos) {
        throw Error(ErrorCode::InvalidSymbol, "pattern contains the sentinel byte");
    }
}

inline void finish(std::vector<Occurrence>& occ, bool dedup) {
    std::sort(occ.begin(), occ.end());
    if (dedup) {
        occ.erase(std::unique(occ.begin(), occ.end(),
                              [](const Occurrence& a, const Occurrence& b) { return a.start == b.start; }),
                  occ.end());
    }
}

}  // namespace detail

/// Ranges for every split k = 1..m. k = m leaves p_r empty, so its R range is
/// the full rank space and the split finds P itself.
inline std::vector<SplitRanges> split_ranges(const SuffixIndex& index, std::string_view pattern) {
    detail::check_pattern(index.n(), pattern);
    const std::size_t m = pattern.size();
    std::vector<SplitRanges> out;
    out.reserve(m);
    std::string rev_tail;
    for (std::size_t k = 1; k <= m; ++k) {
        rev_tail.assign(pattern.rbegin(), pattern.rbegin() + static_cast<std::ptrdiff_t>(m - k));
        out.push_back({k, index.find_range(Side::T, pattern.substr(0, k)), index.find_range(Side::R, rev_tail)});
    }
    return out;
}

/// Every occurrence of every rotation of `pattern`, sorted by (start, rotation).
/// A periodic pattern reports each start once per matching rotation unless
/// `dedup` is set, which keeps one entry (the lowest rotation) per start.
template <class X>
    requires RangeIntersector<X> || std::same_as<X, Intersector>
std::vector<Occurrence> ecpm(const SuffixIndex& index, const X& intersector, std::string_view pattern,
                             bool dedup = false) {
    if (intersector.index().id() != index.id()) {
        throw Error(ErrorCode::IndexMismatch, "intersector was built for a different index");
    }
    const std::size_t m = pattern.size();
    std::vector<Occurrence> occ;
    for (const auto& split : split_ranges(index, pattern)) {
        const std::size_t tail = m - split.k;
        for (Pos c : intersector.query(split.rt, split.rr)) {
            // c >= tail because label c spells a T-prefix ending in p_r.
            occ.push_back({c - tail, split.k % m});
        }
    }
    detail::finish(occ, dedup);
    return occ;
}

/// Direct comparison of every rotation at every text offset. O(m^2 n).
inline std::vector<Occurrence> naive_ecpm(const Text& text, std::string_view pattern, bool dedup = false) {
    detail::check_pattern(text.size(), pattern);
    const std::string_view t = text.view();
    const std::size_t m = pattern.size();
    std::vector<Occurrence> occ;
    for (std::size_t k = 0; k < m; ++k) {
        const std::string rot = rotation_string(pattern, k);
        for (std::size_t s = 0; s + m <= t.size(); ++s) {
            std::size_t i = 0;
            while (i < m && t[s + i] == rot[i]) ++i;
            if (i == m) occ.push_back({s, k});
        }
    }
    detail::finish(occ, dedup);
    return occ;
}

}  // namespace cpmx
