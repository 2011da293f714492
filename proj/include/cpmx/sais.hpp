// Copyright 2026 The cpmx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace cpmx::detail {

/// Suffix array by induced sorting (SA-IS). `s` holds symbols in [0, upper];
/// no sentinel convention is assumed, every suffix of `s` is ranked.
template <class Int>
std::vector<Int> sa_is(std::span<const Int> s, Int upper) {
    const auto n = static_cast<Int>(s.size());
    if (n == 0) return {};
    if (n == 1) return {0};
    if (n == 2) {
        if (s[0] < s[1]) return {0, 1};
        return {1, 0};
    }

    std::vector<Int> sa(static_cast<std::size_t>(n));
    // true = S-type
    std::vector<bool> ls(static_cast<std::size_t>(n), false);
    for (Int i = n - 2; i >= 0; --i) {
        ls[i] = (s[i] == s[i + 1]) ? ls[i + 1] : (s[i] < s[i + 1]);
    }

    // sum_l[c]: first slot of bucket c; sum_s[c]: first S-slot of bucket c.
    std::vector<Int> sum_l(static_cast<std::size_t>(upper) + 1, 0);
    std::vector<Int> sum_s(static_cast<std::size_t>(upper) + 1, 0);
    for (Int i = 0; i < n; ++i) {
        if (!ls[i]) {
            ++sum_s[s[i]];
        } else {
            ++sum_l[s[i] + 1];
        }
    }
    for (Int c = 0; c <= upper; ++c) {
        sum_s[c] += sum_l[c];
        if (c < upper) sum_l[c + 1] += sum_s[c];
    }

    std::vector<Int> buf(static_cast<std::size_t>(upper) + 1);
    auto induce = [&](const std::vector<Int>& lms) {
        std::fill(sa.begin(), sa.end(), Int{-1});
        std::copy(sum_s.begin(), sum_s.end(), buf.begin());
        for (Int d : lms) {
            if (d == n) continue;
            sa[buf[s[d]]++] = d;
        }
        std::copy(sum_l.begin(), sum_l.end(), buf.begin());
        sa[buf[s[n - 1]]++] = n - 1;
        for (Int i = 0; i < n; ++i) {
            const Int v = sa[i];
            if (v >= 1 && !ls[v - 1]) {
                sa[buf[s[v - 1]]++] = v - 1;
            }
        }
        std::copy(sum_l.begin(), sum_l.end(), buf.begin());
        for (Int i = n - 1; i >= 0; --i) {
            const Int v = sa[i];
            if (v >= 1 && ls[v - 1]) {
                sa[--buf[s[v - 1] + 1]] = v - 1;
            }
        }
    };

    std::vector<Int> lms_map(static_cast<std::size_t>(n) + 1, Int{-1});
    Int m = 0;
    for (Int i = 1; i < n; ++i) {
        if (!ls[i - 1] && ls[i]) lms_map[i] = m++;
    }
    std::vector<Int> lms;
    lms.reserve(static_cast<std::size_t>(m));
    for (Int i = 1; i < n; ++i) {
        if (!ls[i - 1] && ls[i]) lms.push_back(i);
    }

    induce(lms);

    if (m > 0) {
        std::vector<Int> sorted_lms;
        sorted_lms.reserve(static_cast<std::size_t>(m));
        for (Int v : sa) {
            if (lms_map[v] != -1) sorted_lms.push_back(v);
        }

        // Name LMS substrings; equal substrings share a name.
        std::vector<Int> rec_s(static_cast<std::size_t>(m));
        Int rec_upper = 0;
        rec_s[lms_map[sorted_lms[0]]] = 0;
        for (Int i = 1; i < m; ++i) {
            Int l = sorted_lms[i - 1];
            Int r = sorted_lms[i];
            const Int end_l = (lms_map[l] + 1 < m) ? lms[lms_map[l] + 1] : n;
            const Int end_r = (lms_map[r] + 1 < m) ? lms[lms_map[r] + 1] : n;
            bool same = true;
            if (end_l - l != end_r - r) {
                same = false;
            } else {
                while (l < end_l) {
                    if (s[l] != s[r]) break;
                    ++l;
                    ++r;
                }
                if (l == n || s[l] != s[r]) same = false;
            }
            if (!same) ++rec_upper;
            rec_s[lms_map[sorted_lms[i]]] = rec_upper;
        }

        const auto rec_sa = sa_is<Int>(std::span<const Int>(rec_s), rec_upper);
        for (Int i = 0; i < m; ++i) {
            sorted_lms[i] = lms[rec_sa[i]];
        }
        induce(sorted_lms);
    }
    return sa;
}

/// Suffix array of `bytes` followed by a 0x00 sentinel (length bytes.size()+1).
/// When `reversed` is set, the bytes are read back to front.
template <class ByteRange>
std::vector<std::uint64_t> suffix_array_with_sentinel(const ByteRange& bytes, bool reversed) {
    const std::size_t n = bytes.size();
    std::vector<std::uint64_t> out(n + 1);

    auto run = [&]<class Int>() {
        std::vector<Int> s(n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t src = reversed ? n - 1 - i : i;
            s[i] = static_cast<Int>(static_cast<unsigned char>(bytes[src]));
        }
        s[n] = 0;
        const auto sa = sa_is<Int>(std::span<const Int>(s), Int{255});
        std::transform(sa.begin(), sa.end(), out.begin(), [](Int v) { return static_cast<std::uint64_t>(v); });
    };

    if (n + 1 < static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max())) {
        run.template operator()<std::int32_t>();
    } else {
        run.template operator()<std::int64_t>();
    }
    return out;
}

}  // namespace cpmx::detail
