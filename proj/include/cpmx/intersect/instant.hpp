// Copyright 2026 The cpmx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cpmx/intersect/common.hpp"

namespace cpmx {

/// Answers for every quadruple of range endpoints, precomputed.
///
/// For a fixed T range [i, j), the answers for all R ranges [k, l) are slices of
/// one list: the R-rank-ordered values of [0, n+1) that also occur in [i, j).
/// Each (i, j) therefore stores that list once plus a prefix count per R rank,
/// and entry(i, j, k, l) is the slice between prefix[k] and prefix[l]. Building
/// the list extends [k, l) to [k, l+1) one element at a time and compares only
/// the new element against [i, j).
class InstantTable {
public:
    static constexpr IntersectorKind kind = IntersectorKind::Instant;
    static constexpr std::size_t kDefaultMaxN = 256;

    explicit InstantTable(const SuffixIndex& index, std::size_t max_n = kDefaultMaxN)
        : index_(&index), ranks_(index.ranks()) {
        if (index.n() > max_n) {
            throw Error(ErrorCode::TooLargeForInstant, "n = " + std::to_string(index.n()) +
                                                           " exceeds the instant table cap of " +
                                                           std::to_string(max_n));
        }
        build();
    }

    [[nodiscard]] const SuffixIndex& index() const noexcept { return *index_; }
    [[nodiscard]] std::size_t memory_bytes() const noexcept {
        return hits_.capacity() * sizeof(Pos) + prefix_.capacity() * sizeof(std::uint32_t) +
               hit_base_.capacity() * sizeof(std::size_t) + prefix_base_.capacity() * sizeof(std::size_t);
    }

    /// Stored answer for T ranks [i, j) and R ranks [k, l), in R-rank order.
    [[nodiscard]] std::span<const Pos> entry(Rank i, Rank j, Rank k, Rank l) const {
        if (i >= j || k >= l) return {};
        const std::size_t cell = i * (ranks_ + 1) + j;
        const std::uint32_t* prefix = prefix_.data() + prefix_base_[cell];
        return {hits_.data() + hit_base_[cell] + prefix[k], static_cast<std::size_t>(prefix[l] - prefix[k])};
    }

    [[nodiscard]] std::vector<Pos> query(const SaRange& rt, const SaRange& rr) const {
        detail::check_ranges(*index_, rt, rr);
        const auto stored = entry(rt.lo, rt.hi, rr.lo, rr.hi);
        std::vector<Pos> out(stored.begin(), stored.end());
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    void build() {
        const auto& sa_t = index_->sa_t();
        const auto& labels_r = index_->labels_r();
        const std::size_t cells = (ranks_ + 1) * (ranks_ + 1);
        hit_base_.assign(cells, 0);
        prefix_base_.assign(cells, 0);

        for (Rank i = 0; i < ranks_; ++i) {
            for (Rank j = i + 1; j <= ranks_; ++j) {
                const std::size_t cell = i * (ranks_ + 1) + j;
                hit_base_[cell] = hits_.size();
                prefix_base_[cell] = prefix_.size();
                std::uint32_t count = 0;
                prefix_.push_back(0);
                for (Rank l = 0; l < ranks_; ++l) {
                    const Pos candidate = labels_r[l];
                    for (Rank r = i; r < j; ++r) {
                        if (sa_t[r] == candidate) {
                            hits_.push_back(candidate);
                            ++count;
                            break;
                        }
                    }
                    prefix_.push_back(count);
                }
            }
        }
    }

    const SuffixIndex* index_;
    std::size_t ranks_;
    std::vector<Pos> hits_;
    std::vector<std::uint32_t> prefix_;
    std::vector<std::size_t> hit_base_;
    std::vector<std::size_t> prefix_base_;
};

}  // namespace cpmx
