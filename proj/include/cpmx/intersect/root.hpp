// Copyright 2026 The cpmx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "cpmx/intersect/common.hpp"

namespace cpmx {

/// Block decomposition of both rank spaces into b ~ n^(1/3) blocks of width w.
/// Every (T-block, R-block) pair stores its common values; elements of a query
/// range outside whole blocks are resolved through the inverse arrays.
class RootTable {
public:
    static constexpr IntersectorKind kind = IntersectorKind::Root;

    static std::size_t block_count_for(std::size_t n) {
        const auto b = static_cast<std::size_t>(std::llround(std::cbrt(static_cast<double>(n))));
        return std::max<std::size_t>(1, b);
    }

    explicit RootTable(const SuffixIndex& index)
        : index_(&index), blocks_(block_count_for(index.n())), width_((index.ranks() + blocks_ - 1) / blocks_) {
        const auto& sa_t = index.sa_t();
        const auto& labels_r = index.labels_r();
        offsets_.reserve(blocks_ * blocks_ + 1);
        offsets_.push_back(0);
        for (std::size_t a = 0; a < blocks_; ++a) {
            for (std::size_t c = 0; c < blocks_; ++c) {
                const std::size_t first = values_.size();
                for (Rank x = block_begin(a); x < block_end(a); ++x) {
                    for (Rank y = block_begin(c); y < block_end(c); ++y) {
                        if (sa_t[x] == labels_r[y]) values_.push_back(sa_t[x]);
                    }
                }
                std::sort(values_.begin() + static_cast<std::ptrdiff_t>(first), values_.end());
                offsets_.push_back(values_.size());
            }
        }
    }

    [[nodiscard]] const SuffixIndex& index() const noexcept { return *index_; }
    [[nodiscard]] std::size_t block_count() const noexcept { return blocks_; }
    [[nodiscard]] std::size_t block_width() const noexcept { return width_; }
    [[nodiscard]] std::size_t memory_bytes() const noexcept {
        return values_.capacity() * sizeof(Pos) + offsets_.capacity() * sizeof(std::size_t);
    }

    [[nodiscard]] Rank block_begin(std::size_t block) const noexcept {
        return std::min<Rank>(block * width_, index_->ranks());
    }
    [[nodiscard]] Rank block_end(std::size_t block) const noexcept {
        return std::min<Rank>((block + 1) * width_, index_->ranks());
    }

    /// Common values of T-block `a` and R-block `c`, ascending.
    [[nodiscard]] std::span<const Pos> block_pair(std::size_t a, std::size_t c) const {
        const std::size_t slot = a * blocks_ + c;
        return {values_.data() + offsets_[slot], offsets_[slot + 1] - offsets_[slot]};
    }

    [[nodiscard]] std::vector<Pos> query(const SaRange& rt, const SaRange& rr) const {
        detail::check_ranges(*index_, rt, rr);
        std::vector<Pos> out;
        if (rt.empty() || rr.empty()) return out;

        const auto [t_first, t_last] = whole_blocks(rt);
        const auto [r_first, r_last] = whole_blocks(rr);
        const SaRange t_span = span_of(t_first, t_last, Side::T);
        const SaRange r_span = span_of(r_first, r_last, Side::R);

        // Whole-block x whole-block.
        for (std::size_t a = t_first; a < t_last; ++a) {
            for (std::size_t c = r_first; c < r_last; ++c) {
                const auto list = block_pair(a, c);
                out.insert(out.end(), list.begin(), list.end());
            }
        }

        const auto& sa_t = index_->sa_t();
        const auto& labels_r = index_->labels_r();
        const auto& inv_t = index_->inv_t();
        const auto& inv_r = index_->inv_r();

        // Loose T elements, checked against all of rr.
        auto loose_t = [&](Rank from, Rank to) {
            for (Rank r = from; r < to; ++r) {
                const Pos c = sa_t[r];
                if (rr.contains(inv_r[c])) out.push_back(c);
            }
        };
        // Loose R elements, checked only against rt's whole-block span; the
        // loose T elements above already cover the rest of rt.
        auto loose_r = [&](Rank from, Rank to) {
            for (Rank r = from; r < to; ++r) {
                const Pos c = labels_r[r];
                if (t_span.contains(inv_t[c])) out.push_back(c);
            }
        };

        if (t_span.empty()) {
            loose_t(rt.lo, rt.hi);
        } else {
            loose_t(rt.lo, t_span.lo);
            loose_t(t_span.hi, rt.hi);
            if (r_span.empty()) {
                loose_r(rr.lo, rr.hi);
            } else {
                loose_r(rr.lo, r_span.lo);
                loose_r(r_span.hi, rr.hi);
            }
        }

        std::sort(out.begin(), out.end());
        return out;
    }

private:
    /// Blocks [first, last) lying entirely inside `range`.
    [[nodiscard]] std::pair<std::size_t, std::size_t> whole_blocks(const SaRange& range) const noexcept {
        const std::size_t first = (range.lo + width_ - 1) / width_;
        std::size_t last = range.hi == index_->ranks() ? blocks_ : range.hi / width_;
        last = std::min(last, blocks_);
        if (first >= last) return {0, 0};
        return {first, last};
    }

    [[nodiscard]] SaRange span_of(std::size_t first, std::size_t last, Side side) const noexcept {
        if (first >= last) return SaRange{0, 0, side, index_->id()};
        return SaRange{block_begin(first), block_end(last - 1), side, index_->id()};
    }

    const SuffixIndex* index_;
    std::size_t blocks_;
    std::size_t width_;
    std::vector<Pos> values_;
    std::vector<std::size_t> offsets_;
};

}  // namespace cpmx
