// Copyright 2026 The cpmx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <vector>

#include "cpmx/intersect/common.hpp"

namespace cpmx {

/// Intersects by walking the smaller range and checking where each value lands
/// in the opposite array via its inverse permutation. No tables of its own.
class InverseTable {
public:
    static constexpr IntersectorKind kind = IntersectorKind::Inverse;

    explicit InverseTable(const SuffixIndex& index) : index_(&index) {}

    [[nodiscard]] const SuffixIndex& index() const noexcept { return *index_; }
    [[nodiscard]] std::size_t memory_bytes() const noexcept { return 0; }

    [[nodiscard]] std::vector<Pos> query(const SaRange& rt, const SaRange& rr) const {
        detail::check_ranges(*index_, rt, rr);
        std::vector<Pos> out;
        if (rt.empty() || rr.empty()) return out;

        const auto& sa_t = index_->sa_t();
        const auto& labels_r = index_->labels_r();
        const auto& inv_t = index_->inv_t();
        const auto& inv_r = index_->inv_r();
        if (rt.size() <= rr.size()) {
            for (Rank r = rt.lo; r < rt.hi; ++r) {
                const Pos c = sa_t[r];
                if (rr.contains(inv_r[c])) out.push_back(c);
            }
        } else {
            for (Rank r = rr.lo; r < rr.hi; ++r) {
                const Pos c = labels_r[r];
                if (rt.contains(inv_t[c])) out.push_back(c);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    const SuffixIndex* index_;
};

}  // namespace cpmx
