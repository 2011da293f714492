// Copyright 2026 The cpmx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "cpmx/intersect/common.hpp"
#include "cpmx/intersect/instant.hpp"
#include "cpmx/intersect/inverse.hpp"
#include "cpmx/intersect/log.hpp"
#include "cpmx/intersect/root.hpp"

namespace cpmx {

struct IntersectorOptions {
    std::size_t instant_max_n = InstantTable::kDefaultMaxN;
};

/// Runtime-selected intersector. The referenced SuffixIndex must outlive it
/// and must not be moved while it is in use.
class Intersector {
public:
    using Variant = std::variant<InstantTable, LogTable, RootTable, InverseTable>;

    static Intersector build(IntersectorKind kind, const SuffixIndex& index, const IntersectorOptions& opts = {}) {
        switch (kind) {
            case IntersectorKind::Instant: return Intersector(InstantTable(index, opts.instant_max_n));
            case IntersectorKind::Log: return Intersector(LogTable(index));
            case IntersectorKind::Root: return Intersector(RootTable(index));
            case IntersectorKind::Inverse: break;
        }
        return Intersector(InverseTable(index));
    }

    template <RangeIntersector X>
    explicit Intersector(X table) : impl_(std::move(table)) {}

    [[nodiscard]] IntersectorKind kind() const noexcept {
        return std::visit([](const auto& x) { return std::decay_t<decltype(x)>::kind; }, impl_);
    }
    [[nodiscard]] const SuffixIndex& index() const noexcept {
        return std::visit([](const auto& x) -> const SuffixIndex& { return x.index(); }, impl_);
    }
    [[nodiscard]] std::size_t memory_bytes() const noexcept {
        return std::visit([](const auto& x) { return x.memory_bytes(); }, impl_);
    }
    [[nodiscard]] std::vector<Pos> query(const SaRange& rt, const SaRange& rr) const {
        return std::visit([&](const auto& x) { return x.query(rt, rr); }, impl_);
    }

    [[nodiscard]] const Variant& variant() const noexcept { return impl_; }

private:
    Variant impl_;
};

/// Values v with inv_t[v] in rt and inv_r[v] in rr, ascending.
template <RangeIntersector X>
std::vector<Pos> query_common(const X& x, const SaRange& rt, const SaRange& rr) {
    return x.query(rt, rr);
}

inline std::vector<Pos> query_common(const Intersector& x, const SaRange& rt, const SaRange& rr) {
    return x.query(rt, rr);
}

}  // namespace cpmx
