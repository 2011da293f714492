// Copyright 2026 The cpmx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cpmx/error.hpp"
#include "cpmx/suffix_index.hpp"

namespace cpmx {

enum class IntersectorKind : std::uint8_t { Instant, Log, Root, Inverse };

constexpr std::string_view to_string(IntersectorKind k) noexcept {
    switch (k) {
        case IntersectorKind::Instant: return "instant";
        case IntersectorKind::Log: return "log";
        case IntersectorKind::Root: return "root";
        case IntersectorKind::Inverse: return "inverse";
    }
    return "unknown";
}

inline IntersectorKind parse_intersector_kind(std::string_view name) {
    for (auto k : {IntersectorKind::Instant, IntersectorKind::Log, IntersectorKind::Root, IntersectorKind::Inverse}) {
        if (to_string(k) == name) return k;
    }
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

/// A precomputed structure that reports the values shared by a T-side range
/// and an R-side range of the same SuffixIndex, ascending and without duplicates.
template <class X>
concept RangeIntersector = requires(const X& x, const SaRange& r) {
    { X::kind } -> std::convertible_to<IntersectorKind>;
    { x.index() } -> std::same_as<const SuffixIndex&>;
    { x.query(r, r) } -> std::same_as<std::vector<Pos>>;
    { x.memory_bytes() } -> std::convertible_to<std::size_t>;
};

namespace detail {

inline void check_ranges(const SuffixIndex& index, const SaRange& rt, const SaRange& rr) {
    if (rt.owner != index.id() || rr.owner != index.id()) {
        throw Error(ErrorCode::IndexMismatch, "range was not produced by the intersector's index");
    }
    if (rt.side != Side::T || rr.side != Side::R) {
        throw Error(ErrorCode::InvalidRange, "expected a T-side range and an R-side range");
    }
    if (rt.lo > rt.hi || rt.hi > index.ranks() || rr.lo > rr.hi || rr.hi > index.ranks()) {
        throw Error(ErrorCode::InvalidRange, "range outside the index's rank space");
    }
}

}  // namespace detail
}  // namespace cpmx
