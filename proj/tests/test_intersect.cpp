// Copyright 2026 The cpmx Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cpmx/intersector.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

namespace {

using cpmx::ErrorCode;
using cpmx::InstantTable;
using cpmx::InverseTable;
using cpmx::LogTable;
using cpmx::RootTable;
using cpmx::Side;
using cpmx::SuffixIndex;
using cpmx::Text;
using cpmx::testing::brute_intersection;
using cpmx::testing::error_code_of;
using Vec = std::vector<std::uint64_t>;

SuffixIndex build(const std::string& s) { return SuffixIndex::build(Text::from_bytes(s)); }

template <class X>
Vec query(const X& x, const SuffixIndex& ix, std::uint64_t i, std::uint64_t j, std::uint64_t k, std::uint64_t l) {
    return x.query(ix.range(Side::T, i, j), ix.range(Side::R, k, l));
}

// ---- Instant ---------------------------------------------------------------

TEST(InstantTable, BananaEntry) {
    const auto ix = build("banana");
    const InstantTable x(ix);
    const auto e = x.entry(2, 4, 5, 7);
    EXPECT_EQ(Vec(e.begin(), e.end()), (Vec{3}));
    EXPECT_TRUE(x.entry(3, 3, 0, 7).empty());
    EXPECT_TRUE(x.entry(0, 7, 4, 4).empty());
    EXPECT_EQ(query(x, ix, 0, 7, 0, 7), (Vec{0, 1, 2, 3, 4, 5, 6}));
}

TEST(InstantTable, EntriesMatchBruteForceExhaustively) {
    std::mt19937_64 rng(3);
    const std::string s = cpmx::testing::random_string(rng, 24, "ab");
    const auto ix = build(s);
    const InstantTable x(ix);
    const std::uint64_t r = ix.ranks();
    for (std::uint64_t i = 0; i <= r; ++i) {
        for (std::uint64_t j = i; j <= r; ++j) {
            for (std::uint64_t k = 0; k <= r; ++k) {
                for (std::uint64_t l = k; l <= r; ++l) {
                    ASSERT_EQ(query(x, ix, i, j, k, l), brute_intersection(ix.sa_t(), ix.labels_r(), i, j, k, l));
                }
            }
        }
    }
}

TEST(InstantTable, BuildsAtTwoHundred) {
    const auto ix = SuffixIndex::build(cpmx::random_dna(200, 1));
    const InstantTable x(ix);
    EXPECT_EQ(query(x, ix, 0, ix.ranks(), 0, ix.ranks()).size(), ix.ranks());
}

TEST(InstantTable, RefusesAboveCap) {
    const auto ix = SuffixIndex::build(cpmx::random_dna(300, 1));
    EXPECT_EQ(error_code_of([&] { InstantTable x(ix); }), ErrorCode::TooLargeForInstant);
    EXPECT_EQ(error_code_of([&] { InstantTable x(ix, 299); }), ErrorCode::TooLargeForInstant);
    EXPECT_NO_THROW(InstantTable(ix, 300));
}

// ---- Log -------------------------------------------------------------------

TEST(LogTable, BananaNodes) {
    const auto ix = build("banana");
    const LogTable x(ix);
    EXPECT_EQ(x.leaves(), 8U);
    const auto all = x.pair_list(LogTable::root(), LogTable::root());
    EXPECT_EQ(Vec(all.begin(), all.end()), (Vec{0, 1, 2, 3, 4, 5, 6}));
    // T rank 4 holds position 0.
    const auto one = x.pair_list(x.leaf(4), LogTable::root());
    EXPECT_EQ(Vec(one.begin(), one.end()), (Vec{0}));
    // Padding leaf.
    EXPECT_TRUE(x.pair_list(x.leaf(7), LogTable::root()).empty());
}

TEST(LogTable, LeafPairsHoldAtMostOneValue) {
    const auto ix = build("mississippi");
    const LogTable x(ix);
    std::size_t total = 0;
    for (std::uint64_t a = 0; a < ix.ranks(); ++a) {
        for (std::uint64_t c = 0; c < ix.ranks(); ++c) {
            const auto list = x.pair_list(x.leaf(a), x.leaf(c));
            ASSERT_LE(list.size(), 1U);
            if (!list.empty()) {
                EXPECT_EQ(list[0], ix.sa_t()[a]);
                EXPECT_EQ(list[0], ix.labels_r()[c]);
            }
            total += list.size();
        }
    }
    EXPECT_EQ(total, ix.ranks());
}

TEST(LogTable, NodeListsMatchBruteForce) {
    const auto ix = build("abracadabra");
    const LogTable x(ix);
    for (LogTable::Node u = 1; u < 2 * x.leaves(); ++u) {
        for (LogTable::Node v = 1; v < 2 * x.leaves(); ++v) {
            const auto [ub, ue] = x.node_span(u);
            const auto [vb, ve] = x.node_span(v);
            const auto clip = [&](std::uint64_t e) { return std::min<std::uint64_t>(e, ix.ranks()); };
            const Vec want = brute_intersection(ix.sa_t(), ix.labels_r(), clip(ub), std::max(clip(ub), clip(ue)),
                                                clip(vb), std::max(clip(vb), clip(ve)));
            const auto got = x.pair_list(u, v);
            ASSERT_EQ(Vec(got.begin(), got.end()), want) << u << "," << v;
        }
    }
}

TEST(LogTable, DecompositionIsCanonical) {
    std::mt19937_64 rng(17);
    for (std::size_t n : {1U, 2U, 6U, 7U, 100U, 1000U}) {
        const auto ix = SuffixIndex::build(cpmx::random_dna(n, n));
        const LogTable x(ix);
        const auto log_n = static_cast<std::size_t>(std::countr_zero(x.leaves()));
        for (int trial = 0; trial < 200; ++trial) {
            std::uint64_t lo = rng() % (ix.ranks() + 1);
            std::uint64_t hi = rng() % (ix.ranks() + 1);
            if (lo > hi) std::swap(lo, hi);
            const auto nodes = x.decompose(ix.range(Side::T, lo, hi));
            ASSERT_LE(nodes.size(), std::max<std::size_t>(2 * log_n, 1));
            std::vector<bool> covered(ix.ranks(), false);
            for (auto node : nodes) {
                const auto [b, e] = x.node_span(node);
                for (auto r = b; r < e; ++r) {
                    ASSERT_TRUE(r >= lo && r < hi);
                    ASSERT_FALSE(covered[r]);
                    covered[r] = true;
                }
            }
            ASSERT_EQ(static_cast<std::uint64_t>(std::count(covered.begin(), covered.end(), true)), hi - lo);
        }
    }
}

// ---- Root ------------------------------------------------------------------

TEST(RootTable, BlockParameters) {
    const auto banana = build("banana");
    const RootTable small(banana);
    EXPECT_EQ(small.block_count(), 2U);
    EXPECT_EQ(small.block_width(), 4U);

    const auto ix = SuffixIndex::build(cpmx::random_dna(1000, 5));
    const RootTable x(ix);
    EXPECT_EQ(x.block_count(), 10U);
    EXPECT_EQ(x.block_width(), 101U);
    std::size_t stored = 0;
    for (std::size_t a = 0; a < x.block_count(); ++a) {
        for (std::size_t c = 0; c < x.block_count(); ++c) {
            const auto list = x.block_pair(a, c);
            EXPECT_TRUE(std::is_sorted(list.begin(), list.end()));
            stored += list.size();
        }
    }
    EXPECT_EQ(stored, ix.ranks());
}

TEST(RootTable, BlockPairsMatchBruteForce) {
    const auto ix = SuffixIndex::build(cpmx::random_dna(300, 8));
    const RootTable x(ix);
    for (std::size_t a = 0; a < x.block_count(); ++a) {
        for (std::size_t c = 0; c < x.block_count(); ++c) {
            const auto got = x.block_pair(a, c);
            ASSERT_EQ(Vec(got.begin(), got.end()),
                      brute_intersection(ix.sa_t(), ix.labels_r(), x.block_begin(a), x.block_end(a),
                                         x.block_begin(c), x.block_end(c)));
        }
    }
}

// ---- All methods -----------------------------------------------------------

template <class X>
class AnyIntersector : public ::testing::Test {};

using Tables = ::testing::Types<InstantTable, LogTable, RootTable, InverseTable>;
TYPED_TEST_SUITE(AnyIntersector, Tables);

TYPED_TEST(AnyIntersector, MatchesBruteForceOnRandomRanges) {
    std::mt19937_64 rng(41);
    for (int text_trial = 0; text_trial < 20; ++text_trial) {
        const std::string alpha = text_trial % 2 ? "ACGT" : "ab";
        const auto ix = build(cpmx::testing::random_string(rng, 1 + rng() % 200, alpha));
        const TypeParam x(ix);
        for (int q = 0; q < 200; ++q) {
            std::uint64_t i = rng() % (ix.ranks() + 1), j = rng() % (ix.ranks() + 1);
            std::uint64_t k = rng() % (ix.ranks() + 1), l = rng() % (ix.ranks() + 1);
            if (i > j) std::swap(i, j);
            if (k > l) std::swap(k, l);
            ASSERT_EQ(query(x, ix, i, j, k, l), brute_intersection(ix.sa_t(), ix.labels_r(), i, j, k, l));
        }
    }
}

TYPED_TEST(AnyIntersector, SortedWithoutDuplicatesOnIdenticalText) {
    const auto ix = build(std::string(200, 'A'));
    const TypeParam x(ix);
    std::mt19937_64 rng(43);
    for (int q = 0; q < 300; ++q) {
        std::uint64_t i = rng() % (ix.ranks() + 1), j = rng() % (ix.ranks() + 1);
        std::uint64_t k = rng() % (ix.ranks() + 1), l = rng() % (ix.ranks() + 1);
        if (i > j) std::swap(i, j);
        if (k > l) std::swap(k, l);
        const Vec got = query(x, ix, i, j, k, l);
        ASSERT_TRUE(std::adjacent_find(got.begin(), got.end(), std::greater_equal<>()) == got.end());
        ASSERT_EQ(got, brute_intersection(ix.sa_t(), ix.labels_r(), i, j, k, l));
    }
}

TYPED_TEST(AnyIntersector, MonotoneInRanges) {
    std::mt19937_64 rng(47);
    const auto ix = build(cpmx::testing::random_string(rng, 150, "ACGT"));
    const TypeParam x(ix);
    for (int q = 0; q < 200; ++q) {
        std::uint64_t i = rng() % (ix.ranks() + 1), j = rng() % (ix.ranks() + 1);
        std::uint64_t k = rng() % (ix.ranks() + 1), l = rng() % (ix.ranks() + 1);
        if (i > j) std::swap(i, j);
        if (k > l) std::swap(k, l);
        const Vec inner = query(x, ix, i, j, k, l);
        const Vec outer = query(x, ix, i > 0 ? i - 1 : 0, j, k, std::min<std::uint64_t>(l + 1, ix.ranks()));
        ASSERT_TRUE(std::includes(outer.begin(), outer.end(), inner.begin(), inner.end()));
    }
}

TYPED_TEST(AnyIntersector, FullRangesGiveEveryPosition) {
    const auto ix = build("abracadabra");
    const TypeParam x(ix);
    Vec all(ix.ranks());
    for (std::uint64_t p = 0; p < all.size(); ++p) all[p] = p;
    EXPECT_EQ(x.query(ix.full_range(Side::T), ix.full_range(Side::R)), all);
    EXPECT_TRUE(x.query(ix.range(Side::T, 2, 2), ix.full_range(Side::R)).empty());
}

TYPED_TEST(AnyIntersector, RejectsForeignOrMisplacedRanges) {
    const auto ix = build("banana");
    const auto other = build("banana");
    const TypeParam x(ix);
    EXPECT_EQ(error_code_of([&] { (void)x.query(other.full_range(Side::T), ix.full_range(Side::R)); }),
              ErrorCode::IndexMismatch);
    EXPECT_EQ(error_code_of([&] { (void)x.query(ix.full_range(Side::R), ix.full_range(Side::T)); }),
              ErrorCode::InvalidRange);
    cpmx::SaRange bad = ix.full_range(Side::T);
    bad.hi = 99;
    EXPECT_EQ(error_code_of([&] { (void)x.query(bad, ix.full_range(Side::R)); }), ErrorCode::InvalidRange);
}

TEST(Intersector, VariantDispatchAgrees) {
    const auto ix = SuffixIndex::build(cpmx::random_dna(150, 77));
    const auto rt = ix.range(Side::T, 10, 90);
    const auto rr = ix.range(Side::R, 40, 140);
    const Vec want = brute_intersection(ix.sa_t(), ix.labels_r(), 10, 90, 40, 140);
    for (auto kind : {cpmx::IntersectorKind::Instant, cpmx::IntersectorKind::Log, cpmx::IntersectorKind::Root,
                      cpmx::IntersectorKind::Inverse}) {
        const auto x = cpmx::Intersector::build(kind, ix);
        EXPECT_EQ(x.kind(), kind);
        EXPECT_EQ(cpmx::query_common(x, rt, rr), want) << cpmx::to_string(kind);
        EXPECT_GT(x.memory_bytes() + (kind == cpmx::IntersectorKind::Inverse ? 1 : 0), 0U);
    }
}

TEST(Intersector, KindNames) {
    for (auto kind : {cpmx::IntersectorKind::Instant, cpmx::IntersectorKind::Log, cpmx::IntersectorKind::Root,
                      cpmx::IntersectorKind::Inverse}) {
        EXPECT_EQ(cpmx::parse_intersector_kind(cpmx::to_string(kind)), kind);
    }
    EXPECT_THROW((void)cpmx::parse_intersector_kind("fast"), std::invalid_argument);
}

}  // namespace
