// Copyright 2026 The cpmx Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cpmx/suffix_index.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

namespace {

using cpmx::ErrorCode;
using cpmx::Side;
using cpmx::SuffixIndex;
using cpmx::Text;
using cpmx::testing::error_code_of;
using Vec = std::vector<std::uint64_t>;

SuffixIndex build(const std::string& s) { return SuffixIndex::build(Text::from_bytes(s)); }

TEST(SuffixIndex, BananaMatchesTableOne) {
    const auto ix = build("banana");
    EXPECT_EQ(ix.sa_t(), (Vec{6, 5, 3, 1, 0, 4, 2}));
    EXPECT_EQ(ix.labels_r(), (Vec{0, 2, 4, 6, 1, 3, 5}));
    EXPECT_TRUE(ix.inverses_consistent());
}

TEST(SuffixIndex, SingleSymbol) {
    const auto ix = build("a");
    EXPECT_EQ(ix.sa_t(), (Vec{1, 0}));
    EXPECT_EQ(ix.labels_r(), (Vec{0, 1}));
}

TEST(SuffixIndex, LabelCompletesTheText) {
    const std::string s = "mississippi";
    const auto ix = build(s);
    for (std::uint64_t r = 0; r < ix.ranks(); ++r) {
        const std::uint64_t label = ix.labels_r()[r];
        // rev-suffix spelled backwards is the prefix T[0..label).
        const std::string rev_suffix = cpmx::testing::r_suffix(s, label);
        EXPECT_EQ(std::string(rev_suffix.rbegin(), rev_suffix.rend()), s.substr(0, label));
    }
    for (std::uint64_t r = 0; r + 1 < ix.ranks(); ++r) {
        EXPECT_LT(cpmx::testing::t_suffix(s, ix.sa_t()[r]), cpmx::testing::t_suffix(s, ix.sa_t()[r + 1]));
        EXPECT_LT(cpmx::testing::r_suffix(s, ix.labels_r()[r]), cpmx::testing::r_suffix(s, ix.labels_r()[r + 1]));
    }
}

TEST(SuffixIndex, MatchesComparisonSortOnRandomTexts) {
    std::mt19937_64 rng(11);
    const std::vector<std::string> alphabets = {"a", "ab", "ACGT", "abcdefghijklmnopqrstuvwxyz"};
    for (int trial = 0; trial < 200; ++trial) {
        const auto& alpha = alphabets[trial % alphabets.size()];
        const std::string s = cpmx::testing::random_string(rng, 1 + rng() % 500, alpha);
        const auto ix = build(s);
        ASSERT_EQ(ix.sa_t(), cpmx::testing::naive_suffix_array(s)) << s;
        ASSERT_EQ(ix.labels_r(), cpmx::testing::naive_labels(s)) << s;
        ASSERT_TRUE(ix.inverses_consistent());
    }
}

TEST(SuffixIndex, FullByteAlphabet) {
    std::mt19937_64 rng(5);
    std::string s(3000, ' ');
    for (auto& c : s) c = static_cast<char>(1 + rng() % 255);
    const auto ix = build(s);
    EXPECT_EQ(ix.sa_t(), cpmx::testing::naive_suffix_array(s));
    EXPECT_EQ(ix.labels_r(), cpmx::testing::naive_labels(s));
}

TEST(SuffixIndex, RepetitiveTexts) {
    for (const std::string s : {std::string(1000, 'a'), std::string("ab").append(std::string(300, 'b')),
                                [] {
                                    std::string p;
                                    for (int i = 0; i < 200; ++i) p += "abaab";
                                    return p;
                                }()}) {
        const auto ix = build(s);
        EXPECT_EQ(ix.sa_t(), cpmx::testing::naive_suffix_array(s));
        EXPECT_EQ(ix.labels_r(), cpmx::testing::naive_labels(s));
    }
}

TEST(FindRange, BananaExamples) {
    const auto ix = build("banana");
    const auto ana = ix.find_range(Side::T, "ana");
    EXPECT_EQ(ana.lo, 2U);
    EXPECT_EQ(ana.hi, 4U);
    EXPECT_EQ(ix.sa_t()[2], 3U);
    EXPECT_EQ(ix.sa_t()[3], 1U);

    const auto na = ix.find_range(Side::R, "na");
    EXPECT_EQ(na.lo, 5U);
    EXPECT_EQ(na.hi, 7U);
    EXPECT_EQ(ix.labels_r()[5], 3U);
    EXPECT_EQ(ix.labels_r()[6], 5U);

    const auto all = ix.find_range(Side::T, "");
    EXPECT_EQ(all.lo, 0U);
    EXPECT_EQ(all.hi, 7U);
    EXPECT_TRUE(ix.find_range(Side::T, "x").empty());
    EXPECT_TRUE(ix.find_range(Side::T, "bananas").empty());
}

TEST(FindRange, AgreesWithLinearScan) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 500; ++trial) {
        const std::string s = cpmx::testing::random_string(rng, 1 + rng() % 200, "ACGT");
        const auto ix = build(s);
        std::string pattern;
        if (rng() % 2 == 0) {
            const std::size_t len = 1 + rng() % std::min<std::size_t>(s.size(), 8);
            const std::size_t at = rng() % (s.size() - len + 1);
            pattern = s.substr(at, len);
        } else {
            // Often absent; includes a symbol outside the text's alphabet.
            pattern = cpmx::testing::random_string(rng, 1 + rng() % 10, "ACGTN");
        }
        for (Side side : {Side::T, Side::R}) {
            const auto got = ix.find_range(side, pattern);
            const auto want = cpmx::testing::scan_range(ix.ranks(), pattern, [&](std::uint64_t r) {
                return side == Side::T ? cpmx::testing::t_suffix(s, ix.sa_t()[r])
                                       : cpmx::testing::r_suffix(s, ix.labels_r()[r]);
            });
            ASSERT_TRUE(want.contiguous);
            if (want.lo == want.hi) {
                ASSERT_TRUE(got.empty()) << s << " / " << pattern;
            } else {
                ASSERT_EQ(got.lo, want.lo) << s << " / " << pattern;
                ASSERT_EQ(got.hi, want.hi) << s << " / " << pattern;
            }
        }
    }
}

TEST(FindRange, Errors) {
    const auto ix = build("banana");
    EXPECT_EQ(error_code_of([&] { (void)ix.find_range(Side::T, std::string("a\0", 2)); }),
              ErrorCode::InvalidSymbol);
    EXPECT_EQ(error_code_of([&] { (void)ix.range(Side::T, 3, 2); }), ErrorCode::InvalidRange);
    EXPECT_EQ(error_code_of([&] { (void)ix.range(Side::T, 0, 8); }), ErrorCode::InvalidRange);
}

TEST(SuffixIndex, BindTextRejectsOtherText) {
    const auto built = build("banana");
    auto copy = SuffixIndex::from_arrays(built.n(), built.sa_t(), built.labels_r(), built.inv_t(), built.inv_r());
    EXPECT_FALSE(copy.has_text());
    EXPECT_EQ(error_code_of([&] { (void)copy.find_range(Side::T, "a"); }), ErrorCode::TextMismatch);
    EXPECT_EQ(error_code_of([&] { copy.bind_text(Text::from_bytes("bananas")); }), ErrorCode::TextMismatch);
    EXPECT_EQ(error_code_of([&] { copy.bind_text(Text::from_bytes("nanaba")); }), ErrorCode::TextMismatch);
    copy.bind_text(Text::from_bytes("banana"));
    EXPECT_EQ(copy.find_range(Side::T, "ana"), copy.range(Side::T, 2, 4));
}

TEST(SuffixIndex, FromArraysRejectsNonPermutations) {
    EXPECT_EQ(error_code_of([] { (void)SuffixIndex::from_arrays(1, {1, 0}, {0, 1}, {1, 0}, {1, 0}); }),
              ErrorCode::CorruptIndex);
    EXPECT_EQ(error_code_of([] { (void)SuffixIndex::from_arrays(1, {1, 1}, {0, 1}, {1, 0}, {0, 1}); }),
              ErrorCode::CorruptIndex);
}

}  // namespace
