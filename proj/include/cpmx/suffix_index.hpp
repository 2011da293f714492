// Copyright 2026 The cpmx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cpmx/error.hpp"
#include "cpmx/sais.hpp"
#include "cpmx/text.hpp"

namespace cpmx {

using Pos = std::uint64_t;
using Rank = std::uint64_t;

/// T-side ranks order suffixes of T$; R-side ranks order suffixes of rev(T)$.
enum class Side : std::uint8_t { T, R };

/// Half-open rank interval [lo, hi) in one of the two suffix arrays.
struct SaRange {
    Rank lo = 0;
    Rank hi = 0;
    Side side = Side::T;
    /// Identity of the SuffixIndex that produced the range.
    std::uint64_t owner = 0;

    [[nodiscard]] Rank size() const noexcept { return hi - lo; }
    [[nodiscard]] bool empty() const noexcept { return lo == hi; }
    [[nodiscard]] bool contains(Rank r) const noexcept { return lo <= r && r < hi; }

    friend bool operator==(const SaRange&, const SaRange&) = default;
};

/// Dual suffix arrays over T$ and rev(T)$.
///
/// The reverse array is stored by label rather than by start position: the
/// rev-suffix starting at s spells T[0..n-s) backwards and carries label n-s.
/// A label L therefore names the T-prefix that ends where the T-suffix at
/// position L begins, which is what lets the two arrays be intersected by value.
class SuffixIndex {
public:
    static SuffixIndex build(const Text& text) {
        SuffixIndex ix;
        ix.n_ = text.size();
        ix.sa_t_ = detail::suffix_array_with_sentinel(text.view(), false);
        ix.labels_r_ = detail::suffix_array_with_sentinel(text.view(), true);
        for (auto& v : ix.labels_r_) v = ix.n_ - v;
        ix.inv_t_ = invert(ix.sa_t_);
        ix.inv_r_ = invert(ix.labels_r_);
        ix.text_ = text;
        if (!ix.inverses_consistent()) {
            throw std::logic_error("suffix index inverse arrays are inconsistent");
        }
        return ix;
    }

    /// Reassembles an index from persisted arrays. Fails with CorruptIndex if
    /// the arrays are not mutually inverse permutations of 0..n.
    static SuffixIndex from_arrays(std::size_t n, std::vector<Pos> sa_t, std::vector<Pos> labels_r,
                                   std::vector<Rank> inv_t, std::vector<Rank> inv_r) {
        SuffixIndex ix;
        ix.n_ = n;
        ix.sa_t_ = std::move(sa_t);
        ix.labels_r_ = std::move(labels_r);
        ix.inv_t_ = std::move(inv_t);
        ix.inv_r_ = std::move(inv_r);
        if (!ix.inverses_consistent()) {
            throw Error(ErrorCode::CorruptIndex, "arrays are not inverse permutations of 0..n");
        }
        return ix;
    }

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    /// Number of ranks per array (n + 1, sentinel suffix included).
    [[nodiscard]] std::size_t ranks() const noexcept { return n_ + 1; }
    [[nodiscard]] std::uint64_t id() const noexcept { return id_; }

    [[nodiscard]] const std::vector<Pos>& sa_t() const noexcept { return sa_t_; }
    [[nodiscard]] const std::vector<Pos>& labels_r() const noexcept { return labels_r_; }
    [[nodiscard]] const std::vector<Rank>& inv_t() const noexcept { return inv_t_; }
    [[nodiscard]] const std::vector<Rank>& inv_r() const noexcept { return inv_r_; }

    [[nodiscard]] bool has_text() const noexcept { return text_.has_value(); }
    [[nodiscard]] const Text& text() const {
        if (!text_) throw Error(ErrorCode::TextMismatch, "no text bound to this index");
        return *text_;
    }

    /// Value stored at `rank` on the given side: a T position or an R label.
    [[nodiscard]] Pos value_at(Side side, Rank rank) const noexcept {
        return side == Side::T ? sa_t_[rank] : labels_r_[rank];
    }

    /// Attaches the text an index was loaded for. Checks the length and that
    /// leading symbols are non-decreasing in rank order on both sides.
    void bind_text(const Text& text) {
        if (text.size() != n_) {
            throw Error(ErrorCode::TextMismatch, "text length " + std::to_string(text.size()) +
                                                     " does not match index length " + std::to_string(n_));
        }
        auto lead_t = [&](Rank r) { return sa_t_[r] < n_ ? text[sa_t_[r]] : kSentinel; };
        auto lead_r = [&](Rank r) { return labels_r_[r] > 0 ? text[labels_r_[r] - 1] : kSentinel; };
        for (Rank r = 0; r + 1 < ranks(); ++r) {
            if (lead_t(r) > lead_t(r + 1) || lead_r(r) > lead_r(r + 1)) {
                throw Error(ErrorCode::TextMismatch, "text is not the one this index was built from");
            }
        }
        text_ = text;
    }

    /// Checked constructor for a range on this index.
    [[nodiscard]] SaRange range(Side side, Rank lo, Rank hi) const {
        if (lo > hi || hi > ranks()) {
            throw Error(ErrorCode::InvalidRange, "range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                                     ") outside 0.." + std::to_string(ranks()));
        }
        return SaRange{lo, hi, side, id_};
    }

    [[nodiscard]] SaRange full_range(Side side) const noexcept { return SaRange{0, ranks(), side, id_}; }

    /// Ranks whose suffix has `pattern` as a prefix. On the R side the pattern is
    /// matched against rev(T)$, so callers pass an already reversed string.
    [[nodiscard]] SaRange find_range(Side side, std::string_view pattern) const {
        const Text& t = text();
        if (pattern.find(static_cast<char>(kSentinel)) != std::string_view::npos) {
            throw Error(ErrorCode::InvalidSymbol, "pattern contains the sentinel byte");
        }
        if (pattern.empty()) return full_range(side);

        // <0: suffix sorts before every string with prefix `pattern`; 0: has it as prefix; >0: after.
        auto compare = [&](Rank r) -> int {
            const Pos v = value_at(side, r);
            for (std::size_t i = 0; i < pattern.size(); ++i) {
                unsigned char c;
                if (side == Side::T) {
                    c = v + i < n_ ? t[v + i] : kSentinel;
                } else {
                    c = i < v ? t[v - 1 - i] : kSentinel;
                }
                const auto p = static_cast<unsigned char>(pattern[i]);
                if (c != p) return c < p ? -1 : 1;
            }
            return 0;
        };

        Rank lo = 0;
        Rank hi = ranks();
        while (lo < hi) {
            const Rank mid = lo + (hi - lo) / 2;
            if (compare(mid) < 0) lo = mid + 1;
            else hi = mid;
        }
        Rank first = lo;
        hi = ranks();
        while (lo < hi) {
            const Rank mid = lo + (hi - lo) / 2;
            if (compare(mid) <= 0) lo = mid + 1;
            else hi = mid;
        }
        return SaRange{first, lo, side, id_};
    }

    /// True when the stored arrays are permutations of 0..n with matching inverses.
    [[nodiscard]] bool inverses_consistent() const {
        const std::size_t k = n_ + 1;
        if (sa_t_.size() != k || labels_r_.size() != k || inv_t_.size() != k || inv_r_.size() != k) return false;
        for (Rank r = 0; r < k; ++r) {
            if (sa_t_[r] >= k || labels_r_[r] >= k) return false;
            if (inv_t_[sa_t_[r]] != r || inv_r_[labels_r_[r]] != r) return false;
        }
        return true;
    }

    /// Field-by-field equality of the persisted arrays; the bound text is not compared.
    friend bool operator==(const SuffixIndex& a, const SuffixIndex& b) {
        return a.n_ == b.n_ && a.sa_t_ == b.sa_t_ && a.labels_r_ == b.labels_r_ && a.inv_t_ == b.inv_t_ &&
               a.inv_r_ == b.inv_r_;
    }

private:
    SuffixIndex() : id_(next_id()) {}

    static std::uint64_t next_id() {
        static std::atomic<std::uint64_t> counter{1};
        return counter.fetch_add(1, std::memory_order_relaxed);
    }

    static std::vector<Rank> invert(const std::vector<Pos>& perm) {
        std::vector<Rank> inv(perm.size());
        for (Rank r = 0; r < perm.size(); ++r) inv[perm[r]] = r;
        return inv;
    }

    std::size_t n_ = 0;
    std::uint64_t id_ = 0;
    std::vector<Pos> sa_t_;
    std::vector<Pos> labels_r_;
    std::vector<Rank> inv_t_;
    std::vector<Rank> inv_r_;
    std::optional<Text> text_;
};

}  // namespace cpmx
