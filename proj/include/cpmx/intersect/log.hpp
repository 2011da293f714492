// Copyright 2026 The cpmx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cpmx/intersect/common.hpp"

namespace cpmx {

/// Segment-tree pair table.
///
/// Both rank spaces are padded to N = bit_ceil(n + 1) leaves and covered by an
/// implicit binary tree (heap numbering: root 1, leaf for rank r at N + r).
/// Ranks >= n + 1 are padding and hold no value. For every pair of nodes
/// (T-node u, R-node v) the table stores the values whose T rank falls under u
/// and whose R rank falls under v. A query splits each range into at most
/// 2 log N canonical nodes and concatenates the stored lists of all node pairs.
///
/// Nodes lying wholly in the padding are never materialised: they cannot appear
/// in a canonical decomposition and their pair lists are always empty.
class LogTable {
public:
    static constexpr IntersectorKind kind = IntersectorKind::Log;
    using Node = std::uint32_t;

    explicit LogTable(const SuffixIndex& index)
        : index_(&index), leaves_(std::bit_ceil(index.ranks())), levels_(std::countr_zero(leaves_) + 1) {
        if (2 * leaves_ > std::numeric_limits<Node>::max()) {
            throw std::length_error("text too long for a log table");
        }
        assign_compact_ids();
        build();
    }

    [[nodiscard]] const SuffixIndex& index() const noexcept { return *index_; }
    [[nodiscard]] std::size_t memory_bytes() const noexcept {
        return values_.capacity() * sizeof(Pos) + offset_count_ * sizeof(std::uint32_t) +
               compact_.capacity() * sizeof(Node);
    }

    /// Padded leaf count N.
    [[nodiscard]] std::size_t leaves() const noexcept { return leaves_; }
    [[nodiscard]] static constexpr Node root() noexcept { return 1; }
    [[nodiscard]] Node leaf(Rank rank) const noexcept { return static_cast<Node>(leaves_ + rank); }

    /// Rank interval [begin, end) covered by a node, before clipping to n + 1.
    [[nodiscard]] std::pair<Rank, Rank> node_span(Node node) const noexcept {
        const int depth = std::bit_width(node) - 1;
        const std::size_t width = leaves_ >> depth;
        const Rank begin = (node - (Node{1} << depth)) * width;
        return {begin, begin + width};
    }

    /// Canonical nodes whose disjoint union is `range`, left to right within
    /// each level. At most 2 log2 N of them.
    [[nodiscard]] std::vector<Node> decompose(const SaRange& range) const {
        std::vector<Node> nodes;
        std::size_t lo = range.lo + leaves_;
        std::size_t hi = range.hi + leaves_;
        while (lo < hi) {
            if (lo & 1U) nodes.push_back(static_cast<Node>(lo++));
            if (hi & 1U) nodes.push_back(static_cast<Node>(--hi));
            lo >>= 1;
            hi >>= 1;
        }
        return nodes;
    }

    /// Stored common values for T-node `t_node` and R-node `r_node`, ascending.
    [[nodiscard]] std::span<const Pos> pair_list(Node t_node, Node r_node) const {
        const Node ct = compact_[t_node];
        const Node cr = compact_[r_node];
        if (ct == kDead || cr == kDead) return {};
        const std::size_t slot = static_cast<std::size_t>(cr) * live_ + ct;
        return {values_.data() + offsets_[slot], offsets_[slot + 1] - offsets_[slot]};
    }

    [[nodiscard]] std::vector<Pos> query(const SaRange& rt, const SaRange& rr) const {
        detail::check_ranges(*index_, rt, rr);
        std::vector<Pos> out;
        if (rt.empty() || rr.empty()) return out;
        const auto t_nodes = decompose(rt);
        const auto r_nodes = decompose(rr);
        for (Node u : t_nodes) {
            for (Node v : r_nodes) {
                const auto list = pair_list(u, v);
                out.insert(out.end(), list.begin(), list.end());
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static constexpr Node kDead = std::numeric_limits<Node>::max();

    [[nodiscard]] bool is_leaf(Node node) const noexcept { return node >= leaves_; }

    // Live nodes get ids in decreasing heap order, so children precede parents.
    void assign_compact_ids() {
        compact_.assign(2 * leaves_, kDead);
        Node next = 0;
        for (std::size_t h = 2 * leaves_ - 1; h >= 1; --h) {
            if (node_span(static_cast<Node>(h)).first < index_->ranks()) {
                compact_[h] = next++;
            }
        }
        live_ = next;
    }

    void append_merged(std::span<const Pos> a, std::span<const Pos> b) {
        if (b.empty()) {
            values_.insert(values_.end(), a.begin(), a.end());
            return;
        }
        const std::size_t at = values_.size();
        values_.resize(at + a.size() + b.size());
        std::merge(a.begin(), a.end(), b.begin(), b.end(), values_.begin() + static_cast<std::ptrdiff_t>(at));
    }

    // Pairs are visited R-node-major, both in compact (decreasing heap) order,
    // so every row depends only on earlier rows. A leaf-R row is non-empty
    // exactly at the ancestors of the matching T leaf; an internal-R row merges
    // the two child rows column by column. Offsets of a merged row are the sum
    // of the child offsets, and only non-empty columns are visited for values.
    void build() {
        const auto& labels_r = index_->labels_r();
        const auto& inv_t = index_->inv_t();

        std::vector<Node> heap_of(live_), left(live_, kDead), right(live_, kDead);
        for (std::size_t h = 1; h < 2 * leaves_; ++h) {
            const Node c = compact_[h];
            if (c == kDead) continue;
            heap_of[c] = static_cast<Node>(h);
            if (h < leaves_) {
                left[c] = compact_[2 * h];
                right[c] = compact_[2 * h + 1];
            }
        }

        // Each value lies under exactly `levels_` nodes of each tree, so this
        // is the exact pool size and `values_` never reallocates below.
        const std::size_t total =
            index_->ranks() * static_cast<std::size_t>(levels_) * static_cast<std::size_t>(levels_);
        values_.reserve(total);
        // Every entry is written below, so the table is left uninitialised.
        offset_count_ = static_cast<std::size_t>(live_) * live_ + 1;
        offsets_.reset(new std::uint32_t[offset_count_]);
        offsets_[0] = 0;
        std::vector<Node> cols;
        cols.reserve(total);
        std::vector<std::size_t> col_begin(static_cast<std::size_t>(live_) + 1, 0);

        for (Node cr = 0; cr < live_; ++cr) {
            const std::size_t row = static_cast<std::size_t>(cr) * live_;
            std::uint32_t* out = offsets_.get() + row + 1;
            const std::uint32_t base = offsets_[row];
            if (is_leaf(heap_of[cr])) {
                const Pos value = labels_r[heap_of[cr] - leaves_];
                Node from = 0;
                std::uint32_t count = base;
                // Ancestors in leaf-to-root order have increasing compact ids.
                for (std::size_t h = leaves_ + inv_t[value]; h >= 1; h /= 2) {
                    const Node c = compact_[h];
                    std::fill(out + from, out + c, count);
                    values_.push_back(value);
                    cols.push_back(c);
                    out[c] = ++count;
                    from = c + 1;
                }
                std::fill(out + from, out + live_, count);
            } else {
                const Node lr = left[cr];
                const Node rr = right[cr];
                const std::uint32_t* a = offsets_.get() + static_cast<std::size_t>(lr) * live_;
                if (rr == kDead) {
                    const std::uint32_t shift = base - a[0];
                    for (Node ct = 0; ct < live_; ++ct) out[ct] = shift + a[ct + 1];
                } else {
                    const std::uint32_t* b = offsets_.get() + static_cast<std::size_t>(rr) * live_;
                    const std::uint32_t shift = base - a[0] - b[0];
                    for (Node ct = 0; ct < live_; ++ct) out[ct] = shift + a[ct + 1] + b[ct + 1];
                }
                const Node* ca = cols.data() + col_begin[lr];
                const Node* ca_end = cols.data() + col_begin[lr + 1];
                const Node* cb = rr == kDead ? nullptr : cols.data() + col_begin[rr];
                const Node* cb_end = rr == kDead ? nullptr : cols.data() + col_begin[rr + 1];
                auto list = [&](Node r, Node c) {
                    const std::size_t slot = static_cast<std::size_t>(r) * live_ + c;
                    return std::span<const Pos>{values_.data() + offsets_[slot], offsets_[slot + 1] - offsets_[slot]};
                };
                while (ca != ca_end || cb != cb_end) {
                    Node c;
                    if (cb == cb_end || (ca != ca_end && *ca < *cb)) {
                        c = *ca++;
                        append_merged(list(lr, c), {});
                    } else if (ca == ca_end || *cb < *ca) {
                        c = *cb++;
                        append_merged(list(rr, c), {});
                    } else {
                        c = *ca++;
                        ++cb;
                        append_merged(list(lr, c), list(rr, c));
                    }
                    cols.push_back(c);
                }
            }
            col_begin[cr + 1] = cols.size();
        }
    }

    const SuffixIndex* index_;
    std::size_t leaves_;
    int levels_;
    Node live_ = 0;
    std::vector<Node> compact_;
    std::vector<Pos> values_;
    std::unique_ptr<std::uint32_t[]> offsets_;
    std::size_t offset_count_ = 0;
};

}  // namespace cpmx
