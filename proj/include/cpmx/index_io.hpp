// Copyright 2026 The cpmx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Index file layout (all integers little-endian):
//   "CPMX"  u32 version  u64 n
//   sa_t[n+1]  labels_r[n+1]  inv_t[n+1]  inv_r[n+1]   (u64 each)
//   u64 FNV-1a checksum of every preceding byte

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "cpmx/error.hpp"
#include "cpmx/suffix_index.hpp"

namespace cpmx {

inline constexpr std::array<char, 4> kIndexMagic = {'C', 'P', 'M', 'X'};
inline constexpr std::uint32_t kIndexVersion = 1;

namespace detail {

class Fnv1a64 {
public:
    void update(std::span<const unsigned char> bytes) noexcept {
        for (unsigned char b : bytes) {
            state_ ^= b;
            state_ *= 0x100000001b3ULL;
        }
    }
    [[nodiscard]] std::uint64_t digest() const noexcept { return state_; }

private:
    std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

template <class UInt>
void put_le(std::vector<unsigned char>& out, UInt v) {
    for (std::size_t i = 0; i < sizeof(UInt); ++i) {
        out.push_back(static_cast<unsigned char>(v >> (8 * i)));
    }
}

template <class UInt>
UInt get_le(std::span<const unsigned char> in) {
    UInt v = 0;
    for (std::size_t i = 0; i < sizeof(UInt); ++i) {
        v |= static_cast<UInt>(in[i]) << (8 * i);
    }
    return v;
}

class ChecksummedWriter {
public:
    explicit ChecksummedWriter(const std::filesystem::path& path) : out_(path, std::ios::binary | std::ios::trunc) {
        if (!out_) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
        buf_.reserve(kChunk + 16);
    }

    template <class UInt>
    void put(UInt v) {
        put_le(buf_, v);
        if (buf_.size() >= kChunk) flush();
    }

    void finish() {
        flush();
        std::vector<unsigned char> tail;
        put_le(tail, hash_.digest());
        out_.write(reinterpret_cast<const char*>(tail.data()), static_cast<std::streamsize>(tail.size()));
        out_.flush();
        if (!out_) throw Error(ErrorCode::Io, "write failed");
    }

private:
    static constexpr std::size_t kChunk = 1 << 20;

    void flush() {
        hash_.update(buf_);
        out_.write(reinterpret_cast<const char*>(buf_.data()), static_cast<std::streamsize>(buf_.size()));
        buf_.clear();
    }

    std::ofstream out_;
    std::vector<unsigned char> buf_;
    Fnv1a64 hash_;
};

class ChecksummedReader {
public:
    explicit ChecksummedReader(const std::filesystem::path& path) : in_(path, std::ios::binary) {
        if (!in_) throw Error(ErrorCode::Io, "cannot open " + path.string());
    }

    std::span<const unsigned char> take(std::size_t count) {
        scratch_.resize(count);
        in_.read(reinterpret_cast<char*>(scratch_.data()), static_cast<std::streamsize>(count));
        if (static_cast<std::size_t>(in_.gcount()) != count) {
            throw Error(ErrorCode::CorruptIndex, "index file is truncated");
        }
        hash_.update(scratch_);
        return scratch_;
    }

    void expect_magic() {
        auto magic = take(kIndexMagic.size());
        if (!std::equal(magic.begin(), magic.end(), kIndexMagic.begin(),
                        [](unsigned char a, char b) { return a == static_cast<unsigned char>(b); })) {
            throw Error(ErrorCode::CorruptIndex, "bad magic");
        }
    }

    template <class UInt>
    UInt get() {
        return get_le<UInt>(take(sizeof(UInt)));
    }

    void read_u64_array(std::vector<std::uint64_t>& out, std::size_t count) {
        out.resize(count);
        constexpr std::size_t kPerChunk = 1 << 17;
        for (std::size_t done = 0; done < count;) {
            const std::size_t batch = std::min(kPerChunk, count - done);
            auto bytes = take(batch * 8);
            for (std::size_t i = 0; i < batch; ++i) {
                out[done + i] = get_le<std::uint64_t>(bytes.subspan(i * 8, 8));
            }
            done += batch;
        }
    }

    /// Reads the trailing checksum (not itself hashed) and requires end of file.
    void verify_trailer() {
        const std::uint64_t expected = hash_.digest();
        std::array<unsigned char, 8> raw{};
        in_.read(reinterpret_cast<char*>(raw.data()), 8);
        if (in_.gcount() != 8) throw Error(ErrorCode::CorruptIndex, "index file is truncated");
        if (get_le<std::uint64_t>(raw) != expected) {
            throw Error(ErrorCode::CorruptIndex, "checksum mismatch");
        }
        if (in_.peek() != std::ifstream::traits_type::eof()) {
            throw Error(ErrorCode::CorruptIndex, "trailing bytes after checksum");
        }
    }

private:
    std::ifstream in_;
    std::vector<unsigned char> scratch_;
    Fnv1a64 hash_;
};

}  // namespace detail

inline void save_index(const SuffixIndex& index, const std::filesystem::path& path) {
    detail::ChecksummedWriter w(path);
    for (char c : kIndexMagic) w.put(static_cast<std::uint8_t>(c));
    w.put(kIndexVersion);
    w.put(static_cast<std::uint64_t>(index.n()));
    for (const auto* arr : {&index.sa_t(), &index.labels_r(), &index.inv_t(), &index.inv_r()}) {
        for (std::uint64_t v : *arr) w.put(v);
    }
    w.finish();
}

struct IndexHeader {
    std::uint32_t version = 0;
    std::uint64_t n = 0;
};

/// Loads the four arrays. The returned index has no text bound; call
/// SuffixIndex::bind_text (or use the two-argument overload) before querying.
inline SuffixIndex load_index(const std::filesystem::path& path) {
    detail::ChecksummedReader r(path);
    r.expect_magic();
    const auto version = r.get<std::uint32_t>();
    if (version != kIndexVersion) {
        throw Error(ErrorCode::CorruptIndex, "unsupported index version " + std::to_string(version));
    }
    const auto n = r.get<std::uint64_t>();
    const auto file_size = std::filesystem::file_size(path);
    // 16-byte header + 4 arrays + 8-byte checksum; rejects absurd n before allocating.
    if (n == 0 || n >= file_size / 32 || file_size != 24 + 32 * (n + 1)) {
        throw Error(ErrorCode::CorruptIndex, "declared length " + std::to_string(n) + " inconsistent with file size");
    }
    std::vector<std::uint64_t> sa_t, labels_r, inv_t, inv_r;
    r.read_u64_array(sa_t, n + 1);
    r.read_u64_array(labels_r, n + 1);
    r.read_u64_array(inv_t, n + 1);
    r.read_u64_array(inv_r, n + 1);
    r.verify_trailer();
    return SuffixIndex::from_arrays(n, std::move(sa_t), std::move(labels_r), std::move(inv_t), std::move(inv_r));
}

inline SuffixIndex load_index(const std::filesystem::path& path, const Text& text) {
    SuffixIndex ix = load_index(path);
    ix.bind_text(text);
    return ix;
}

/// Header fields only; used by `index info`.
inline IndexHeader read_index_header(const std::filesystem::path& path) {
    detail::ChecksummedReader r(path);
    r.expect_magic();
    IndexHeader h;
    h.version = r.get<std::uint32_t>();
    h.n = r.get<std::uint64_t>();
    return h;
}

}  // namespace cpmx
