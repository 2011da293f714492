// Copyright 2026 The cpmx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bitset>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cpmx/error.hpp"

namespace cpmx {

/// Logical end-of-text marker. Never stored in a Text; strictly smaller than every symbol.
inline constexpr unsigned char kSentinel = 0x00;

/// An immutable, validated byte string to be indexed.
///
/// The sentinel is implicit: indexing code treats position n as holding
/// kSentinel, but the bytes themselves are exactly the user's data.
class Text {
public:
    /// Validates `bytes`: must be non-empty and must not contain kSentinel.
    static Text from_bytes(std::string bytes) {
        if (bytes.empty()) {
            throw Error(ErrorCode::EmptyText, "text has no symbols");
        }
        Text t;
        for (std::size_t i = 0; i < bytes.size(); ++i) {
            const auto c = static_cast<unsigned char>(bytes[i]);
            if (c == kSentinel) {
                throw Error(ErrorCode::InvalidSymbol,
                            "sentinel byte 0x00 at offset " + std::to_string(i));
            }
            t.alphabet_.set(c);
        }
        t.bytes_ = std::move(bytes);
        return t;
    }

    [[nodiscard]] std::size_t size() const noexcept { return bytes_.size(); }
    [[nodiscard]] std::string_view view() const noexcept { return bytes_; }
    [[nodiscard]] const std::string& bytes() const noexcept { return bytes_; }

    [[nodiscard]] unsigned char operator[](std::size_t i) const noexcept {
        return static_cast<unsigned char>(bytes_[i]);
    }

    /// Distinct symbols present, ascending.
    [[nodiscard]] std::vector<unsigned char> alphabet() const {
        std::vector<unsigned char> out;
        for (std::size_t c = 0; c < alphabet_.size(); ++c) {
            if (alphabet_.test(c)) out.push_back(static_cast<unsigned char>(c));
        }
        return out;
    }

    [[nodiscard]] bool contains_symbol(unsigned char c) const noexcept { return alphabet_.test(c); }

    friend bool operator==(const Text& a, const Text& b) noexcept { return a.bytes_ == b.bytes_; }

private:
    Text() = default;

    std::string bytes_;
    std::bitset<256> alphabet_;
};

namespace detail {

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot open " + path.string());
    }
    std::string data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad()) {
        throw Error(ErrorCode::Io, "read failed for " + path.string());
    }
    return data;
}

}  // namespace detail

/// Raw bytes of a file. With `strip_newlines`, every '\n' and '\r' is dropped.
inline Text load_plain(const std::filesystem::path& path, bool strip_newlines) {
    std::string data = detail::read_file(path);
    if (strip_newlines) {
        std::erase_if(data, [](char c) { return c == '\n' || c == '\r'; });
    }
    return Text::from_bytes(std::move(data));
}

/// Extracts record `record_index` (0-based) from FASTA content. Sequence lines
/// are concatenated and uppercased; LF and CRLF line endings are accepted.
inline Text parse_fasta(std::string_view content, std::size_t record_index) {
    std::size_t records = 0;
    bool selected = false;
    bool seen_header = false;
    std::string sequence;

    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < content.size()) {
        std::size_t eol = content.find('\n', pos);
        if (eol == std::string_view::npos) eol = content.size();
        std::string_view line = content.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;

        if (line.front() == '>') {
            selected = (records == record_index);
            ++records;
            seen_header = true;
            continue;
        }
        if (!seen_header) {
            throw Error(ErrorCode::ParseError,
                        "line " + std::to_string(line_no) + ": sequence data before first '>' header");
        }
        if (!selected) continue;
        for (char c : line) {
            if (c == ' ' || c == '\t') {
                throw Error(ErrorCode::ParseError,
                            "line " + std::to_string(line_no) + ": whitespace inside sequence line");
            }
            sequence.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
        }
    }

    if (records == 0) {
        throw Error(ErrorCode::ParseError, "no FASTA records found");
    }
    if (record_index >= records) {
        throw Error(ErrorCode::NoSuchRecord, "record " + std::to_string(record_index) + " requested, file has " +
                                                 std::to_string(records));
    }
    return Text::from_bytes(std::move(sequence));
}

inline Text load_fasta(const std::filesystem::path& path, std::size_t record_index) {
    return parse_fasta(detail::read_file(path), record_index);
}

/// Uniform i.i.d. symbols over {A,C,G,T}. Each 64-bit draw of a seeded
/// mt19937_64 yields 32 symbols (two bits each), so the output depends only on
/// (length, seed) and not on the standard library's distributions.
inline Text random_dna(std::size_t length, std::uint64_t seed) {
    if (length == 0) {
        throw Error(ErrorCode::EmptyText, "random_dna requires length >= 1");
    }
    static constexpr char kBases[4] = {'A', 'C', 'G', 'T'};
    std::mt19937_64 rng(seed);
    std::string out(length, 'A');
    std::size_t i = 0;
    while (i < length) {
        std::uint64_t word = rng();
        for (int k = 0; k < 32 && i < length; ++k, ++i) {
            out[i] = kBases[word & 3U];
            word >>= 2;
        }
    }
    return Text::from_bytes(std::move(out));
}

}  // namespace cpmx
