// Copyright 2026 The cpmx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cpmx {

enum class ErrorCode {
    EmptyText,
    InvalidSymbol,
    NoSuchRecord,
    ParseError,
    Io,
    CorruptIndex,
    TextMismatch,
    TooLargeForInstant,
    IndexMismatch,
    InvalidRange,
    EmptyPattern,
    PatternTooLong,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::EmptyText: return "EmptyText";
        case ErrorCode::InvalidSymbol: return "InvalidSymbol";
        case ErrorCode::NoSuchRecord: return "NoSuchRecord";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Io: return "Io";
        case ErrorCode::CorruptIndex: return "CorruptIndex";
        case ErrorCode::TextMismatch: return "TextMismatch";
        case ErrorCode::TooLargeForInstant: return "TooLargeForInstant";
        case ErrorCode::IndexMismatch: return "IndexMismatch";
        case ErrorCode::InvalidRange: return "InvalidRange";
        case ErrorCode::EmptyPattern: return "EmptyPattern";
        case ErrorCode::PatternTooLong: return "PatternTooLong";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace cpmx
