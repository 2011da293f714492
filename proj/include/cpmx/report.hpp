// Copyright 2026 The cpmx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cpmx/bench.hpp"
#include "cpmx/engine.hpp"
#include "cpmx/error.hpp"

namespace cpmx::report {

inline constexpr std::string_view kBenchCsvHeader = "method,n,m,trial,build_ns,query_ns,matches";
inline constexpr std::string_view kProfileCsvHeader = "m,mean_rt_width,mean_rr_width,mean_full_width,samples";

namespace detail {

template <class T>
void put_optional(std::ostream& os, const std::optional<T>& v) {
    if (v) os << *v;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(pos));
            return fields;
        }
        fields.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
}

template <class T>
T parse_number(std::string_view field, std::size_t line_no) {
    T value{};
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad number '" +
                                               std::string(field) + "'");
    }
    return value;
}

template <class T>
std::optional<T> parse_optional(std::string_view field, std::size_t line_no) {
    if (field.empty()) return std::nullopt;
    return parse_number<T>(field, line_no);
}

}  // namespace detail

/// Header plus one row per record. Skipped records leave the timing and match
/// fields empty.
inline void write_bench_csv(std::ostream& os, const std::vector<bench::BenchRecord>& records) {
    os << kBenchCsvHeader << '\n';
    for (const auto& r : records) {
        os << to_string(r.method) << ',' << r.n << ',' << r.m << ',' << r.trial << ',';
        detail::put_optional(os, r.build_ns);
        os << ',';
        detail::put_optional(os, r.query_ns);
        os << ',';
        detail::put_optional(os, r.matches);
        os << '\n';
    }
}

inline std::vector<bench::BenchRecord> read_bench_csv(std::istream& is) {
    std::vector<bench::BenchRecord> out;
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(is, line)) throw Error(ErrorCode::ParseError, "empty CSV");
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kBenchCsvHeader) throw Error(ErrorCode::ParseError, "unexpected CSV header '" + line + "'");
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto f = detail::split_fields(line);
        if (f.size() != 7) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 7 fields");
        }
        bench::BenchRecord r;
        try {
            r.method = parse_intersector_kind(f[0]);
        } catch (const std::invalid_argument& e) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
        }
        r.n = detail::parse_number<std::size_t>(f[1], line_no);
        r.m = detail::parse_number<std::size_t>(f[2], line_no);
        r.trial = detail::parse_number<std::size_t>(f[3], line_no);
        r.build_ns = detail::parse_optional<std::int64_t>(f[4], line_no);
        r.query_ns = detail::parse_optional<std::int64_t>(f[5], line_no);
        r.matches = detail::parse_optional<std::uint64_t>(f[6], line_no);
        out.push_back(r);
    }
    return out;
}

inline nlohmann::json to_json(const bench::BenchRecord& r) {
    auto opt = [](const auto& v) -> nlohmann::json { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
    return {{"method", to_string(r.method)}, {"n", r.n},
            {"m", r.m},                      {"trial", r.trial},
            {"build_ns", opt(r.build_ns)},   {"query_ns", opt(r.query_ns)},
            {"matches", opt(r.matches)},     {"skipped", r.skipped()}};
}

inline void write_bench_json(std::ostream& os, const std::vector<bench::BenchRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    os << arr.dump(2) << '\n';
}

inline void write_profile_csv(std::ostream& os, const std::vector<bench::RangeProfilePoint>& points) {
    os << kProfileCsvHeader << '\n';
    for (const auto& p : points) {
        os << p.m << ',' << p.mean_rt_width << ',' << p.mean_rr_width << ',' << p.mean_full_width << ','
           << p.samples << '\n';
    }
}

inline void write_profile_json(std::ostream& os, const std::vector<bench::RangeProfilePoint>& points) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : points) {
        arr.push_back({{"m", p.m},
                       {"mean_rt_width", p.mean_rt_width},
                       {"mean_rr_width", p.mean_rr_width},
                       {"mean_full_width", p.mean_full_width},
                       {"samples", p.samples}});
    }
    os << arr.dump(2) << '\n';
}

/// `start,rotation` per line, or `start` alone when deduplicated.
inline void write_occurrences_csv(std::ostream& os, const std::vector<Occurrence>& occ, bool dedup) {
    for (const auto& o : occ) {
        os << o.start;
        if (!dedup) os << ',' << o.rotation;
        os << '\n';
    }
}

inline void write_occurrences_json(std::ostream& os, const std::vector<Occurrence>& occ, bool dedup) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& o : occ) {
        if (dedup) {
            arr.push_back(o.start);
        } else {
            arr.push_back({{"start", o.start}, {"rotation", o.rotation}});
        }
    }
    os << arr.dump() << '\n';
}

}  // namespace cpmx::report
