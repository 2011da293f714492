// Copyright 2026 The cpmx Authors
// SPDX-License-Identifier: Apache-2.0

// cpmx: build suffix indexes, run circular pattern queries, and benchmark the
// four range intersectors.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cpmx/bench.hpp"
#include "cpmx/cpmx.hpp"
#include "cpmx/report.hpp"

namespace {

constexpr int kExitEngine = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TextSource {
    std::string text_path;
    std::string fasta_path;
    std::size_t record = 0;
    std::optional<std::size_t> random_n;
    std::uint64_t seed = 42;
    bool keep_newlines = false;

    void add_to(CLI::App& app) {
        auto* text = app.add_option("--text", text_path, "Plain text file");
        auto* fasta = app.add_option("--fasta", fasta_path, "FASTA file");
        app.add_option("--record", record, "FASTA record index (0-based)")->needs(fasta);
        auto* random = app.add_option("--random", random_n, "Generate uniform random DNA of this length");
        app.add_option("--seed", seed, "Seed for generated text");
        app.add_flag("--keep-newlines", keep_newlines, "Keep '\\n' and '\\r' bytes of a plain text file");
        text->excludes(fasta)->excludes(random);
        fasta->excludes(random);
    }

    [[nodiscard]] cpmx::Text load() const {
        if (!text_path.empty()) return cpmx::load_plain(text_path, !keep_newlines);
        if (!fasta_path.empty()) return cpmx::load_fasta(fasta_path, record);
        if (random_n) return cpmx::random_dna(*random_n, seed);
        throw UsageError("one of --text, --fasta or --random is required");
    }
};

struct Output {
    std::string path;
    std::string format = "csv";

    void add_to(CLI::App& app) {
        app.add_option("--out", path, "Write results to this file instead of stdout");
        app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    }

    template <class Fn>
    void write(Fn&& fn) const {
        if (path.empty()) {
            fn(std::cout);
            return;
        }
        std::ofstream out(path);
        if (!out) throw cpmx::Error(cpmx::ErrorCode::Io, "cannot open " + path + " for writing");
        fn(out);
    }
};

cpmx::SuffixIndex obtain_index(const cpmx::Text& text, const std::string& index_path) {
    if (!index_path.empty() && std::filesystem::exists(index_path)) {
        return cpmx::load_index(index_path, text);
    }
    auto index = cpmx::SuffixIndex::build(text);
    if (!index_path.empty()) cpmx::save_index(index, index_path);
    return index;
}

std::string read_pattern_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cpmx::Error(cpmx::ErrorCode::Io, "cannot open " + path);
    std::string p{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    while (!p.empty() && (p.back() == '\n' || p.back() == '\r')) p.pop_back();
    return p;
}

void print_summary(const std::vector<cpmx::bench::BenchRecord>& records) {
    std::cerr << "method,n,m,trials,mean_build_ns,mean_query_ns,matches\n";
    for (const auto& s : cpmx::bench::summarize(records)) {
        std::cerr << cpmx::to_string(s.method) << ',' << s.n << ',' << s.m << ',';
        if (s.skipped && s.trials == 0) {
            std::cerr << "skipped\n";
            continue;
        }
        std::cerr << s.trials << ',' << std::fixed << std::setprecision(0) << s.mean_build_ns << ','
                  << s.mean_query_ns << ',' << s.matches << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact circular pattern matching over dual suffix arrays"};
    app.require_subcommand(1);

    // index build | info
    auto* index_cmd = app.add_subcommand("index", "Build or inspect a persisted suffix index");
    index_cmd->require_subcommand(1);
    TextSource build_src;
    std::string build_index_path;
    auto* index_build = index_cmd->add_subcommand("build", "Build an index and save it");
    build_src.add_to(*index_build);
    index_build->add_option("--index", build_index_path, "Output index file")->required();
    std::string info_index_path;
    auto* index_info = index_cmd->add_subcommand("info", "Print header fields and verify an index file");
    index_info->add_option("--index", info_index_path, "Index file")->required();

    // query
    TextSource query_src;
    std::string pattern;
    std::string pattern_file;
    std::string method_name = "inverse";
    std::string query_index_path;
    std::size_t instant_cap = cpmx::InstantTable::kDefaultMaxN;
    bool dedup = false;
    Output query_out;
    auto* query = app.add_subcommand("query", "Report every occurrence of every rotation of a pattern");
    query_src.add_to(*query);
    auto* pat_opt = query->add_option("--pattern", pattern, "Pattern string");
    auto* pat_file_opt = query->add_option("--pattern-file", pattern_file, "File holding the pattern");
    pat_opt->excludes(pat_file_opt);
    query->add_option("--method", method_name, "Intersector")
        ->check(CLI::IsMember({"instant", "log", "root", "inverse"}));
    query->add_option("--index", query_index_path, "Load this index if present, otherwise build and save it");
    query->add_option("--instant-cap", instant_cap, "Largest n accepted by the instant table");
    query->add_flag("--dedup", dedup, "Report each start position once");
    query_out.add_to(*query);

    // bench build | query | adversarial | profile
    auto* bench = app.add_subcommand("bench", "Benchmark index and intersector construction and queries");
    bench->require_subcommand(1);
    std::vector<std::string> bench_methods;
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> lengths;
    std::optional<std::size_t> trials;
    std::size_t samples = 100;
    std::uint64_t bench_seed = 42;
    std::string adversarial_pattern = "AAAAA";
    cpmx::bench::Caps caps;
    Output bench_out;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--method", bench_methods, "Methods to run (comma separated)")
            ->delimiter(',')
            ->check(CLI::IsMember({"instant", "log", "root", "inverse"}));
        sub->add_option("--sizes", sizes, "Text lengths (comma separated)")->delimiter(',');
        sub->add_option("--seed", bench_seed, "Generator seed");
        sub->add_option("--trials", trials, "Timed repetitions (build: 1, otherwise 10)");
        sub->add_option("--instant-cap", caps.instant, "Largest n for the instant table");
        sub->add_option("--log-cap", caps.log, "Largest n for the log table");
        sub->add_option("--root-cap", caps.root, "Largest n for the root table");
        bench_out.add_to(*sub);
    };
    auto* bench_build = bench->add_subcommand("build", "Construction time per method and size");
    add_common(bench_build);
    auto* bench_query = bench->add_subcommand("query", "Query time per method and pattern length");
    add_common(bench_query);
    bench_query->add_option("--pattern-lengths", lengths, "Pattern lengths (comma separated)")->delimiter(',');
    auto* bench_adv = bench->add_subcommand("adversarial", "Query time on an all-identical text");
    add_common(bench_adv);
    bench_adv->add_option("--pattern", adversarial_pattern, "Single-symbol pattern");
    auto* bench_profile = bench->add_subcommand("profile", "Mean search range width by pattern length");
    add_common(bench_profile);
    bench_profile->add_option("--pattern-lengths", lengths, "Pattern lengths (comma separated)")->delimiter(',');
    bench_profile->add_option("--samples", samples, "Sampled patterns per length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    auto methods_or = [&](std::vector<cpmx::IntersectorKind> fallback) {
        if (bench_methods.empty()) return fallback;
        std::vector<cpmx::IntersectorKind> out;
        for (const auto& name : bench_methods) out.push_back(cpmx::parse_intersector_kind(name));
        return out;
    };

    try {
        if (index_build->parsed()) {
            const auto text = build_src.load();
            const auto index = cpmx::SuffixIndex::build(text);
            cpmx::save_index(index, build_index_path);
            std::cout << "n=" << index.n() << " saved to " << build_index_path << '\n';
        } else if (index_info->parsed()) {
            const auto header = cpmx::read_index_header(info_index_path);
            std::cout << "version=" << header.version << '\n' << "n=" << header.n << '\n';
            const auto index = cpmx::load_index(info_index_path);
            std::cout << "checksum=ok\n" << "ranks=" << index.ranks() << '\n';
        } else if (query->parsed()) {
            if (!pattern_file.empty()) pattern = read_pattern_file(pattern_file);
            if (pattern.empty()) throw UsageError("a non-empty --pattern or --pattern-file is required");
            const auto text = query_src.load();
            const auto index = obtain_index(text, query_index_path);
            const auto x = cpmx::Intersector::build(cpmx::parse_intersector_kind(method_name), index, {instant_cap});
            const auto occ = cpmx::ecpm(index, x, pattern, dedup);
            query_out.write([&](std::ostream& os) {
                if (query_out.format == "json") cpmx::report::write_occurrences_json(os, occ, dedup);
                else cpmx::report::write_occurrences_csv(os, occ, dedup);
            });
        } else if (bench_build->parsed()) {
            if (sizes.empty()) sizes = {200, 5000, 100'000};
            const auto records =
                cpmx::bench::bench_build(methods_or(cpmx::bench::all_methods()), sizes, bench_seed,
                                         trials.value_or(1), caps);
            bench_out.write([&](std::ostream& os) {
                if (bench_out.format == "json") cpmx::report::write_bench_json(os, records);
                else cpmx::report::write_bench_csv(os, records);
            });
            print_summary(records);
        } else if (bench_query->parsed()) {
            if (sizes.empty()) sizes = {5000};
            if (lengths.empty()) lengths = {5, 10};
            const auto methods = methods_or({cpmx::IntersectorKind::Inverse, cpmx::IntersectorKind::Root,
                                             cpmx::IntersectorKind::Log});
            std::vector<cpmx::bench::BenchRecord> records;
            for (std::size_t n : sizes) {
                auto part = cpmx::bench::bench_query(methods, n, lengths, trials.value_or(10), bench_seed, caps);
                records.insert(records.end(), part.begin(), part.end());
            }
            bench_out.write([&](std::ostream& os) {
                if (bench_out.format == "json") cpmx::report::write_bench_json(os, records);
                else cpmx::report::write_bench_csv(os, records);
            });
            print_summary(records);
        } else if (bench_adv->parsed()) {
            if (sizes.empty()) sizes = {5000};
            std::vector<cpmx::bench::BenchRecord> records;
            for (std::size_t n : sizes) {
                auto part = cpmx::bench::bench_adversarial(n, adversarial_pattern, trials.value_or(10), caps);
                records.insert(records.end(), part.begin(), part.end());
            }
            bench_out.write([&](std::ostream& os) {
                if (bench_out.format == "json") cpmx::report::write_bench_json(os, records);
                else cpmx::report::write_bench_csv(os, records);
            });
            print_summary(records);
        } else if (bench_profile->parsed()) {
            if (sizes.empty()) sizes = {1'000'000};
            if (sizes.size() != 1) throw UsageError("bench profile takes a single --sizes value");
            if (lengths.empty()) {
                for (std::size_t m = 1; m <= 25; ++m) lengths.push_back(m);
            }
            const auto points = cpmx::bench::range_profile(sizes.front(), lengths, samples, bench_seed);
            bench_out.write([&](std::ostream& os) {
                if (bench_out.format == "json") cpmx::report::write_profile_json(os, points);
                else cpmx::report::write_profile_csv(os, points);
            });
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitEngine;
    }
    return 0;
}
