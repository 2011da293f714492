// Copyright 2026 The cpmx Authors
// SPDX-License-Identifier: Apache-2.0

// Finds every circular occurrence of a pattern in a small text with each
// intersection method and prints the (start, rotation) pairs.

#include <iostream>

#include "cpmx/cpmx.hpp"

int main(int argc, char** argv) {
    const std::string text = argc > 1 ? argv[1] : "banana";
    const std::string pattern = argc > 2 ? argv[2] : "nana";

    const auto index = cpmx::SuffixIndex::build(cpmx::Text::from_bytes(text));
    for (auto kind : {cpmx::IntersectorKind::Inverse, cpmx::IntersectorKind::Root, cpmx::IntersectorKind::Log,
                      cpmx::IntersectorKind::Instant}) {
        const auto x = cpmx::Intersector::build(kind, index);
        std::cout << cpmx::to_string(kind) << ":";
        for (const auto& occ : cpmx::ecpm(index, x, pattern)) {
            std::cout << " (" << occ.start << "," << occ.rotation << ")";
        }
        std::cout << "\n";
    }
    for (const auto& occ : cpmx::ecpm(index, cpmx::InverseTable(index), pattern, /*dedup=*/true)) {
        std::cout << "start " << occ.start << " matches " << cpmx::rotation_string(pattern, occ.rotation) << "\n";
    }
    return 0;
}
