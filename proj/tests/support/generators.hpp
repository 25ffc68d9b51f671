#pragma once

// Random inputs for the property suites.

#include "sqry/ir.hpp"

#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace sqry::testing {

using Rng = std::mt19937_64;

inline std::int64_t random_int(Rng& rng) {
    switch (rng() % 6) {
    case 0:
        return std::uniform_int_distribution<std::int64_t>(-16, 16)(rng);
    case 1:
        return std::uniform_int_distribution<std::int64_t>(-100000, 100000)(rng);
    case 2: {
        const std::int64_t edges[] = {std::numeric_limits<std::int64_t>::min(),
                                      std::numeric_limits<std::int64_t>::min() + 1,
                                      std::numeric_limits<std::int64_t>::max(),
                                      std::numeric_limits<std::int64_t>::max() - 1,
                                      0,
                                      -1,
                                      (std::int64_t{1} << 62) - 1,
                                      -(std::int64_t{1} << 62)};
        return edges[rng() % std::size(edges)];
    }
    default: {
        // Spread over magnitudes so that every group count shows up.
        const int bits = static_cast<int>(rng() % 63);
        std::int64_t v = static_cast<std::int64_t>(rng() >> (64 - bits - 1) >> 1);
        return rng() % 2 ? -v : v;
    }
    }
}

/// Text with words likely to repeat, punctuation, escapes and UTF-8. Never
/// contains NUL or ETX, and never starts with 0x06 or 0x07.
inline std::string random_text(Rng& rng, std::size_t max_pieces = 8) {
    static const std::vector<std::string> pieces = {
        "Wi-Fi", "activity", "detected", "Ethernet", "link", "Gbps", "802.11ax", "a", "of", "is",
        "on", "green", "Amber", "1234", "x_y", "..", "-", " ", " ", " ", "  ", "/", ":", "?",
        "!", "(", ")", "\"", "\\", "\n", "\t", "\r", "\x01", "\x1b", "\x7f", "\x06", "é",
        "café", "€", "Grüße", "\xF0\x9F\x98\x80", "#", "'", ",",
    };
    std::string out;
    const std::size_t n = rng() % (max_pieces + 1);
    for (std::size_t i = 0; i < n; ++i)
        out += pieces[rng() % pieces.size()];
    if (!out.empty() && (out[0] == '\x06' || out[0] == '\x07'))
        out.insert(out.begin(), 'z');
    return out;
}

inline Node random_node(Rng& rng, int depth) {
    const unsigned pick = depth <= 0 ? static_cast<unsigned>(rng() % 2) : static_cast<unsigned>(rng() % 7);
    switch (pick) {
    case 0:
        return make_exit();
    case 1:
    case 2:
        return make_print(random_text(rng), random_node(rng, depth - 1));
    case 3:
    case 4:
    case 5: {
        std::vector<std::pair<std::string, Node>> branches;
        std::set<std::string> seen;
        const std::size_t n = 1 + rng() % 4;
        while (branches.size() < n) {
            std::string m = random_text(rng, 3);
            if (seen.insert(m).second)
                branches.emplace_back(m, random_node(rng, depth - 1));
        }
        return make_ask(random_text(rng), std::move(branches));
    }
    default: {
        std::set<std::int64_t> limits;
        const std::size_t n = 1 + rng() % 4;
        while (limits.size() < n)
            limits.insert(random_int(rng));
        std::vector<std::pair<std::int64_t, Node>> thresholds;
        for (auto it = limits.rbegin(); it != limits.rend(); ++it)
            thresholds.emplace_back(*it, random_node(rng, depth - 1));
        std::optional<Node> otherwise;
        if (rng() % 2)
            otherwise = random_node(rng, depth - 1);
        return make_ask_numeric(random_text(rng), std::move(thresholds), std::move(otherwise));
    }
    }
}

inline Program random_program(Rng& rng, int max_depth = 4) {
    return Program(random_node(rng, 1 + static_cast<int>(rng() % max_depth)));
}

} // namespace sqry::testing
