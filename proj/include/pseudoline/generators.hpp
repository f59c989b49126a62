#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "wiring_diagram.hpp"

namespace pseudoline {

namespace detail {

// Engine output reduced modulo the bound: platform independent, unlike the
// std distributions.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

inline bool coin(std::mt19937_64& rng, double probability) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < probability;
}

// Positions i whose neighbours (i, i+1) have not crossed yet.
inline std::vector<int> uncrossed_adjacent(const std::vector<int>& order) {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (order[i] < order[i + 1]) out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace detail

/// Random simple arrangement: a random reduced word of the reversal, built by
/// swapping a uniformly chosen uncrossed adjacent pair until none is left.
inline WiringDiagram gen_random_simple(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_random_simple: n must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::vector<Event> events;
    for (auto candidates = detail::uncrossed_adjacent(order); !candidates.empty();
         candidates = detail::uncrossed_adjacent(order)) {
        const int p = candidates[detail::uniform_below(rng, candidates.size())];
        std::swap(order[static_cast<std::size_t>(p)], order[static_cast<std::size_t>(p) + 1]);
        events.push_back({p, 2});
    }
    return WiringDiagram(n, std::move(events));
}

/// Random, usually non-simple arrangement. Starts from a random uncrossed
/// adjacent pair and grows the block downwards while it stays uncrossed, each
/// step taken with probability `grow`.
inline WiringDiagram gen_random(int n, std::uint64_t seed, double grow = 0.5) {
    if (n < 1) throw std::invalid_argument("gen_random: n must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::vector<Event> events;
    for (auto candidates = detail::uncrossed_adjacent(order); !candidates.empty();
         candidates = detail::uncrossed_adjacent(order)) {
        const int p = candidates[detail::uniform_below(rng, candidates.size())];
        int k = 2;
        while (p + k < n && order[static_cast<std::size_t>(p + k - 1)] < order[static_cast<std::size_t>(p + k)] &&
               detail::coin(rng, grow))
            ++k;
        std::reverse(order.begin() + p, order.begin() + p + k);
        events.push_back({p, k});
    }
    return WiringDiagram(n, std::move(events));
}

/// All pseudolines through a single point.
inline WiringDiagram gen_trivial(int n) {
    if (n < 2) throw std::invalid_argument("gen_trivial: n must be >= 2");
    return WiringDiagram(n, {{0, n}});
}

/// Simple arrangement from the bubble-sort reduced word of the reversal.
inline WiringDiagram gen_staircase(int n) {
    if (n < 1) throw std::invalid_argument("gen_staircase: n must be >= 1");
    std::vector<Event> events;
    for (int pass = 0; pass + 1 < n; ++pass)
        for (int p = 0; p + 1 < n - pass; ++p) events.push_back({p, 2});
    return WiringDiagram(n, std::move(events));
}

/// Left-right mirror image, relabelled so wire labels again follow the initial
/// top-to-bottom order.
inline WiringDiagram mirrored(const WiringDiagram& d) {
    std::vector<Event> events(d.events().rbegin(), d.events().rend());
    return WiringDiagram(d.wire_count(), std::move(events));
}

/// Top-bottom reflection.
inline WiringDiagram flipped(const WiringDiagram& d) {
    std::vector<Event> events;
    events.reserve(d.event_count());
    for (const Event& e : d.events()) events.push_back({d.wire_count() - e.top - e.width, e.width});
    return WiringDiagram(d.wire_count(), std::move(events));
}

/// Lexicographically smallest event list among the four reflections.
inline WiringDiagram canonical_form(const WiringDiagram& d) {
    WiringDiagram best = d;
    for (const WiringDiagram& cand : {mirrored(d), flipped(d), flipped(mirrored(d))})
        if (std::lexicographical_compare(cand.events().begin(), cand.events().end(), best.events().begin(),
                                         best.events().end()))
            best = cand;
    return best;
}

inline constexpr int kMaxEnumerationWires = 6;

/// Visits every valid event sequence on n wires exactly once, in lexicographic
/// order of (top, width) choices. With `canonical_only`, only sequences equal
/// to their canonical_form() are visited. The visitor returns false to stop.
inline void for_each_diagram(int n, const std::function<bool(const WiringDiagram&)>& visit,
                             bool canonical_only = false) {
    if (n < 1 || n > kMaxEnumerationWires)
        throw std::out_of_range("enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationWires));
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::vector<Event> events;
    bool stop = false;

    std::function<void()> dfs = [&] {
        if (stop) return;
        bool moved = false;
        for (int p = 0; p + 1 < n && !stop; ++p) {
            for (int k = 2; p + k <= n; ++k) {
                if (order[static_cast<std::size_t>(p + k - 2)] > order[static_cast<std::size_t>(p + k - 1)]) break;
                moved = true;
                std::reverse(order.begin() + p, order.begin() + p + k);
                events.push_back({p, k});
                dfs();
                events.pop_back();
                std::reverse(order.begin() + p, order.begin() + p + k);
                if (stop) return;
            }
        }
        if (!moved) {
            WiringDiagram d(n, events);
            if (canonical_only && canonical_form(d) != d) return;
            if (!visit(d)) stop = true;
        }
    };
    dfs();
}

inline std::vector<WiringDiagram> enumerate_all(int n, bool canonical_only = false) {
    std::vector<WiringDiagram> out;
    for_each_diagram(
        n,
        [&](const WiringDiagram& d) {
            out.push_back(d);
            return true;
        },
        canonical_only);
    return out;
}

}  // namespace pseudoline
