#pragma once

#include <algorithm>
#include <bitset>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "topology.hpp"
#include "wiring_diagram.hpp"

namespace pseudoline {

enum class ColoringMode { Crossing, Line };

/// Total assignment of colors 0..K-1 to crossings (by event index) or to lines
/// (by label - 1), every color below K used at least once.
struct Coloring {
    ColoringMode mode = ColoringMode::Crossing;
    std::vector<int> colors;

    int color_count() const {
        return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
    }

    bool is_compact() const {
        std::vector<bool> used(static_cast<std::size_t>(color_count()), false);
        for (int c : colors) {
            if (c < 0) return false;
            used[static_cast<std::size_t>(c)] = true;
        }
        return std::all_of(used.begin(), used.end(), [](bool u) { return u; });
    }

    bool operator==(const Coloring&) const = default;
};

/// Relabels colors by rank so that the result is compact; relative order of
/// colors is kept.
inline Coloring make_coloring(ColoringMode mode, std::vector<int> colors) {
    std::vector<int> values(colors);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int& c : colors) {
        if (c < 0) throw std::invalid_argument("negative color");
        c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
    }
    return {mode, std::move(colors)};
}

class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ResamplingExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Colors crossings in `order` (a topological sort of the arrangement graph,
/// default: event order), each with the smallest color not used by a crossing
/// that shares a cell with it and was colored earlier. Never needs more than
/// n colors.
inline Coloring greedy_cell_coloring(const WiringDiagram& d, std::span<const std::size_t> order = {}) {
    const CellComplex cx = build_cells(d);
    std::vector<std::size_t> event_order;
    if (order.empty()) {
        event_order.resize(d.event_count());
        std::iota(event_order.begin(), event_order.end(), std::size_t{0});
        order = event_order;
    } else if (!is_topological_order(arrangement_graph(d), order)) {
        throw std::invalid_argument("greedy_cell_coloring: order is not a topological sort");
    }
    const auto neighbors = cell_neighbors(cx);
    std::vector<int> colors(d.event_count(), -1);
    for (std::size_t c : order) {
        std::vector<bool> taken(neighbors[c].size() + 1, false);
        for (std::size_t other : neighbors[c]) {
            const int oc = colors[other];
            if (oc >= 0 && static_cast<std::size_t>(oc) < taken.size()) taken[static_cast<std::size_t>(oc)] = true;
        }
        colors[c] = static_cast<int>(std::find(taken.begin(), taken.end(), false) - taken.begin());
    }
    return {ColoringMode::Crossing, std::move(colors)};
}

/// Circle-method edge coloring of K_n on vertices 0..n-1: n colors for odd n,
/// n - 1 for even n.
inline int round_robin_color(int n, int a, int b) {
    if (a > b) std::swap(a, b);
    if (n % 2 == 1) return (a + b) % n;
    if (b == n - 1) return (2 * a) % (n - 1);
    return (a + b) % (n - 1);
}

namespace detail {

inline constexpr int kMaxPalette = 128;
using ColorSet = std::bitset<kMaxPalette>;

// DSATUR greedy: picks the uncolored vertex with most distinct neighbour colors
// (ties: most uncolored neighbours, then lowest index).
inline std::vector<int> dsatur_greedy(const std::vector<std::vector<std::size_t>>& adj) {
    const std::size_t n = adj.size();
    std::vector<int> color(n, -1);
    std::vector<ColorSet> seen(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            if (best == n || seen[v].count() > seen[best].count()) {
                best = v;
            } else if (seen[v].count() == seen[best].count()) {
                auto open = [&](std::size_t u) {
                    return std::count_if(adj[u].begin(), adj[u].end(), [&](std::size_t w) { return color[w] < 0; });
                };
                if (open(v) > open(best)) best = v;
            }
        }
        int c = 0;
        while (seen[best].test(static_cast<std::size_t>(c))) ++c;
        if (c + 1 >= kMaxPalette) throw std::length_error("dsatur_greedy: palette overflow");
        color[best] = c;
        for (std::size_t w : adj[best]) seen[w].set(static_cast<std::size_t>(c));
    }
    return color;
}

// Backtracking DSATUR with forward checking: a vertex whose remaining domain
// empties triggers an immediate backtrack. Colors beyond the largest used so
// far are tried only once (as the next fresh color).
class DsaturSearch {
public:
    DsaturSearch(const std::vector<std::vector<std::size_t>>& adj, int budget)
        : adj_(adj), budget_(budget), color_(adj.size(), -1), forbidden_(adj.size(), std::vector<int>(
                                                                             static_cast<std::size_t>(budget), 0)) {}

    std::optional<std::vector<int>> run() {
        if (adj_.empty()) return std::vector<int>{};
        if (budget_ <= 0) return std::nullopt;
        if (search(0, 0)) return color_;
        return std::nullopt;
    }

private:
    int domain_size(std::size_t v) const {
        return static_cast<int>(std::count(forbidden_[v].begin(), forbidden_[v].end(), 0));
    }

    std::size_t pick() const {
        std::size_t best = adj_.size();
        int best_dom = 0;
        for (std::size_t v = 0; v < adj_.size(); ++v) {
            if (color_[v] >= 0) continue;
            const int dom = domain_size(v);
            if (best == adj_.size() || dom < best_dom ||
                (dom == best_dom && adj_[v].size() > adj_[best].size())) {
                best = v;
                best_dom = dom;
            }
        }
        return best;
    }

    bool assign(std::size_t v, int c) {
        color_[v] = c;
        bool ok = true;
        for (std::size_t w : adj_[v]) {
            if (++forbidden_[w][static_cast<std::size_t>(c)] == 1 && color_[w] < 0 && domain_size(w) == 0) ok = false;
        }
        return ok;
    }

    void unassign(std::size_t v, int c) {
        color_[v] = -1;
        for (std::size_t w : adj_[v]) --forbidden_[w][static_cast<std::size_t>(c)];
    }

    bool search(std::size_t placed, int used) {
        if (placed == adj_.size()) return true;
        const std::size_t v = pick();
        const int limit = std::min(budget_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (forbidden_[v][static_cast<std::size_t>(c)] != 0) continue;
            const bool ok = assign(v, c);
            if (ok && search(placed + 1, std::max(used, c + 1))) return true;
            unassign(v, c);
        }
        return false;
    }

    const std::vector<std::vector<std::size_t>>& adj_;
    int budget_;
    std::vector<int> color_;
    std::vector<std::vector<int>> forbidden_;
};

// Crossings adjacent iff they share a wire.
inline std::vector<std::vector<std::size_t>> wire_conflicts(const WiringDiagram& d) {
    std::vector<std::vector<std::size_t>> on_wire(static_cast<std::size_t>(d.wire_count()));
    for_each_block(d, [&](std::size_t i, std::span<const int> block) {
        for (int w : block) on_wire[static_cast<std::size_t>(w - 1)].push_back(i);
    });
    std::vector<std::vector<std::size_t>> adj(d.event_count());
    for (const auto& list : on_wire)
        for (std::size_t a : list)
            for (std::size_t b : list)
                if (a != b) adj[a].push_back(b);
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return adj;
}

}  // namespace detail

/// Crossing coloring with no repeated color along any pseudoline. Simple
/// arrangements get the round-robin coloring of K_n; others a DSATUR greedy
/// coloring, falling back to exhaustive DSATUR search within `budget`
/// (default n, which always suffices).
inline Coloring line_respecting_coloring(const WiringDiagram& d, std::optional<int> budget = std::nullopt) {
    require_valid(d);
    const int n = d.wire_count();
    const int limit = budget.value_or(n);
    if (limit > detail::kMaxPalette) throw std::invalid_argument("line_respecting_coloring: budget too large");

    if (is_simple(d)) {
        std::vector<int> colors;
        for (const CrossingInfo& c : crossings(d))
            colors.push_back(round_robin_color(n, c.lines[0] - 1, c.lines[1] - 1));
        Coloring col{ColoringMode::Crossing, std::move(colors)};
        if (col.color_count() > limit)
            throw BudgetExhausted("line_respecting_coloring: simple arrangement of " + std::to_string(n) +
                                  " wires needs " + std::to_string(col.color_count()) + " colors");
        return col;
    }

    const auto adj = detail::wire_conflicts(d);
    auto greedy = detail::dsatur_greedy(adj);
    Coloring col{ColoringMode::Crossing, greedy};
    if (col.color_count() <= limit) return col;

    if (auto exact = detail::DsaturSearch(adj, limit).run()) return {ColoringMode::Crossing, std::move(*exact)};
    if (limit >= n)
        throw BudgetExhausted("line_respecting_coloring: no coloring with " + std::to_string(limit) +
                              " colors although n colors always suffice; this is a bug");
    throw BudgetExhausted("line_respecting_coloring: no coloring within budget " + std::to_string(limit));
}

/// Wires are vertices (label - 1); ordinary points are edges.
inline Graph ordinary_graph(const WiringDiagram& d) {
    Graph g{d.wire_count(), {}};
    for (const CrossingInfo& c : crossings(d))
        if (c.degree() == 2) g.edges.emplace_back(c.lines[0] - 1, c.lines[1] - 1);
    return g;
}

/// Smallest integer k with k^(l-1) >= 4(l+r)n / (l-1), computed exactly.
inline int lll_color_budget(int n, int l, int r) {
    if (l < 3) throw std::invalid_argument("lll_color_budget: l must be >= 3");
    if (r < 0 || n < 1) throw std::invalid_argument("lll_color_budget: need r >= 0 and n >= 1");
    const auto target = static_cast<unsigned __int128>(4) * static_cast<unsigned>(l + r) * static_cast<unsigned>(n);
    auto enough = [&](std::uint64_t k) {
        unsigned __int128 power = 1;
        for (int i = 0; i < l - 1; ++i) {
            power *= k;
            if (power * static_cast<unsigned>(l - 1) >= target) return true;
        }
        return power * static_cast<unsigned>(l - 1) >= target;
    };
    std::uint64_t lo = 1, hi = 1;
    while (!enough(hi)) hi *= 2;
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (enough(mid)) hi = mid;
        else lo = mid + 1;
    }
    return static_cast<int>(lo);
}

struct LllOptions {
    std::optional<int> palette;                // default: lll_color_budget(n, l, r)
    std::uint64_t seed = 0;
    std::optional<std::size_t> max_rounds;     // default: 1000 * max(1, events)
};

/// Random line coloring without monochromatic crossings of degree in
/// [l, l + r], by Moser-Tardos resampling: while some such crossing is
/// monochromatic, the lowest-index one gets all its lines recolored.
inline Coloring lll_coloring(const WiringDiagram& d, int l, int r, const LllOptions& opt = {}) {
    if (l < 3) throw std::invalid_argument("lll_coloring: l must be >= 3");
    if (r < 0) throw std::invalid_argument("lll_coloring: r must be >= 0");
    const auto info = crossings(d);
    const int k = opt.palette.value_or(lll_color_budget(d.wire_count(), l, r));
    if (k < 1) throw std::invalid_argument("lll_coloring: palette must be >= 1");
    const std::size_t max_rounds = opt.max_rounds.value_or(1000 * std::max<std::size_t>(1, d.event_count()));

    std::vector<const CrossingInfo*> targets;
    for (const CrossingInfo& c : info)
        if (c.degree() >= l && c.degree() <= l + r) targets.push_back(&c);

    std::mt19937_64 rng(opt.seed);
    auto draw = [&] { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); };
    std::vector<int> colors(static_cast<std::size_t>(d.wire_count()));
    for (int& c : colors) c = draw();

    auto monochromatic = [&](const CrossingInfo& c) {
        const int first = colors[static_cast<std::size_t>(c.lines[0] - 1)];
        return std::all_of(c.lines.begin(), c.lines.end(),
                           [&](int w) { return colors[static_cast<std::size_t>(w - 1)] == first; });
    };
    for (std::size_t round = 0;; ++round) {
        auto bad = std::find_if(targets.begin(), targets.end(), [&](const CrossingInfo* c) { return monochromatic(*c); });
        if (bad == targets.end()) break;
        if (round == max_rounds)
            throw ResamplingExhausted("lll_coloring: still violated after " + std::to_string(max_rounds) +
                                      " resamplings with " + std::to_string(k) + " colors");
        for (int w : (*bad)->lines) colors[static_cast<std::size_t>(w - 1)] = draw();
    }
    return make_coloring(ColoringMode::Line, std::move(colors));
}

/// Integer square root rounded up.
inline int ceil_sqrt(int n) {
    int s = static_cast<int>(std::sqrt(static_cast<double>(n)));
    while (s * s < n) ++s;
    while (s > 0 && (s - 1) * (s - 1) >= n) --s;
    return s;
}

struct HighDegreeColoring {
    Coloring coloring;
    std::vector<std::vector<int>> bundles;  // removed line sets, original labels
    int threshold = 0;                      // ceil(sqrt(n))
    int lll_palette = 0;                    // 0 when the resampling stage was skipped
};

/// Line coloring without monochromatic crossings of degree >= 4, using
/// O(sqrt n) colors. Bundles of crossings with degree above ceil(sqrt n) are
/// removed, the rest is colored by resampling with l = 4, r = ceil(sqrt n) - 4,
/// and each bundle comes back with two fresh colors alternating by label.
inline HighDegreeColoring degree_ge4_coloring(const WiringDiagram& d, std::uint64_t seed) {
    require_valid(d);
    const int n = d.wire_count();
    HighDegreeColoring out;
    out.threshold = ceil_sqrt(n);

    std::vector<int> remaining(static_cast<std::size_t>(n));
    std::iota(remaining.begin(), remaining.end(), 1);
    while (!remaining.empty()) {
        const WiringDiagram sub = restrict_to(d, remaining);
        const auto info = crossings(sub);
        auto big = std::find_if(info.begin(), info.end(),
                                [&](const CrossingInfo& c) { return c.degree() > out.threshold; });
        if (big == info.end()) break;
        std::vector<int> bundle;
        for (int w : big->lines) bundle.push_back(remaining[static_cast<std::size_t>(w - 1)]);
        std::vector<int> rest;
        std::set_difference(remaining.begin(), remaining.end(), bundle.begin(), bundle.end(), std::back_inserter(rest));
        remaining = std::move(rest);
        out.bundles.push_back(std::move(bundle));
    }

    std::vector<int> colors(static_cast<std::size_t>(n), -1);
    int next = 0;
    if (!remaining.empty()) {
        const WiringDiagram sub = restrict_to(d, remaining);
        const auto info = crossings(sub);
        const bool needs_stage =
            std::any_of(info.begin(), info.end(), [](const CrossingInfo& c) { return c.degree() >= 4; });
        std::vector<int> stage(remaining.size(), 0);
        if (needs_stage) {
            const int r = out.threshold - 4;
            out.lll_palette = lll_color_budget(sub.wire_count(), 4, r);
            stage = lll_coloring(sub, 4, r, {out.lll_palette, seed, std::nullopt}).colors;
        }
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            colors[static_cast<std::size_t>(remaining[i] - 1)] = stage[i];
            next = std::max(next, stage[i] + 1);
        }
    }
    for (const auto& bundle : out.bundles) {
        for (std::size_t i = 0; i < bundle.size(); ++i)
            colors[static_cast<std::size_t>(bundle[i] - 1)] = next + static_cast<int>(i % 2);
        next += 2;
    }
    out.coloring = {ColoringMode::Line, std::move(colors)};
    return out;
}

/// Lines in label order, each taking the smallest color that leaves no fully
/// colored crossing monochromatic. Uses at most n colors.
inline Coloring greedy_pseudoline_coloring(const WiringDiagram& d) {
    const auto info = crossings(d);
    const auto n = static_cast<std::size_t>(d.wire_count());
    std::vector<std::vector<const CrossingInfo*>> on_wire(n);
    for (const CrossingInfo& c : info)
        for (int w : c.lines) on_wire[static_cast<std::size_t>(w - 1)].push_back(&c);
    std::vector<int> colors(n, -1);
    for (std::size_t w = 0; w < n; ++w) {
        for (int c = 0;; ++c) {
            colors[w] = c;
            const bool ok = std::none_of(on_wire[w].begin(), on_wire[w].end(), [&](const CrossingInfo* x) {
                return std::all_of(x->lines.begin(), x->lines.end(),
                                   [&](int v) { return colors[static_cast<std::size_t>(v - 1)] == c; });
            });
            if (ok) break;
        }
    }
    return {ColoringMode::Line, std::move(colors)};
}

}  // namespace pseudoline
