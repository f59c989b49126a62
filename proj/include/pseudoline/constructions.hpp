#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "detail/line_arrangement.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "wiring_diagram.hpp"

namespace pseudoline {

/// Simple arrangement of n lines with a convex n-gon cell: n-1 tangents to a
/// parabola form a convex chain, and one line of intermediate slope cuts it
/// above every chain vertex.
inline WiringDiagram construct_polygon_cell(int n) {
    using detail::Rational;
    if (n < 3) throw std::invalid_argument("construct_polygon_cell: n must be >= 3");
    std::vector<detail::Line> lines;
    for (int i = 1; i < n; ++i) {
        const Rational a = 2 * i - n;
        lines.push_back({2 * a, -a * a});
    }
    lines.push_back({Rational(1), Rational(n * n + n)});
    return detail::wiring_from_lines(lines).diagram;
}

/// Wire bundles that replace the pseudolines of a base arrangement, with the
/// labels of each bundle listed top to bottom.
struct BundleArrangement {
    WiringDiagram diagram;
    std::vector<std::vector<int>> bundles;

    /// Line coloring by bundle index, indexed by label - 1.
    std::vector<int> bundle_coloring() const {
        std::vector<int> colors(static_cast<std::size_t>(diagram.wire_count()), 0);
        for (std::size_t b = 0; b < bundles.size(); ++b)
            for (int w : bundles[b]) colors[static_cast<std::size_t>(w - 1)] = static_cast<int>(b);
        return colors;
    }
};

namespace detail {

// Moves the block at [top, top + above) below the `below` wires that follow
// it, one ordinary crossing at a time.
inline void push_grid(std::vector<Event>& events, int top, int above, int below) {
    for (int j = 0; j < below; ++j)
        for (int pos = top + j + above - 1; pos >= top + j; --pos) events.push_back({pos, 2});
}

// Strip sizes as balanced as possible, larger strips first.
inline std::vector<int> balanced_parts(int n, int k) {
    std::vector<int> parts(static_cast<std::size_t>(k), n / k);
    for (int i = 0; i < n % k; ++i) ++parts[static_cast<std::size_t>(i)];
    return parts;
}

inline std::vector<std::vector<int>> consecutive_bundles(const std::vector<int>& sizes) {
    std::vector<std::vector<int>> bundles;
    int next = 1;
    for (int s : sizes) {
        bundles.emplace_back(static_cast<std::size_t>(s));
        std::iota(bundles.back().begin(), bundles.back().end(), next);
        next += s;
    }
    return bundles;
}

}  // namespace detail

/// Simple arrangement of k strips (bubble-sort order), each strip replaced by
/// parallel wires. Strip i is twisted where it meets strip i+1 (mod k): its
/// wires and the first wire of strip i+1 pass through one common crossing.
/// For k = 2 the two twists coincide and the result is the pencil.
inline BundleArrangement twisted_bundles_layout(int k, int n) {
    if (k < 2 || k > n) throw std::invalid_argument("twisted_bundles: need 2 <= k <= n");
    const auto sizes = detail::balanced_parts(n, k);
    BundleArrangement out{WiringDiagram(), detail::consecutive_bundles(sizes)};
    if (k == 2) {
        out.diagram = gen_trivial(n);
        return out;
    }

    std::vector<int> strip_at(static_cast<std::size_t>(k));
    std::iota(strip_at.begin(), strip_at.end(), 0);
    std::vector<Event> events;
    for (int pass = 0; pass + 1 < k; ++pass)
        for (int q = 0; q + 1 < k - pass; ++q) {
            const int upper = strip_at[static_cast<std::size_t>(q)];
            const int lower = strip_at[static_cast<std::size_t>(q) + 1];
            const int a = sizes[static_cast<std::size_t>(upper)];
            const int b = sizes[static_cast<std::size_t>(lower)];
            int top = 0;
            for (int j = 0; j < q; ++j) top += sizes[static_cast<std::size_t>(strip_at[static_cast<std::size_t>(j)])];
            if ((upper + 1) % k == lower) {
                // upper strip twists through the top wire of the lower strip
                events.push_back({top, a + 1});
                detail::push_grid(events, top + 1, a, b - 1);
            } else if ((lower + 1) % k == upper) {
                // lower strip twists through the bottom wire of the upper strip
                events.push_back({top + a - 1, b + 1});
                detail::push_grid(events, top, a - 1, b);
            } else {
                detail::push_grid(events, top, a, b);
            }
            std::swap(strip_at[static_cast<std::size_t>(q)], strip_at[static_cast<std::size_t>(q) + 1]);
        }
    out.diagram = WiringDiagram(n, std::move(events));
    return out;
}

inline WiringDiagram construct_twisted_bundles(int k, int n) { return twisted_bundles_layout(k, n).diagram; }

/// Simple arrangement of r strips of three wires; each strip first twists in
/// its own degree-3 crossing.
inline BundleArrangement gap_layout(int r) {
    if (r < 1) throw std::invalid_argument("construct_gap: r must be >= 1");
    std::vector<Event> events;
    for (int i = 0; i < r; ++i) events.push_back({3 * i, 3});
    for (int pass = 0; pass + 1 < r; ++pass)
        for (int q = 0; q + 1 < r - pass; ++q) detail::push_grid(events, 3 * q, 3, 3);
    return {WiringDiagram(3 * r, std::move(events)),
            detail::consecutive_bundles(std::vector<int>(static_cast<std::size_t>(r), 3))};
}

inline WiringDiagram construct_gap(int r) { return gap_layout(r).diagram; }

/// Wiring of the graph-coloring reduction and the role of every wire.
struct EflReduction {
    WiringDiagram diagram;
    std::vector<int> vertex_wire;                     // wire label of l_i
    std::map<std::pair<int, int>, int> connector_wire;  // non-edge {i, j} -> wire of L_ij
    int apex_wire = 0;                                // L*

    /// The coloring from the upper-bound argument: graph colors on the base
    /// wires, one extra color on the connectors, another on L*.
    std::vector<int> lift_coloring(const std::vector<int>& vertex_colors) const {
        const int k = vertex_colors.empty() ? 0 : *std::max_element(vertex_colors.begin(), vertex_colors.end()) + 1;
        std::vector<int> colors(static_cast<std::size_t>(diagram.wire_count()), 0);
        for (std::size_t i = 0; i < vertex_wire.size(); ++i)
            colors[static_cast<std::size_t>(vertex_wire[i] - 1)] = vertex_colors.at(i);
        for (const auto& [pair, w] : connector_wire) colors[static_cast<std::size_t>(w - 1)] = k;
        colors[static_cast<std::size_t>(apex_wire - 1)] = connector_wire.empty() ? k : k + 1;
        return colors;
    }
};

namespace detail {

// Degree >= 3 crossings of the reduction must be exactly the triples
// {l_i, l_j, L_ij} and the common point of all L_ij and L*.
inline bool has_reduction_incidences(const EflReduction& r) {
    if (!is_valid(r.diagram)) return false;
    std::vector<std::vector<int>> expected;
    for (const auto& [pair, w] : r.connector_wire) {
        std::vector<int> t{r.vertex_wire[static_cast<std::size_t>(pair.first)],
                           r.vertex_wire[static_cast<std::size_t>(pair.second)], w};
        std::sort(t.begin(), t.end());
        expected.push_back(std::move(t));
    }
    if (r.connector_wire.size() >= 2) {
        std::vector<int> apex{r.apex_wire};
        for (const auto& [pair, w] : r.connector_wire) apex.push_back(w);
        std::sort(apex.begin(), apex.end());
        expected.push_back(std::move(apex));
    }
    std::vector<std::vector<int>> actual;
    for (const CrossingInfo& c : crossings(r.diagram))
        if (c.degree() >= 3) actual.push_back(c.lines);
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    return expected == actual;
}

}  // namespace detail

/// Arrangement A_G with n + C(n,2) - m + 1 wires: base lines l_i tangent to a
/// parabola, a connector L_ij through l_i x l_j for every non-edge, all
/// connectors and L* concurrent at an apex above the base arrangement.
inline EflReduction build_efl_reduction(const Graph& g) {
    using detail::Rational;
    if (g.vertex_count < 2) throw std::invalid_argument("efl_reduction: graph needs >= 2 vertices");
    if (!g.is_simple()) throw std::invalid_argument("efl_reduction: graph is not simple");
    const int n = g.vertex_count;

    std::vector<std::pair<int, int>> non_edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.has_edge(i, j)) non_edges.emplace_back(i, j);

    const Rational apex_y = Rational(n) * n * n * n + 7;
    for (int attempt = 0; attempt < 200; ++attempt) {
        const Rational apex_x = Rational(n + 1, 2) + Rational(2 * attempt + 1, 7 * (attempt + 3));
        std::vector<detail::Line> lines;
        for (int i = 1; i <= n; ++i) lines.push_back({Rational(2 * i), Rational(-i * i)});
        for (auto [i, j] : non_edges) {
            const Rational a = i + 1;
            const Rational b = j + 1;
            lines.push_back(detail::Line::through(apex_x, apex_y, (a + b) / 2, a * b));
        }
        const Rational apex_slope = Rational(-1, 3) - Rational(attempt, 11);
        lines.push_back({apex_slope, apex_y - apex_slope * apex_x});

        std::vector<Rational> slopes;
        for (const auto& l : lines) slopes.push_back(l.slope);
        std::sort(slopes.begin(), slopes.end());
        if (std::adjacent_find(slopes.begin(), slopes.end()) != slopes.end()) continue;

        const auto wired = detail::wiring_from_lines(lines);
        EflReduction r;
        r.diagram = wired.diagram;
        for (int i = 0; i < n; ++i) r.vertex_wire.push_back(wired.label[static_cast<std::size_t>(i)]);
        for (std::size_t e = 0; e < non_edges.size(); ++e)
            r.connector_wire[non_edges[e]] = wired.label[static_cast<std::size_t>(n) + e];
        r.apex_wire = wired.label.back();
        if (detail::has_reduction_incidences(r)) return r;
    }
    throw std::logic_error("efl_reduction: no generic apex found");
}

inline WiringDiagram construct_efl_reduction(const Graph& g) { return build_efl_reduction(g).diagram; }

}  // namespace pseudoline
