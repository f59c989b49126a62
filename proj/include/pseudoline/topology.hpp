#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "wiring_diagram.hpp"

namespace pseudoline {

/// A cell is one vertical gap followed across a run of consecutive slabs. Gap g
/// lies between positions g-1 and g, so gap 0 is above every wire and gap n below.
struct Cell {
    int gap = 0;
    std::size_t first_slab = 0;
    std::size_t last_slab = 0;
    bool bounded = false;
};

struct CellComplex {
    int wire_count = 0;
    std::size_t event_count = 0;
    std::vector<Cell> cells;
    /// Per crossing, its 2k incident cells in clockwise order starting with the
    /// cell directly above it.
    std::vector<std::vector<int>> incidence;
    /// Per cell, the sorted crossings on its boundary.
    std::vector<std::vector<std::size_t>> boundary;
    int north = 0;
    /// Cell id of every (slab, gap) node, slab-major.
    std::vector<int> node_cell;

    int cell_at(std::size_t slab, int gap) const {
        return node_cell.at(slab * static_cast<std::size_t>(wire_count + 1) + static_cast<std::size_t>(gap));
    }
    std::size_t bounded_count() const {
        return static_cast<std::size_t>(
            std::count_if(cells.begin(), cells.end(), [](const Cell& c) { return c.bounded; }));
    }
};

/// Slab sweep. A gap persists across event (p, k) iff g <= p or g >= p + k;
/// cell ids are assigned in order of first occurrence (slab-major, gap-minor).
inline CellComplex build_cells(const WiringDiagram& d) {
    require_valid(d);
    CellComplex cx;
    const int n = d.wire_count();
    const std::size_t events = d.event_count();
    const auto gaps = static_cast<std::size_t>(n + 1);
    cx.wire_count = n;
    cx.event_count = events;
    cx.node_cell.assign((events + 1) * gaps, -1);

    auto open_cell = [&](std::size_t slab, int gap) {
        cx.cells.push_back({gap, slab, slab, false});
        return static_cast<int>(cx.cells.size() - 1);
    };
    for (int g = 0; g <= n; ++g) cx.node_cell[static_cast<std::size_t>(g)] = open_cell(0, g);
    for (std::size_t s = 1; s <= events; ++s) {
        const Event& e = d.event(s - 1);
        for (int g = 0; g <= n; ++g) {
            int id;
            if (g <= e.top || g >= e.top + e.width) {
                id = cx.node_cell[(s - 1) * gaps + static_cast<std::size_t>(g)];
                cx.cells[static_cast<std::size_t>(id)].last_slab = s;
            } else {
                id = open_cell(s, g);
            }
            cx.node_cell[s * gaps + static_cast<std::size_t>(g)] = id;
        }
    }
    for (Cell& c : cx.cells)
        c.bounded = c.gap != 0 && c.gap != n && c.first_slab > 0 && c.last_slab < events;
    cx.north = cx.node_cell[0];

    cx.incidence.resize(events);
    cx.boundary.resize(cx.cells.size());
    for (std::size_t i = 0; i < events; ++i) {
        const Event& e = d.event(i);
        auto& inc = cx.incidence[i];
        inc.push_back(cx.cell_at(i, e.top));
        for (int g = e.top + 1; g < e.top + e.width; ++g) inc.push_back(cx.cell_at(i + 1, g));
        inc.push_back(cx.cell_at(i, e.top + e.width));
        for (int g = e.top + e.width - 1; g > e.top; --g) inc.push_back(cx.cell_at(i, g));
        for (int c : inc) cx.boundary[static_cast<std::size_t>(c)].push_back(i);
    }
    for (auto& b : cx.boundary) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
    }
    return cx;
}

inline int north_cell(const CellComplex& cx) { return cx.north; }

/// For every cell and wire, the slabs in which the wire bounds the cell form a
/// single run on a single side.
inline bool single_boundary_segment_per_wire(const WiringDiagram& d, const CellComplex& cx) {
    const auto slabs = slab_orders(d);
    const int n = d.wire_count();
    for (const Cell& c : cx.cells) {
        // side: +1 above the cell, -1 below; last slab seen per wire
        std::vector<int> side(static_cast<std::size_t>(n + 1), 0);
        std::vector<std::size_t> last(static_cast<std::size_t>(n + 1), 0);
        auto touch = [&](int wire, int s, std::size_t slab) {
            auto w = static_cast<std::size_t>(wire);
            if (side[w] == 0) {
                side[w] = s;
                last[w] = slab;
                return true;
            }
            if (side[w] != s || last[w] + 1 != slab) return false;
            last[w] = slab;
            return true;
        };
        for (std::size_t s = c.first_slab; s <= c.last_slab; ++s) {
            const auto& order = slabs[s];
            if (c.gap > 0 && !touch(order[static_cast<std::size_t>(c.gap - 1)], +1, s)) return false;
            if (c.gap < n && !touch(order[static_cast<std::size_t>(c.gap)], -1, s)) return false;
        }
    }
    return true;
}

/// Crossings that share at least one cell with each crossing, sorted.
inline std::vector<std::vector<std::size_t>> cell_neighbors(const CellComplex& cx) {
    std::vector<std::set<std::size_t>> sets(cx.event_count);
    for (const auto& b : cx.boundary)
        for (std::size_t a : b)
            for (std::size_t c : b)
                if (a != c) sets[a].insert(c);
    std::vector<std::vector<std::size_t>> out;
    out.reserve(sets.size());
    for (auto& s : sets) out.emplace_back(s.begin(), s.end());
    return out;
}

/// The arrangement graph oriented left to right (north cell on top).
struct OrientedArrangementGraph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> arcs;  // sorted
    std::vector<std::size_t> topo_order;                    // the event order
};

inline OrientedArrangementGraph arrangement_graph(const WiringDiagram& d) {
    require_valid(d);
    OrientedArrangementGraph g;
    g.vertex_count = d.event_count();
    std::vector<std::ptrdiff_t> previous(static_cast<std::size_t>(d.wire_count() + 1), -1);
    for_each_block(d, [&](std::size_t i, std::span<const int> block) {
        for (int w : block) {
            auto& prev = previous[static_cast<std::size_t>(w)];
            if (prev >= 0) g.arcs.emplace_back(static_cast<std::size_t>(prev), i);
            prev = static_cast<std::ptrdiff_t>(i);
        }
    });
    std::sort(g.arcs.begin(), g.arcs.end());
    g.topo_order.resize(g.vertex_count);
    std::iota(g.topo_order.begin(), g.topo_order.end(), std::size_t{0});
    return g;
}

inline bool is_topological_order(const OrientedArrangementGraph& g, std::span<const std::size_t> order) {
    if (order.size() != g.vertex_count) return false;
    std::vector<std::size_t> rank(g.vertex_count, g.vertex_count);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        if (order[pos] >= g.vertex_count || rank[order[pos]] != g.vertex_count) return false;
        rank[order[pos]] = pos;
    }
    return std::all_of(g.arcs.begin(), g.arcs.end(), [&](const auto& a) { return rank[a.first] < rank[a.second]; });
}

/// Kahn's algorithm with a uniformly random choice among the available sources.
inline std::vector<std::size_t> random_topological_order(const OrientedArrangementGraph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::size_t>> out(g.vertex_count);
    std::vector<int> indeg(g.vertex_count, 0);
    for (auto [a, b] : g.arcs) {
        out[a].push_back(b);
        ++indeg[b];
    }
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < g.vertex_count; ++v)
        if (indeg[v] == 0) ready.push_back(v);
    std::vector<std::size_t> order;
    while (!ready.empty()) {
        const std::size_t pick = rng() % ready.size();
        const std::size_t v = ready[pick];
        ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(pick));
        order.push_back(v);
        for (std::size_t w : out[v])
            if (--indeg[w] == 0) ready.push_back(w);
    }
    if (order.size() != g.vertex_count) throw std::logic_error("arrangement graph has a cycle");
    return order;
}

/// Crossings before c in `order` that share a cell with c.
inline std::vector<std::size_t> conflict_ancestors(const WiringDiagram& d, const CellComplex& cx,
                                                   std::span<const std::size_t> order, std::size_t c) {
    if (!is_topological_order(arrangement_graph(d), order))
        throw std::invalid_argument("conflict_ancestors: order is not a topological sort");
    if (c >= cx.event_count) throw std::out_of_range("conflict_ancestors: crossing index out of range");
    std::vector<std::size_t> rank(order.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = pos;
    std::set<std::size_t> out;
    for (int cell : cx.incidence[c])
        for (std::size_t other : cx.boundary[static_cast<std::size_t>(cell)])
            if (rank[other] < rank[c]) out.insert(other);
    return {out.begin(), out.end()};
}

struct Hypergraph {
    int vertex_count = 0;
    std::vector<std::vector<int>> edges;  // each sorted

    /// Largest intersection of two distinct hyperedges (0 with fewer than two).
    int codegree() const {
        int best = 0;
        for (std::size_t a = 0; a < edges.size(); ++a)
            for (std::size_t b = a + 1; b < edges.size(); ++b) {
                std::vector<int> common;
                std::set_intersection(edges[a].begin(), edges[a].end(), edges[b].begin(), edges[b].end(),
                                      std::back_inserter(common));
                best = std::max(best, static_cast<int>(common.size()));
            }
        return best;
    }

    /// Every hyperedge has at least two vertices and codegree <= 1.
    bool is_simple() const {
        return std::all_of(edges.begin(), edges.end(), [](const auto& e) { return e.size() >= 2; }) &&
               codegree() <= 1;
    }
};

/// Vertices are cells; crossing c contributes the cells on whose boundary it lies.
inline Hypergraph cell_vertex_hypergraph(const WiringDiagram& d) {
    const CellComplex cx = build_cells(d);
    Hypergraph h{static_cast<int>(cx.cells.size()), {}};
    for (const auto& inc : cx.incidence) {
        std::vector<int> e(inc);
        std::sort(e.begin(), e.end());
        h.edges.push_back(std::move(e));
    }
    return h;
}

/// Vertices are wires (vertex = label - 1); crossing c contributes its lines.
inline Hypergraph line_vertex_hypergraph(const WiringDiagram& d) {
    Hypergraph h{d.wire_count(), {}};
    for (const CrossingInfo& c : crossings(d)) {
        std::vector<int> e;
        for (int w : c.lines) e.push_back(w - 1);
        h.edges.push_back(std::move(e));
    }
    return h;
}

}  // namespace pseudoline
