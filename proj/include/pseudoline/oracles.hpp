#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "coloring.hpp"
#include "constructions.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "topology.hpp"
#include "wiring_diagram.hpp"

namespace pseudoline {

/// Which coloring problem a check or exact search refers to.
struct Mode {
    enum class Kind { Cell, Line, Simultaneous, Pl, PlDegreeAtLeast };
    Kind kind = Kind::Cell;
    int min_degree = 2;  // only for PlDegreeAtLeast

    static Mode cell() { return {Kind::Cell, 2}; }
    static Mode line() { return {Kind::Line, 2}; }
    static Mode simultaneous() { return {Kind::Simultaneous, 2}; }
    static Mode pl() { return {Kind::Pl, 2}; }
    static Mode pl_degree_at_least(int l) { return {Kind::PlDegreeAtLeast, l}; }

    bool colors_lines() const { return kind == Kind::Pl || kind == Kind::PlDegreeAtLeast; }
    bool operator==(const Mode&) const = default;
};

inline std::string to_string(const Mode& m) {
    switch (m.kind) {
        case Mode::Kind::Cell: return "cell";
        case Mode::Kind::Line: return "line";
        case Mode::Kind::Simultaneous: return "simultaneous";
        case Mode::Kind::Pl: return "pl";
        case Mode::Kind::PlDegreeAtLeast: return "pl-deg-at-least-" + std::to_string(m.min_degree);
    }
    return "?";
}

inline Mode parse_mode(const std::string& s) {
    if (s == "cell") return Mode::cell();
    if (s == "line") return Mode::line();
    if (s == "simultaneous") return Mode::simultaneous();
    if (s == "pl") return Mode::pl();
    const std::string prefix = "pl-deg-at-least-";
    if (s.rfind(prefix, 0) == 0) return Mode::pl_degree_at_least(std::stoi(s.substr(prefix.size())));
    throw std::invalid_argument("unknown mode '" + s + "'");
}

struct Violation {
    enum class Kind { Cell, Line, Monochromatic };
    Kind kind = Kind::Cell;
    int where = 0;  // cell id, wire label, or crossing index
    int color = 0;
    std::size_t first = 0;  // the two clashing crossings (the crossing itself twice for Monochromatic)
    std::size_t second = 0;

    bool operator==(const Violation&) const = default;
};

namespace detail {

inline void duplicate_colors(const std::vector<std::size_t>& items, const std::vector<int>& colors,
                             Violation::Kind kind, int where, std::vector<Violation>& out) {
    for (std::size_t a = 0; a < items.size(); ++a)
        for (std::size_t b = a + 1; b < items.size(); ++b)
            if (colors[items[a]] == colors[items[b]])
                out.push_back({kind, where, colors[items[a]], items[a], items[b]});
}

inline std::vector<std::vector<std::size_t>> crossings_on_wires(const WiringDiagram& d) {
    std::vector<std::vector<std::size_t>> on(static_cast<std::size_t>(d.wire_count()));
    for (const CrossingInfo& c : crossings(d))
        for (int w : c.lines) on[static_cast<std::size_t>(w - 1)].push_back(c.index);
    return on;
}

}  // namespace detail

/// Every violation of `m` by `col`; empty iff the coloring is valid.
inline std::vector<Violation> verify_coloring(const WiringDiagram& d, const Coloring& col, const Mode& m) {
    require_valid(d);
    std::vector<Violation> out;
    if (m.colors_lines()) {
        if (col.mode != ColoringMode::Line || col.colors.size() != static_cast<std::size_t>(d.wire_count()))
            throw std::invalid_argument("verify_coloring: mode " + to_string(m) + " needs one color per wire");
        for (const CrossingInfo& c : crossings(d)) {
            if (c.degree() < m.min_degree) continue;
            const int first = col.colors[static_cast<std::size_t>(c.lines[0] - 1)];
            if (std::all_of(c.lines.begin(), c.lines.end(),
                            [&](int w) { return col.colors[static_cast<std::size_t>(w - 1)] == first; }))
                out.push_back({Violation::Kind::Monochromatic, static_cast<int>(c.index), first, c.index, c.index});
        }
        return out;
    }
    if (col.mode != ColoringMode::Crossing || col.colors.size() != d.event_count())
        throw std::invalid_argument("verify_coloring: mode " + to_string(m) + " needs one color per crossing");
    if (m.kind == Mode::Kind::Cell || m.kind == Mode::Kind::Simultaneous) {
        const CellComplex cx = build_cells(d);
        for (std::size_t f = 0; f < cx.boundary.size(); ++f)
            detail::duplicate_colors(cx.boundary[f], col.colors, Violation::Kind::Cell, static_cast<int>(f), out);
    }
    if (m.kind == Mode::Kind::Line || m.kind == Mode::Kind::Simultaneous) {
        const auto on = detail::crossings_on_wires(d);
        for (std::size_t w = 0; w < on.size(); ++w)
            detail::duplicate_colors(on[w], col.colors, Violation::Kind::Line, static_cast<int>(w + 1), out);
    }
    return out;
}

namespace detail {

// Exhaustive K-coloring of items under two kinds of constraints: pairwise
// conflicts (endpoints differ) and groups (not all members equal). Items are
// ordered so each next one has the most already-ordered partners; an item may
// open at most one new color, so the first item is always color 0.
class ExactColoring {
public:
    ExactColoring(std::size_t items, std::vector<std::vector<std::size_t>> conflicts,
                  std::vector<std::vector<std::size_t>> groups)
        : n_(items), conflicts_(std::move(conflicts)), groups_(std::move(groups)), groups_of_(items) {
        conflicts_.resize(n_);
        for (std::size_t g = 0; g < groups_.size(); ++g)
            for (std::size_t v : groups_[g]) groups_of_[v].push_back(g);
        order_items();
    }

    std::optional<std::vector<int>> solve(int k) {
        if (n_ == 0) return std::vector<int>{};
        if (k <= 0) return std::nullopt;
        k_ = k;
        color_.assign(n_, -1);
        if (extend(0, 0)) return color_;
        return std::nullopt;
    }

private:
    void order_items() {
        std::vector<std::set<std::size_t>> partners(n_);
        for (std::size_t v = 0; v < n_; ++v) partners[v].insert(conflicts_[v].begin(), conflicts_[v].end());
        for (const auto& g : groups_)
            for (std::size_t a : g)
                for (std::size_t b : g)
                    if (a != b) partners[a].insert(b);
        std::vector<int> links(n_, 0);
        std::vector<bool> placed(n_, false);
        for (std::size_t step = 0; step < n_; ++step) {
            std::size_t best = n_;
            for (std::size_t v = 0; v < n_; ++v) {
                if (placed[v]) continue;
                if (best == n_ || links[v] > links[best] ||
                    (links[v] == links[best] && partners[v].size() > partners[best].size()))
                    best = v;
            }
            placed[best] = true;
            order_.push_back(best);
            for (std::size_t w : partners[best]) ++links[w];
        }
    }

    bool allowed(std::size_t v, int c) const {
        for (std::size_t w : conflicts_[v])
            if (color_[w] == c) return false;
        for (std::size_t g : groups_of_[v]) {
            bool all_same = true;
            for (std::size_t w : groups_[g])
                if (w != v && color_[w] != c) {
                    all_same = false;
                    break;
                }
            if (all_same) return false;
        }
        return true;
    }

    bool extend(std::size_t pos, int used) {
        if (pos == n_) return true;
        const std::size_t v = order_[pos];
        const int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (!allowed(v, c)) continue;
            color_[v] = c;
            if (extend(pos + 1, std::max(used, c + 1))) return true;
            color_[v] = -1;
        }
        return false;
    }

    std::size_t n_;
    std::vector<std::vector<std::size_t>> conflicts_;
    std::vector<std::vector<std::size_t>> groups_;
    std::vector<std::vector<std::size_t>> groups_of_;
    std::vector<std::size_t> order_;
    std::vector<int> color_;
    int k_ = 0;
};

inline void add_clique(std::vector<std::set<std::size_t>>& adj, const std::vector<std::size_t>& items) {
    for (std::size_t a : items)
        for (std::size_t b : items)
            if (a != b) adj[a].insert(b);
}

inline ExactColoring make_problem(const WiringDiagram& d, const Mode& m) {
    require_valid(d);
    if (m.colors_lines()) {
        std::vector<std::vector<std::size_t>> groups;
        for (const CrossingInfo& c : crossings(d)) {
            if (c.degree() < m.min_degree) continue;
            std::vector<std::size_t> g;
            for (int w : c.lines) g.push_back(static_cast<std::size_t>(w - 1));
            groups.push_back(std::move(g));
        }
        return ExactColoring(static_cast<std::size_t>(d.wire_count()), {}, std::move(groups));
    }
    std::vector<std::set<std::size_t>> adj(d.event_count());
    if (m.kind == Mode::Kind::Cell || m.kind == Mode::Kind::Simultaneous)
        for (const auto& b : build_cells(d).boundary) add_clique(adj, b);
    if (m.kind == Mode::Kind::Line || m.kind == Mode::Kind::Simultaneous)
        for (const auto& on : crossings_on_wires(d)) add_clique(adj, on);
    std::vector<std::vector<std::size_t>> conflicts;
    for (auto& s : adj) conflicts.emplace_back(s.begin(), s.end());
    return ExactColoring(d.event_count(), std::move(conflicts), {});
}

}  // namespace detail

/// A coloring for `m` with at most k colors, if one exists.
inline std::optional<Coloring> find_coloring(const WiringDiagram& d, const Mode& m, int k) {
    auto problem = detail::make_problem(d, m);
    auto colors = problem.solve(k);
    if (!colors) return std::nullopt;
    return Coloring{m.colors_lines() ? ColoringMode::Line : ColoringMode::Crossing, std::move(*colors)};
}

struct MinColorsResult {
    std::optional<int> minimum;  // empty: more than `cap` colors needed
    std::optional<Coloring> witness;
    int cap = 0;

    bool exceeds_cap() const { return !minimum.has_value(); }
};

/// Default search caps: cell/line n + 2, simultaneous 2n, pl n.
inline int default_cap(const WiringDiagram& d, const Mode& m) {
    const int n = d.wire_count();
    switch (m.kind) {
        case Mode::Kind::Cell:
        case Mode::Kind::Line: return n + 2;
        case Mode::Kind::Simultaneous: return 2 * n;
        default: return n;
    }
}

/// Exact minimum number of colors for `m`, by iterative deepening.
inline MinColorsResult min_colors(const WiringDiagram& d, const Mode& m, std::optional<int> cap = std::nullopt) {
    MinColorsResult out;
    out.cap = cap.value_or(default_cap(d, m));
    auto problem = detail::make_problem(d, m);
    const bool empty = m.colors_lines() ? d.wire_count() == 0 : d.event_count() == 0;
    if (empty) {
        out.minimum = 0;
        out.witness = Coloring{m.colors_lines() ? ColoringMode::Line : ColoringMode::Crossing, {}};
        return out;
    }
    for (int k = 1; k <= out.cap; ++k) {
        if (auto colors = problem.solve(k)) {
            out.minimum = k;
            out.witness = Coloring{m.colors_lines() ? ColoringMode::Line : ColoringMode::Crossing, std::move(*colors)};
            return out;
        }
    }
    return out;
}

/// Exact chromatic number of g if it is at most cap.
inline std::optional<int> chi_graph(const Graph& g, int cap) {
    if (!g.is_simple()) throw std::invalid_argument("chi_graph: graph is not simple");
    if (g.vertex_count == 0) return 0;
    std::vector<std::vector<std::size_t>> adj(static_cast<std::size_t>(g.vertex_count));
    for (auto [u, v] : g.edges) {
        adj[static_cast<std::size_t>(u)].push_back(static_cast<std::size_t>(v));
        adj[static_cast<std::size_t>(v)].push_back(static_cast<std::size_t>(u));
    }
    const std::size_t vertices = adj.size();
    detail::ExactColoring problem(vertices, std::move(adj), {});
    for (int k = 1; k <= cap; ++k)
        if (problem.solve(k)) return k;
    return std::nullopt;
}

/// Edge count of the balanced complete k-partite graph on n vertices.
inline long long turan_number(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("turan_number: need 1 <= k <= n");
    auto pairs = [](long long m) { return m * (m - 1) / 2; };
    const long long q = n / k;
    const long long r = n % k;
    return pairs(n) - r * pairs(q + 1) - (k - r) * pairs(q);
}

struct Witness {
    std::size_t index = 0;  // position in enumeration (or sample number)
    WiringDiagram diagram;
    Mode mode;
    std::optional<int> minimum;  // empty: above the search cap
    std::optional<Coloring> certificate;
    int mx = 0;
};

struct SearchReport {
    std::string kind;
    int n = 0;
    int cap = 0;
    std::size_t examined = 0;
    std::size_t checkpoint = 0;  // enumeration index to resume from
    int max_gap = 0;             // mx-gap scan only
    std::vector<Witness> witnesses;
    double elapsed_seconds = 0;
};

namespace detail {

template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, count))));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += workers) fn(i);
        });
    for (auto& th : pool) th.join();
}

inline unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

inline void certify(const Witness& w) {
    if (w.certificate && !verify_coloring(w.diagram, *w.certificate, w.mode).empty())
        throw std::logic_error("search: witness certificate does not verify");
}

}  // namespace detail

inline constexpr int kMaxSearchWires = 5;

/// Diagrams on n wires whose crossings need more than n colors when cells and
/// pseudolines must both be respected. Diagrams whose minimum exceeds
/// `threshold` are reported with an empty minimum.
inline SearchReport search_simultaneous_counterexample(int n, int threshold, unsigned workers = 0,
                                                       std::size_t start_index = 0) {
    if (n < 1 || n > kMaxSearchWires) throw std::invalid_argument("search_simultaneous: need 1 <= n <= 5");
    const auto t0 = std::chrono::steady_clock::now();
    const auto all = enumerate_all(n);
    SearchReport report{"simultaneous", n, threshold, 0, start_index, 0, {}, 0};
    const std::size_t begin = std::min(start_index, all.size());
    std::vector<std::optional<Witness>> found(all.size() - begin);
    detail::parallel_for(found.size(), workers ? workers : detail::default_workers(), [&](std::size_t i) {
        const WiringDiagram& d = all[begin + i];
        auto r = min_colors(d, Mode::simultaneous(), threshold);
        if (r.minimum && *r.minimum <= n) return;
        Witness w{begin + i, d, Mode::simultaneous(), r.minimum, r.witness, mx(d)};
        detail::certify(w);
        found[i] = std::move(w);
    });
    for (auto& f : found)
        if (f) report.witnesses.push_back(std::move(*f));
    report.examined = found.size();
    report.checkpoint = all.size();
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

/// Largest gap between the line-respecting chromatic index and mx. Full
/// enumeration for n <= 5; otherwise `samples` random diagrams from `seed`.
inline SearchReport mx_gap_scan(int n, std::size_t samples = 200, std::uint64_t seed = 1, unsigned workers = 0) {
    if (n < 1) throw std::invalid_argument("mx_gap_scan: n must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<WiringDiagram> pool;
    if (n <= kMaxSearchWires) {
        pool = enumerate_all(n);
    } else {
        for (std::size_t i = 0; i < samples; ++i) pool.push_back(gen_random(n, seed + i));
    }
    SearchReport report{"mx-gap", n, n + 2, pool.size(), pool.size(), 0, {}, 0};
    std::vector<Witness> results(pool.size());
    detail::parallel_for(pool.size(), workers ? workers : detail::default_workers(), [&](std::size_t i) {
        auto r = min_colors(pool[i], Mode::line(), n + 2);
        if (!r.minimum) throw std::logic_error("mx_gap_scan: line chromatic index above n + 2");
        results[i] = Witness{i, pool[i], Mode::line(), r.minimum, r.witness, mx(pool[i])};
        detail::certify(results[i]);
    });
    for (const auto& w : results) report.max_gap = std::max(report.max_gap, *w.minimum - w.mx);
    for (auto& w : results)
        if (*w.minimum - w.mx == report.max_gap) report.witnesses.push_back(std::move(w));
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

struct SigmaReport {
    int k = 0;
    int n = 0;
    long long turan = 0;
    long long lower_bound = 0;       // t_k(n) - n
    long long construction_count = 0;  // t_k(n) minus the sizes of bundles with >= 2 wires
    long long ordinary = 0;
    bool pl_within_k = false;
    std::optional<Coloring> witness;

    bool ok() const { return ordinary == construction_count && ordinary >= lower_bound && pl_within_k; }
};

/// Checks the twisted-bundle construction against the Turán lower bound.
inline SigmaReport sigma_bounds_check(int k, int n) {
    const BundleArrangement layout = twisted_bundles_layout(k, n);
    SigmaReport rep;
    rep.k = k;
    rep.n = n;
    rep.turan = turan_number(n, k);
    rep.lower_bound = rep.turan - n;
    rep.construction_count = rep.turan;
    if (k == 2) {
        rep.construction_count = 0;
    } else {
        for (const auto& b : layout.bundles)
            if (b.size() >= 2) rep.construction_count -= static_cast<long long>(b.size());
    }
    rep.ordinary = static_cast<long long>(ordinary_points(layout.diagram).size());
    Coloring by_bundle{ColoringMode::Line, layout.bundle_coloring()};
    if (verify_coloring(layout.diagram, by_bundle, Mode::pl()).empty()) {
        rep.witness = by_bundle;
    } else {
        rep.witness = find_coloring(layout.diagram, Mode::pl(), k);
    }
    rep.pl_within_k = rep.witness.has_value() && rep.witness->color_count() <= k;
    return rep;
}

}  // namespace pseudoline
