// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "test_support.hpp"

using namespace pseudoline;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
}

template <typename Fn>
void each_enumerated(int max_n, Fn&& fn) {
    for (int n = 1; n <= max_n; ++n)
        for_each_diagram(n, [&](const WiringDiagram& d) {
            fn(d);
            return true;
        });
}

WiringDiagram random_non_simple(int n, std::uint64_t& seed) {
    for (;;) {
        auto d = gen_random(n, seed++, 0.6);
        if (!is_simple(d)) return d;
    }
}

}  // namespace

int main() {
    criterion(1, "greedy cell coloring verifies with at most n colors", [] {
        Outcome o;
        std::size_t checked = 0;
        auto check = [&](const WiringDiagram& d) {
            const auto c = greedy_cell_coloring(d);
            ++checked;
            o.require(verify_coloring(d, c, Mode::cell()).empty(), "verify failed on " + to_inline(d));
            for (auto [a, b] : oracle::cell_conflicts(d))
                o.require(c.colors[a] != c.colors[b], "cell clash on " + to_inline(d));
            o.require(c.color_count() <= d.wire_count(), "too many colors on " + to_inline(d));
        };
        each_enumerated(5, check);
        for (int n = 6; n <= 9; ++n)
            for (std::uint64_t s = 0; s < 200; ++s) check(gen_random(n, 1000 * n + s, s % 2 ? 0.3 : 0.7));
        if (o.pass) o.detail = std::to_string(checked) + " diagrams";
        return o;
    });

    criterion(2, "polygon cell needs exactly n cell colors for n = 3, 4, 5", [] {
        Outcome o;
        for (int n = 3; n <= 5; ++n) {
            const auto d = construct_polygon_cell(n);
            const auto r = min_colors(d, Mode::cell());
            o.require(r.minimum == n, "min_colors mismatch at n=" + std::to_string(n));
            o.require(oracle::brute_min(d.event_count(), oracle::cell_conflicts(d), n + 1) == n,
                      "brute force mismatch at n=" + std::to_string(n));
        }
        return o;
    });

    criterion(3, "line-respecting coloring: n-1 / n colors on simple, min line <= n", [] {
        Outcome o;
        for (int n : {3, 4, 5, 6, 7})
            for (std::uint64_t s = 0; s < 10; ++s) {
                const auto d = gen_random_simple(n, s);
                const auto c = line_respecting_coloring(d);
                o.require(c.color_count() == (n % 2 == 0 ? n - 1 : n), "wrong count at n=" + std::to_string(n));
                o.require(verify_coloring(d, c, Mode::line()).empty(), "verify failed at n=" + std::to_string(n));
            }
        each_enumerated(5, [&](const WiringDiagram& d) {
            const auto r = min_colors(d, Mode::line());
            o.require(r.minimum && *r.minimum <= d.wire_count(), "min line > n on " + to_inline(d));
        });
        return o;
    });

    criterion(4, "at most n-1 conflict ancestors under 5 topological orders", [] {
        Outcome o;
        each_enumerated(5, [&](const WiringDiagram& d) {
            if (d.event_count() == 0) return;
            const auto cx = build_cells(d);
            const auto g = arrangement_graph(d);
            for (std::uint64_t s = 0; s < 5; ++s) {
                const auto order = random_topological_order(g, s);
                for (std::size_t c = 0; c < d.event_count(); ++c)
                    o.require(conflict_ancestors(d, cx, order, c).size() <= static_cast<std::size_t>(d.wire_count() - 1),
                              "bound broken on " + to_inline(d));
            }
        });
        return o;
    });

    criterion(5, "n <= mx(mx-1)+1 and >= ceil(6n/13) ordinary points", [] {
        Outcome o;
        std::size_t checked = 0;
        each_enumerated(5, [&](const WiringDiagram& d) {
            if (d.event_count() == 0 || is_trivial(d)) return;
            ++checked;
            const int n = d.wire_count();
            const int m = mx(d);
            o.require(n <= m * (m - 1) + 1, "observation fails on " + to_inline(d));
            o.require(static_cast<int>(ordinary_points(d).size()) >= (6 * n + 12) / 13,
                      "too few ordinary points on " + to_inline(d));
        });
        if (o.pass) o.detail = std::to_string(checked) + " non-trivial diagrams";
        return o;
    });

    criterion(6, "twisted_bundles(4,14): 59 ordinary points, pl coloring with <= 4 colors", [] {
        Outcome o;
        const auto d = construct_twisted_bundles(4, 14);
        o.require(ordinary_points(d).size() == 59, "ordinary count " + std::to_string(ordinary_points(d).size()));
        const auto r = sigma_bounds_check(4, 14);
        o.require(r.turan == 73, "turan number");
        o.require(r.witness.has_value() && r.witness->color_count() <= 4, "no witness within 4 colors");
        if (r.witness) o.require(verify_coloring(d, *r.witness, Mode::pl()).empty(), "witness does not verify");
        return o;
    });

    criterion(7, "gap construction: chi(G_o)=3, chi_pl=6 for r=3; 2 and 4 for r=2", [] {
        Outcome o;
        const auto g3 = construct_gap(3);
        o.require(chi_graph(ordinary_graph(g3), 9) == 3, "chi(G_o) for r=3");
        o.require(min_colors(g3, Mode::pl()).minimum == 6, "chi_pl for r=3");
        const auto g2 = construct_gap(2);
        o.require(chi_graph(ordinary_graph(g2), 6) == 2, "chi(G_o) for r=2");
        o.require(min_colors(g2, Mode::pl()).minimum == 4, "chi_pl for r=2");
        o.require(oracle::brute_pl_min(g2, 6) == 4, "brute chi_pl for r=2");
        return o;
    });

    criterion(8, "reduction: n + C(n,2) - m + 1 wires, chi_pl in {chi+1, chi+2}", [] {
        Outcome o;
        const std::vector<std::pair<Graph, int>> cases{{Graph::complete(2), 2}, {Graph::path(3), 2}, {Graph::complete(3), 3}};
        for (const auto& [g, chi] : cases) {
            const auto d = construct_efl_reduction(g);
            const int n = g.vertex_count;
            const auto m = static_cast<int>(g.edges.size());
            o.require(d.wire_count() == n + n * (n - 1) / 2 - m + 1, "wire count");
            o.require(chi_graph(g, n) == chi, "chi(G)");
            const auto r = min_colors(d, Mode::pl());
            o.require(r.minimum && (*r.minimum == chi + 1 || *r.minimum == chi + 2), "chi_pl out of range");
            o.require(r.minimum == oracle::brute_pl_min(d, d.wire_count()), "brute chi_pl disagrees");
        }
        return o;
    });

    criterion(9, "resampling and degree>=4 colorings valid within budget", [] {
        Outcome o;
        std::uint64_t seed = 1;
        for (int n = 6; n <= 9; ++n) {
            const double budget = std::ceil(std::cbrt(4.0 * std::sqrt(n) * n / 3.0)) + 2 * std::ceil(std::sqrt(n));
            for (int i = 0; i < 50; ++i) {
                const auto d = random_non_simple(n, seed);
                for (auto [l, r] : {std::pair{3, 0}, {3, n - 3}, {4, 1}}) {
                    const auto c = lll_coloring(d, l, r, {std::nullopt, seed, std::nullopt});
                    auto v = verify_coloring(d, c, Mode::pl_degree_at_least(l));
                    std::erase_if(v, [&](const Violation& x) { return d.event(x.first).width > l + r; });
                    o.require(v.empty(), "lll violation on " + to_inline(d));
                    o.require(c.color_count() <= lll_color_budget(n, l, r), "lll over budget");
                }
                const auto res = degree_ge4_coloring(d, seed);
                o.require(verify_coloring(d, res.coloring, Mode::pl_degree_at_least(4)).empty(),
                          "deg4 violation on " + to_inline(d));
                o.require(res.coloring.color_count() <= budget, "deg4 over budget on " + to_inline(d));
            }
        }
        return o;
    });

    criterion(10, "simultaneous search: witness needing >= 6 colors at n=5, none at n=3", [] {
        Outcome o;
        o.require(search_simultaneous_counterexample(3, 6).witnesses.empty(), "witness at n=3");
        const auto r = search_simultaneous_counterexample(5, 6);
        o.require(!r.witnesses.empty(), "no witness at n=5");
        for (const auto& w : r.witnesses) {
            o.require(!w.minimum || *w.minimum >= 6, "witness below 6");
            if (w.minimum) o.require(verify_coloring(w.diagram, *w.certificate, Mode::simultaneous()).empty(), "bad certificate");
        }
        // Confirm the first witness independently.
        if (!r.witnesses.empty()) {
            const auto& d = r.witnesses.front().diagram;
            auto conflicts = oracle::cell_conflicts(d);
            const auto line = oracle::line_conflicts(d);
            conflicts.insert(conflicts.end(), line.begin(), line.end());
            o.require(!oracle::colorable(d.event_count(), conflicts, 5), "brute force colors the witness with 5");
        }
        if (o.pass) o.detail = std::to_string(r.witnesses.size()) + " of " + std::to_string(r.examined) + " diagrams";
        return o;
    });

    criterion(11, "simple cell count 1 + n + C(n,2), 2k cells at degree-k crossings", [] {
        Outcome o;
        each_enumerated(5, [&](const WiringDiagram& d) {
            const auto cx = build_cells(d);
            const int n = d.wire_count();
            if (is_simple(d))
                o.require(cx.cells.size() == static_cast<std::size_t>(1 + n + n * (n - 1) / 2), "count on " + to_inline(d));
            for (std::size_t i = 0; i < d.event_count(); ++i)
                o.require(cx.incidence[i].size() == static_cast<std::size_t>(2 * d.event(i).width),
                          "incidence on " + to_inline(d));
        });
        return o;
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
