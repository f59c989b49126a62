#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pseudoline {

/// Plain undirected graph on vertices 0..vertex_count-1.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    /// No self-loops, no duplicate edges, endpoints in range.
    bool is_simple() const {
        std::set<std::pair<int, int>> seen;
        for (auto [u, v] : edges) {
            if (u == v || u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) return false;
            if (!seen.insert(std::minmax(u, v)).second) return false;
        }
        return true;
    }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertex_count));
        for (auto [u, v] : edges) {
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
        return adj;
    }

    bool has_edge(int u, int v) const {
        return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
            return (e.first == u && e.second == v) || (e.first == v && e.second == u);
        });
    }

    static Graph complete(int n) {
        Graph g{n, {}};
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
        return g;
    }

    static Graph path(int n) {
        Graph g{n, {}};
        for (int u = 0; u + 1 < n; ++u) g.edges.emplace_back(u, u + 1);
        return g;
    }

    /// Complete multipartite graph with the given part sizes.
    static Graph complete_multipartite(const std::vector<int>& parts) {
        Graph g;
        std::vector<int> part_of;
        for (std::size_t p = 0; p < parts.size(); ++p)
            for (int i = 0; i < parts[p]; ++i) part_of.push_back(static_cast<int>(p));
        g.vertex_count = static_cast<int>(part_of.size());
        for (int u = 0; u < g.vertex_count; ++u)
            for (int v = u + 1; v < g.vertex_count; ++v)
                if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)])
                    g.edges.emplace_back(u, v);
        return g;
    }
};

/// Same vertex count and the same undirected edge set.
inline bool same_graph(const Graph& a, const Graph& b) {
    if (a.vertex_count != b.vertex_count) return false;
    auto normal = [](const Graph& g) {
        std::vector<std::pair<int, int>> e;
        for (auto [u, v] : g.edges) e.push_back(std::minmax(u, v));
        std::sort(e.begin(), e.end());
        return e;
    };
    return normal(a) == normal(b);
}

}  // namespace pseudoline
