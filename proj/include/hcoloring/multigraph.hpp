#pragma once

// Loopless multigraph with stable integer identities: vertices 0..n-1 and
// edges 0..m-1 in construction order. Parallel edges are distinct records;
// loops are rejected. Immutable after construction.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hcoloring {

struct Edge {
    int a;
    int b;
};

class Multigraph {
public:
    Multigraph() = default;

    Multigraph(int vertex_count, const std::vector<std::pair<int, int>>& endpoints)
        : n_(vertex_count), incident_(vertex_count) {
        if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
        edges_.reserve(endpoints.size());
        for (const auto& [a, b] : endpoints) {
            if (a < 0 || a >= n_ || b < 0 || b >= n_)
                throw std::invalid_argument("edge endpoint out of range: " + std::to_string(a) +
                                            " " + std::to_string(b));
            if (a == b)
                throw std::invalid_argument("loops are not supported (vertex " +
                                            std::to_string(a) + ")");
            int id = static_cast<int>(edges_.size());
            edges_.push_back({a, b});
            incident_[a].push_back(id);
            incident_[b].push_back(id);
        }
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }

    // The set of edge ids incident with v, ascending.
    const std::vector<int>& incident_edges(int v) const { return incident_[v]; }
    int degree(int v) const { return static_cast<int>(incident_[v].size()); }

    int other_endpoint(int e, int v) const {
        return edges_[e].a == v ? edges_[e].b : edges_[e].a;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
};

inline bool is_simple(const Multigraph& g) {
    std::vector<std::pair<int, int>> seen;
    seen.reserve(g.edge_count());
    for (const auto& e : g.edges())
        seen.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

inline std::vector<int> sorted_degrees(const Multigraph& g) {
    std::vector<int> d(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

inline bool is_k_regular(const Multigraph& g, int k) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != k) return false;
    return true;
}

inline int max_degree(const Multigraph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

// Endpoint pairs normalized to (min,max) and sorted; equal for two graphs
// exactly when they coincide as labeled multigraphs.
inline std::vector<std::pair<int, int>> sorted_endpoint_pairs(const Multigraph& g) {
    std::vector<std::pair<int, int>> p;
    p.reserve(g.edge_count());
    for (const auto& e : g.edges())
        p.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
    std::sort(p.begin(), p.end());
    return p;
}

}  // namespace hcoloring
