#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "powergraph/bitset.hpp"
#include "powergraph/errors.hpp"
#include "powergraph/group.hpp"
#include "powergraph/subgroups.hpp"

namespace powergraph {

// Group element a vertex stands for, carried through complement and star so
// exports can show original ids and orders.
struct VertexLabel {
    ElementId element;
    int order;
    friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

// Undirected simple graph over vertices [0, n), adjacency kept as bitset rows.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : rows_(static_cast<std::size_t>(n), Bitset(n)) {}

    int vertex_count() const { return static_cast<int>(rows_.size()); }

    void add_edge(int u, int v) {
        check(u);
        check(v);
        if (u == v) throw Error("add_edge: loops are not allowed");
        rows_[u].set(v);
        rows_[v].set(u);
    }

    bool adjacent(int u, int v) const {
        check(u);
        check(v);
        return rows_[u].test(v);
    }

    int degree(int v) const {
        check(v);
        return rows_[v].count();
    }

    long long edge_count() const {
        long long twice = 0;
        for (const auto& r : rows_) twice += r.count();
        return twice / 2;
    }

    const Bitset& row(int v) const {
        check(v);
        return rows_[v];
    }

    std::vector<VertexLabel> labels;   // optional, empty when vertices are anonymous

private:
    void check(int v) const {
        if (v < 0 || v >= vertex_count()) throw Error("vertex index out of range");
    }

    std::vector<Bitset> rows_;
};

// Power graph: g ~ h when one is a power of the other, i.e. g is in <h> or
// h is in <g>.
inline SimpleGraph power_graph(const GroupTable& g) {
    const int n = g.order();
    std::vector<Bitset> gen(static_cast<std::size_t>(n));
    for (ElementId x = 0; x < n; ++x) gen[x] = cyclic_subgroup(g, x).members;
    SimpleGraph out(n);
    for (ElementId u = 0; u < n; ++u)
        for (ElementId v = u + 1; v < n; ++v)
            if (gen[u].test(v) || gen[v].test(u)) out.add_edge(u, v);
    out.labels.resize(static_cast<std::size_t>(n));
    for (ElementId x = 0; x < n; ++x) out.labels[x] = {x, g.order_of(x)};
    return out;
}

// Enhanced power graph: g ~ h when <g, h> is cyclic, i.e. some maximal
// cyclic subgroup contains both.
inline SimpleGraph enhanced_power_graph(const GroupTable& g, const MaximalCyclicFamily& fam) {
    const int n = g.order();
    if (static_cast<int>(fam.membership_mask.size()) != n)
        throw Error("enhanced_power_graph: family does not match the group");
    SimpleGraph out(n);
    for (ElementId u = 0; u < n; ++u)
        for (ElementId v = u + 1; v < n; ++v)
            if (fam.mask(u).intersects(fam.mask(v))) out.add_edge(u, v);
    out.labels.resize(static_cast<std::size_t>(n));
    for (ElementId x = 0; x < n; ++x) out.labels[x] = {x, g.order_of(x)};
    return out;
}

inline SimpleGraph enhanced_power_graph(const GroupTable& g) {
    return enhanced_power_graph(g, maximal_cyclic_subgroups(g));
}

inline SimpleGraph complement(const SimpleGraph& g) {
    const int n = g.vertex_count();
    SimpleGraph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    out.labels = g.labels;
    return out;
}

// Star of a graph: the subgraph induced on vertices of positive degree.
// kept and isolated are original vertex ids, ascending; graph is the induced
// subgraph with vertices renumbered to 0..kept.size()-1 in kept order.
struct StarDecomposition {
    std::vector<int> kept;
    std::vector<int> isolated;
    SimpleGraph graph;

    // local index of an original vertex, or -1 if it was isolated
    int index_of(int original) const {
        auto it = std::lower_bound(kept.begin(), kept.end(), original);
        if (it == kept.end() || *it != original) return -1;
        return static_cast<int>(it - kept.begin());
    }
};

inline StarDecomposition star(const SimpleGraph& g) {
    const int n = g.vertex_count();
    StarDecomposition out;
    std::vector<int> local(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) > 0) {
            local[v] = static_cast<int>(out.kept.size());
            out.kept.push_back(v);
        } else {
            out.isolated.push_back(v);
        }
    }
    out.graph = SimpleGraph(static_cast<int>(out.kept.size()));
    for (int u : out.kept)
        g.row(u).for_each([&](int v) {
            if (u < v) out.graph.add_edge(local[u], local[v]);
        });
    if (!g.labels.empty())
        for (int u : out.kept) out.graph.labels.push_back(g.labels[u]);
    return out;
}

inline std::vector<int> bfs_distances(const SimpleGraph& g, int src) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        g.row(u).for_each([&](int v) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        });
    }
    return dist;
}

// Connected components as sorted vertex lists, ordered by smallest vertex.
// Isolated vertices count as singleton components.
inline std::vector<std::vector<int>> components(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            comp.push_back(u);
            g.row(u).for_each([&](int v) {
                if (!seen[v]) {
                    seen[v] = 1;
                    q.push(v);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

inline std::optional<int> distance(const SimpleGraph& g, int u, int v) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        throw Error("distance: vertex index out of range");
    const int d = bfs_distances(g, u)[v];
    return d < 0 ? std::nullopt : std::optional<int>(d);
}

// Eccentricity maximum over all vertices. Throws DisconnectedError naming an
// unreachable pair when the graph is not connected, and Error when empty.
inline int diameter(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw Error("diameter: graph has no vertices");
    int best = 0;
    for (int s = 0; s < n; ++s) {
        const std::vector<int> dist = bfs_distances(g, s);
        for (int v = 0; v < n; ++v) {
            if (dist[v] < 0) throw DisconnectedError(s, v);
            best = std::max(best, dist[v]);
        }
    }
    return best;
}

enum class GraphFormat { Dot, EdgeList };

// Dot output lists every vertex (with element/order labels when present)
// then the edges; edge list output is one "u v" pair per line with u < v,
// ascending. Both are deterministic for a given graph.
inline std::string export_graph(const SimpleGraph& g, GraphFormat format) {
    std::ostringstream out;
    const int n = g.vertex_count();
    if (format == GraphFormat::EdgeList) {
        for (int u = 0; u < n; ++u)
            g.row(u).for_each([&](int v) {
                if (u < v) out << u << ' ' << v << '\n';
            });
        return out.str();
    }
    out << "graph G {\n";
    for (int v = 0; v < n; ++v) {
        if (!g.labels.empty())
            out << "  " << v << " [label=\"" << g.labels[v].element << " (o="
                << g.labels[v].order << ")\"];\n";
        else
            out << "  " << v << ";\n";
    }
    for (int u = 0; u < n; ++u)
        g.row(u).for_each([&](int v) {
            if (u < v) out << "  " << u << " -- " << v << ";\n";
        });
    out << "}\n";
    return out.str();
}

} // namespace powergraph
