#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include <hamcirc/error.hpp>

namespace hamcirc {

using vertex_id = int;

/// Undirected edge, stored with lo <= hi.
using edge = std::pair<vertex_id, vertex_id>;

inline edge make_edge(vertex_id a, vertex_id b) {
    return a < b ? edge{a, b} : edge{b, a};
}

/// Immutable finite simple undirected graph on arbitrary non-negative ids.
/// Adjacency is kept symmetric, irreflexive and sorted by construction.
class finite_graph {
public:
    finite_graph() = default;

    static finite_graph from_edges(std::vector<vertex_id> vertices,
                                   const std::vector<edge>& edges) {
        finite_graph g;
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        for (vertex_id v : vertices)
            expect(v >= 0, errc::input, "vertex ids must be non-negative");
        g.verts_ = std::move(vertices);
        g.adj_.assign(g.verts_.size(), {});
        for (const auto& [a, b] : edges) {
            expect(a != b, errc::input, "self-loop rejected");
            int ia = g.index_of(a), ib = g.index_of(b);
            g.adj_[ia].push_back(b);
            g.adj_[ib].push_back(a);
        }
        for (auto& nb : g.adj_) {
            std::sort(nb.begin(), nb.end());
            expect(std::adjacent_find(nb.begin(), nb.end()) == nb.end(), errc::input,
                   "duplicate edge rejected");
        }
        return g;
    }

    int n() const { return static_cast<int>(verts_.size()); }
    const std::vector<vertex_id>& vertices() const { return verts_; }

    bool has_vertex(vertex_id v) const {
        auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
        return it != verts_.end() && *it == v;
    }

    const std::vector<vertex_id>& neighbors(vertex_id v) const {
        return adj_[index_of(v)];
    }

    int degree(vertex_id v) const { return static_cast<int>(neighbors(v).size()); }

    int max_degree() const {
        int d = 0;
        for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
        return d;
    }

    bool adjacent(vertex_id a, vertex_id b) const {
        if (!has_vertex(a) || !has_vertex(b)) return false;
        const auto& nb = adj_[index_of(a)];
        return std::binary_search(nb.begin(), nb.end(), b);
    }

    std::vector<edge> edges() const {
        std::vector<edge> out;
        for (size_t i = 0; i < verts_.size(); ++i)
            for (vertex_id w : adj_[i])
                if (verts_[i] < w) out.emplace_back(verts_[i], w);
        std::sort(out.begin(), out.end());
        return out;
    }

    int edge_count() const {
        size_t s = 0;
        for (const auto& nb : adj_) s += nb.size();
        return static_cast<int>(s / 2);
    }

    bool operator==(const finite_graph& o) const {
        return verts_ == o.verts_ && adj_ == o.adj_;
    }

private:
    int index_of(vertex_id v) const {
        auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
        expect(it != verts_.end() && *it == v, errc::input,
               "unknown vertex id " + std::to_string(v));
        return static_cast<int>(it - verts_.begin());
    }

    std::vector<vertex_id> verts_;          // sorted
    std::vector<std::vector<vertex_id>> adj_; // parallel to verts_, sorted
};

/// Edge cut delta(side) together with the side that induced it.
struct cut {
    std::vector<vertex_id> side;
    std::vector<edge> edges;
};

struct separator {
    std::vector<vertex_id> vertices; // sorted
    bool minimal = false;
};

inline finite_graph induced_subgraph(const finite_graph& g,
                                     const std::vector<vertex_id>& xs) {
    std::vector<vertex_id> vs(xs);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (vertex_id v : vs)
        expect(g.has_vertex(v), errc::input, "unknown vertex id " + std::to_string(v));
    std::vector<edge> es;
    for (vertex_id v : vs)
        for (vertex_id w : g.neighbors(v))
            if (v < w && std::binary_search(vs.begin(), vs.end(), w)) es.emplace_back(v, w);
    return finite_graph::from_edges(vs, es);
}

inline finite_graph remove_vertices(const finite_graph& g,
                                    const std::vector<vertex_id>& drop) {
    std::set<vertex_id> d(drop.begin(), drop.end());
    std::vector<vertex_id> keep;
    for (vertex_id v : g.vertices())
        if (!d.count(v)) keep.push_back(v);
    return induced_subgraph(g, keep);
}

/// Connected components, ordered by smallest contained id; each sorted.
inline std::vector<std::vector<vertex_id>> components(const finite_graph& g) {
    std::vector<std::vector<vertex_id>> out;
    std::set<vertex_id> seen;
    for (vertex_id s : g.vertices()) {
        if (seen.count(s)) continue;
        std::vector<vertex_id> comp{s};
        seen.insert(s);
        for (size_t i = 0; i < comp.size(); ++i)
            for (vertex_id w : g.neighbors(comp[i]))
                if (seen.insert(w).second) comp.push_back(w);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

inline bool is_connected(const finite_graph& g) {
    return g.n() == 0 || static_cast<int>(components(g).size()) == 1;
}

namespace detail {

/// Max number of internally vertex-disjoint s-t paths, capped at `cap`.
/// Unit-capacity vertex-split flow with BFS augmentation.
inline int disjoint_path_count(const finite_graph& g, vertex_id s, vertex_id t, int cap) {
    const auto& vs = g.vertices();
    int n = g.n();
    std::map<vertex_id, int> idx;
    for (int i = 0; i < n; ++i) idx[vs[i]] = i;
    // nodes: 2*i = in, 2*i+1 = out
    struct arc { int to, rev, cap; };
    std::vector<std::vector<arc>> net(2 * n);
    auto add = [&](int a, int b, int c) {
        net[a].push_back({b, static_cast<int>(net[b].size()), c});
        net[b].push_back({a, static_cast<int>(net[a].size()) - 1, 0});
    };
    for (int i = 0; i < n; ++i) {
        bool endpoint = vs[i] == s || vs[i] == t;
        add(2 * i, 2 * i + 1, endpoint ? cap + 1 : 1);
    }
    for (int i = 0; i < n; ++i)
        for (vertex_id w : g.neighbors(vs[i])) {
            int j = idx[w];
            add(2 * i + 1, 2 * j, cap + 1);
        }
    int src = 2 * idx[s] + 1, dst = 2 * idx[t];
    int flow = 0;
    while (flow < cap) {
        std::vector<std::pair<int, int>> par(2 * n, {-1, -1});
        std::queue<int> q;
        q.push(src);
        par[src] = {src, -1};
        while (!q.empty() && par[dst].first < 0) {
            int u = q.front();
            q.pop();
            for (size_t ai = 0; ai < net[u].size(); ++ai) {
                const arc& a = net[u][ai];
                if (a.cap <= 0 || par[a.to].first >= 0) continue;
                par[a.to] = {u, static_cast<int>(ai)};
                q.push(a.to);
            }
        }
        if (par[dst].first < 0) break;
        for (int u = dst; u != src;) {
            auto [p, ai] = par[u];
            net[p][ai].cap -= 1;
            net[u][net[p][ai].rev].cap += 1;
            u = p;
        }
        ++flow;
    }
    return flow;
}

} // namespace detail

/// True iff |V| > k and no vertex set of size < k disconnects g.
inline bool is_k_connected(const finite_graph& g, int k) {
    expect(k >= 1, errc::input, "k must be positive");
    if (g.n() <= k) return false;
    if (k == 1) return is_connected(g);
    if (!is_connected(g)) return false;
    for (vertex_id v : g.vertices())
        if (g.degree(v) < k) return false;
    const auto& vs = g.vertices();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) {
            if (g.adjacent(vs[i], vs[j])) continue;
            if (detail::disjoint_path_count(g, vs[i], vs[j], k) < k) return false;
        }
    return true;
}

namespace detail {

inline std::vector<vertex_id> neighborhood_of_set(const finite_graph& g,
                                                  const std::vector<vertex_id>& comp) {
    std::set<vertex_id> in(comp.begin(), comp.end()), out;
    for (vertex_id v : comp)
        for (vertex_id w : g.neighbors(v))
            if (!in.count(w)) out.insert(w);
    return {out.begin(), out.end()};
}

inline bool separates(const finite_graph& g, const std::vector<vertex_id>& s) {
    finite_graph h = remove_vertices(g, s);
    if (h.n() == 0) return false;
    return !is_connected(h);
}

} // namespace detail

/// All subset-minimal vertex separators of size <= size_cap, sorted
/// lexicographically. Enumeration: Berry-Bordat-Cogis generation of minimal
/// a-b separators, then a literal single-vertex-removal minimality re-check.
inline std::vector<separator> minimal_separators(const finite_graph& g, int size_cap) {
    expect(size_cap >= 1, errc::input, "size_cap must be positive");
    expect(is_connected(g), errc::input, "minimal_separators requires a connected graph");
    std::set<std::vector<vertex_id>> seen;
    std::vector<std::vector<vertex_id>> queue;
    auto push = [&](const std::vector<vertex_id>& s) {
        if (!s.empty() && seen.insert(s).second) queue.push_back(s);
    };
    for (vertex_id v : g.vertices()) {
        std::vector<vertex_id> closed = g.neighbors(v);
        closed.push_back(v);
        for (const auto& comp : components(remove_vertices(g, closed)))
            push(detail::neighborhood_of_set(g, comp));
    }
    while (!queue.empty()) {
        expect(seen.size() < 200000, errc::search_exhausted,
               "separator enumeration exceeded safety bound");
        std::vector<vertex_id> s = queue.back();
        queue.pop_back();
        for (vertex_id x : s) {
            std::vector<vertex_id> closed = g.neighbors(x);
            closed.push_back(x);
            closed.insert(closed.end(), s.begin(), s.end());
            for (const auto& comp : components(remove_vertices(g, closed)))
                push(detail::neighborhood_of_set(g, comp));
        }
    }
    std::vector<separator> out;
    for (const auto& s : seen) {
        if (static_cast<int>(s.size()) > size_cap) continue;
        if (!detail::separates(g, s)) continue;
        bool minimal = true;
        for (size_t i = 0; i < s.size() && minimal; ++i) {
            std::vector<vertex_id> sub(s);
            sub.erase(sub.begin() + static_cast<long>(i));
            if (detail::separates(g, sub)) minimal = false;
        }
        if (minimal) out.push_back({s, true});
    }
    std::sort(out.begin(), out.end(),
              [](const separator& a, const separator& b) { return a.vertices < b.vertices; });
    return out;
}

/// Classes of exact distance from root: index i holds the vertices at
/// distance i; covers the reachable part only.
inline std::vector<std::vector<vertex_id>> distance_classes(const finite_graph& g,
                                                            vertex_id root) {
    expect(g.has_vertex(root), errc::input, "unknown root " + std::to_string(root));
    std::map<vertex_id, int> dist{{root, 0}};
    std::vector<vertex_id> frontier{root};
    std::vector<std::vector<vertex_id>> classes{{root}};
    while (!frontier.empty()) {
        std::vector<vertex_id> next;
        for (vertex_id u : frontier)
            for (vertex_id w : g.neighbors(u))
                if (dist.emplace(w, static_cast<int>(classes.size())).second)
                    next.push_back(w);
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        classes.push_back(next);
        frontier = std::move(next);
    }
    return classes;
}

inline cut cut_edges(const finite_graph& g, const std::vector<vertex_id>& side) {
    std::vector<vertex_id> s(side);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (vertex_id v : s)
        expect(g.has_vertex(v), errc::input, "unknown vertex id " + std::to_string(v));
    std::vector<edge> es;
    for (vertex_id v : s)
        for (vertex_id w : g.neighbors(v))
            if (!std::binary_search(s.begin(), s.end(), w)) es.push_back(make_edge(v, w));
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return {s, es};
}

/// Vacuously true for |xs| <= 1.
inline bool is_clique(const finite_graph& g, const std::vector<vertex_id>& xs) {
    for (vertex_id v : xs)
        expect(g.has_vertex(v), errc::input, "unknown vertex id " + std::to_string(v));
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j)
            if (xs[i] != xs[j] && !g.adjacent(xs[i], xs[j])) return false;
    return true;
}

} // namespace hamcirc
