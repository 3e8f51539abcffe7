#pragma once

#include <array>
#include <optional>
#include <string>

#include <hamcirc/graph.hpp>

namespace hamcirc {

enum class pattern { claw, net, bull };

inline const char* pattern_name(pattern p) {
    switch (p) {
    case pattern::claw: return "claw";
    case pattern::net: return "net";
    case pattern::bull: return "bull";
    }
    return "?";
}

inline std::optional<pattern> pattern_from_name(const std::string& s) {
    if (s == "claw") return pattern::claw;
    if (s == "net") return pattern::net;
    if (s == "bull") return pattern::bull;
    return std::nullopt;
}

/// Canonical role orders:
///   claw: center, leaf, leaf, leaf (leaves ascending)
///   net:  a1, a2, z (triangle, ascending), pendant of a1, of a2, of z
///   bull: a1, a2 (a1 < a2), z, horn of a1, horn of a2
struct pattern_match {
    pattern pat;
    std::vector<vertex_id> vertex_map;
};

namespace detail {

inline int pattern_size(pattern p) { return p == pattern::claw ? 4 : p == pattern::net ? 6 : 5; }

/// Edge set of the pattern in role order; every other pair is a required non-edge.
inline const std::vector<std::pair<int, int>>& pattern_edges(pattern p) {
    static const std::vector<std::pair<int, int>> claw{{0, 1}, {0, 2}, {0, 3}};
    static const std::vector<std::pair<int, int>> net{{0, 1}, {0, 2}, {1, 2},
                                                      {0, 3}, {1, 4}, {2, 5}};
    static const std::vector<std::pair<int, int>> bull{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}};
    switch (p) {
    case pattern::claw: return claw;
    case pattern::net: return net;
    default: return bull;
    }
}

} // namespace detail

/// Re-derives the induced subgraph on vertex_map and compares edge-by-edge
/// against the pattern template, non-edges included.
inline bool is_induced_match(const finite_graph& g, pattern p,
                             const std::vector<vertex_id>& map) {
    int k = detail::pattern_size(p);
    if (static_cast<int>(map.size()) != k) return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (map[i] == map[j]) return false;
    for (vertex_id v : map)
        if (!g.has_vertex(v)) return false;
    const auto& es = detail::pattern_edges(p);
    auto required = [&](int i, int j) {
        for (const auto& [a, b] : es)
            if ((a == i && b == j) || (a == j && b == i)) return true;
        return false;
    };
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(map[i], map[j]) != required(i, j)) return false;
    return true;
}

namespace detail {

template <typename Fn>
inline bool scan_claws(const finite_graph& g, Fn&& emit) {
    for (vertex_id c : g.vertices()) {
        const auto& nb = g.neighbors(c);
        size_t d = nb.size();
        if (d < 3) continue;
        for (size_t i = 0; i < d; ++i)
            for (size_t j = i + 1; j < d; ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (size_t l = j + 1; l < d; ++l) {
                    if (g.adjacent(nb[i], nb[l]) || g.adjacent(nb[j], nb[l])) continue;
                    if (emit({c, nb[i], nb[j], nb[l]})) return true;
                }
            }
    }
    return false;
}

/// Emits nets in canonical order (triangle ascending, then pendants).
template <typename Fn>
inline bool scan_nets(const finite_graph& g, Fn&& emit) {
    for (vertex_id a1 : g.vertices()) {
        for (vertex_id a2 : g.neighbors(a1)) {
            if (a2 <= a1) continue;
            for (vertex_id z : g.neighbors(a1)) {
                if (z <= a2 || !g.adjacent(a2, z)) continue;
                for (vertex_id b1 : g.neighbors(a1)) {
                    if (b1 == a2 || b1 == z) continue;
                    if (g.adjacent(b1, a2) || g.adjacent(b1, z)) continue;
                    for (vertex_id b2 : g.neighbors(a2)) {
                        if (b2 == a1 || b2 == z || b2 == b1) continue;
                        if (g.adjacent(b2, a1) || g.adjacent(b2, z) || g.adjacent(b2, b1))
                            continue;
                        for (vertex_id h : g.neighbors(z)) {
                            if (h == a1 || h == a2 || h == b1 || h == b2) continue;
                            if (g.adjacent(h, a1) || g.adjacent(h, a2) || g.adjacent(h, b1) ||
                                g.adjacent(h, b2))
                                continue;
                            if (emit({a1, a2, z, b1, b2, h})) return true;
                        }
                    }
                }
            }
        }
    }
    return false;
}

/// Emits bulls ordered by (a1, a2, z, b1, b2); z ranges over the whole
/// triangle since only the horned vertices are interchangeable.
template <typename Fn>
inline bool scan_bulls(const finite_graph& g, Fn&& emit) {
    for (vertex_id a1 : g.vertices()) {
        for (vertex_id a2 : g.neighbors(a1)) {
            if (a2 <= a1) continue;
            for (vertex_id z : g.neighbors(a1)) {
                if (z == a2 || !g.adjacent(a2, z)) continue;
                for (vertex_id b1 : g.neighbors(a1)) {
                    if (b1 == a2 || b1 == z) continue;
                    if (g.adjacent(b1, a2) || g.adjacent(b1, z)) continue;
                    for (vertex_id b2 : g.neighbors(a2)) {
                        if (b2 == a1 || b2 == z || b2 == b1) continue;
                        if (g.adjacent(b2, a1) || g.adjacent(b2, z) || g.adjacent(b2, b1))
                            continue;
                        if (emit({a1, a2, z, b1, b2})) return true;
                    }
                }
            }
        }
    }
    return false;
}

} // namespace detail

/// Smallest match in canonical role order, or nullopt. For claws and nets the
/// enumeration order is already lexicographic; bull maps can interleave across
/// triangles, so the minimum is taken over all of them.
inline std::optional<pattern_match> find_induced(const finite_graph& g, pattern p) {
    std::optional<std::vector<vertex_id>> best;
    auto first = [&](std::vector<vertex_id> m) {
        best = std::move(m);
        return true;
    };
    auto min_of_all = [&](std::vector<vertex_id> m) {
        if (!best || m < *best) best = std::move(m);
        return false;
    };
    switch (p) {
    case pattern::claw: detail::scan_claws(g, first); break;
    case pattern::net: detail::scan_nets(g, first); break;
    case pattern::bull: detail::scan_bulls(g, min_of_all); break;
    }
    if (!best) return std::nullopt;
    return pattern_match{p, *best};
}

inline bool is_claw_free(const finite_graph& g) { return !find_induced(g, pattern::claw); }
inline bool is_net_free(const finite_graph& g) { return !find_induced(g, pattern::net); }
inline bool is_bull_free(const finite_graph& g) { return !find_induced(g, pattern::bull); }

struct bull_condition_result {
    bool holds = true;
    std::optional<pattern_match> violating_bull; // first bull whose horns lack a common
                                                 // neighbour outside the bull
};

/// The relaxed bull condition of the finite Hamiltonicity theorem: every
/// induced bull's horns have a common neighbour outside the bull. Truth over a
/// window is window-relative; callers label it so.
inline bull_condition_result check_relaxed_bull_condition(const finite_graph& g) {
    bull_condition_result res;
    detail::scan_bulls(g, [&](std::vector<vertex_id> m) {
        vertex_id b1 = m[3], b2 = m[4];
        for (vertex_id c : g.neighbors(b1)) {
            if (std::find(m.begin(), m.end(), c) != m.end()) continue;
            if (g.adjacent(c, b2)) return false; // witness found, keep scanning
        }
        res.holds = false;
        res.violating_bull = pattern_match{pattern::bull, std::move(m)};
        return true;
    });
    return res;
}

} // namespace hamcirc
