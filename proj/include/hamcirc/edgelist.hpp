#pragma once

#include <istream>
#include <sstream>
#include <string>

#include <hamcirc/graph.hpp>

namespace hamcirc {

/// Edge-list text format: header `graph <n>` declaring vertices 0..n-1, then
/// one `u v` line per edge. Lines starting with `#` are comments.
inline finite_graph read_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<edge> edges;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            std::string kw;
            ls >> kw >> n;
            expect(kw == "graph" && !ls.fail() && n >= 0, errc::input,
                   "edge list must start with 'graph <n>'");
            continue;
        }
        long long u, v;
        ls >> u >> v;
        expect(!ls.fail(), errc::input, "malformed edge line: " + line);
        expect(u >= 0 && v >= 0 && u < n && v < n, errc::input,
               "edge endpoint out of range: " + line);
        expect(u != v, errc::input, "self-loop rejected: " + line);
        edge e = make_edge(static_cast<vertex_id>(u), static_cast<vertex_id>(v));
        for (const edge& f : edges)
            expect(f != e, errc::input, "duplicate edge rejected: " + line);
        edges.push_back(e);
    }
    expect(n >= 0, errc::input, "empty edge-list input");
    std::vector<vertex_id> verts(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) verts[static_cast<size_t>(i)] = i;
    return finite_graph::from_edges(verts, edges);
}

inline finite_graph read_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

inline std::string write_edge_list(const finite_graph& g) {
    const auto& vs = g.vertices();
    for (int i = 0; i < g.n(); ++i)
        expect(vs[static_cast<size_t>(i)] == i, errc::input,
               "edge-list format requires dense ids 0..n-1");
    std::ostringstream out;
    out << "graph " << g.n() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

} // namespace hamcirc
