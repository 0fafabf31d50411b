#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hypergraph.hpp"

// Named small systems shared by the tests, the CLI and the pipelines.
namespace steiner_ramsey::fixtures {

/// Two 3-edges meeting in vertex 2.
inline SteinerSystem h5() { return validate_steiner(3, 2, 5, {{0, 1, 2}, {2, 3, 4}}); }

/// H5 restricted to {0,1,2}.
inline SteinerSystem g3() { return validate_steiner(3, 2, 3, {{0, 1, 2}}); }

/// H5 restricted to {0,1,2,3}.
inline SteinerSystem g4() { return validate_steiner(3, 2, 4, {{0, 1, 2}}); }

inline SteinerSystem fano() {
    return validate_steiner(3, 2, 7,
                            {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6},
                             {2, 4, 5}});
}

/// A single r-edge viewed as a Steiner (r,t)-system.
inline SteinerSystem edge(std::size_t r, std::size_t t) {
    Edge e;
    for (std::size_t i = 0; i < r; ++i) e.push_back(static_cast<Vertex>(i));
    return validate_steiner(r, t, r, {e});
}

/// Path 0-1-2 as a graph (r = t = 2).
inline SteinerSystem p3() { return validate_steiner(2, 2, 3, {{0, 1}, {1, 2}}); }

/// Complete graph K_n (r = t = 2).
inline SteinerSystem complete_graph(std::size_t n) {
    std::vector<Edge> es;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) es.push_back({a, b});
    return validate_steiner(2, 2, n, std::move(es));
}

inline SteinerSystem discrete(std::size_t n, std::size_t r = 2, std::size_t t = 2) {
    return validate_steiner(r, t, n, {});
}

inline SteinerSystem vertex(std::size_t r = 2, std::size_t t = 2) { return discrete(1, r, t); }

inline std::vector<std::string> names() {
    return {"H5", "G3", "G4", "FANO", "EDGE", "P3", "K", "DISCRETE", "VERTEX"};
}

/// Looks up a fixture by name. `n` sizes K and DISCRETE; `r`, `t` shape EDGE,
/// DISCRETE and VERTEX.
inline SteinerSystem by_name(std::string_view name, std::size_t n = 4, std::size_t r = 2,
                             std::size_t t = 2) {
    if (name == "H5") return h5();
    if (name == "G3") return g3();
    if (name == "G4") return g4();
    if (name == "FANO") return fano();
    if (name == "EDGE") return edge(r, t);
    if (name == "P3") return p3();
    if (name == "K") return complete_graph(n);
    if (name == "DISCRETE") return discrete(n, r, t);
    if (name == "VERTEX") return vertex(r, t);
    throw FormatError("unknown fixture '" + std::string(name) + "'");
}

} // namespace steiner_ramsey::fixtures
