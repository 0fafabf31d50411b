#pragma once

// Small F-hypergraphs shared by the prelim, pictures and pipeline tests.

#include <string>
#include <vector>

#include "steiner_ramsey/fixtures.hpp"
#include "steiner_ramsey/partite.hpp"

namespace fh {

using namespace steiner_ramsey;
namespace fx = steiner_ramsey::fixtures;

struct Named {
    std::string name;
    FHypergraph x;
};

inline FHypergraph make(const SteinerSystem& f, std::size_t n, std::vector<Edge> edges,
                        const std::vector<VertexList>& classes, std::vector<CrossingCopy> q) {
    auto base = validate_steiner(f.r(), f.t(), n, std::move(edges));
    return validate_fhypergraph(f, make_partite(std::move(base), classes), std::move(q));
}

// F = K2, X = one edge.
inline FHypergraph edge_single() { return make(fx::edge(2, 2), 2, {{0, 1}}, {{0}, {1}}, {{0, 1}}); }

// F = K2, X = two disjoint edges, both distinguished.
inline FHypergraph edge_pair() {
    return make(fx::edge(2, 2), 4, {{0, 2}, {1, 3}}, {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}});
}

inline FHypergraph edge_pair_unmarked() {
    return make(fx::edge(2, 2), 4, {{0, 2}, {1, 3}}, {{0, 1}, {2, 3}}, {});
}

// F = K2, X = a cherry with centre 0, both edges distinguished.
inline FHypergraph cherry() {
    return make(fx::edge(2, 2), 3, {{0, 1}, {0, 2}}, {{0}, {1, 2}}, {{0, 1}, {0, 2}});
}

// F = a 3-edge (t = 2), X = two disjoint triples.
inline FHypergraph triple_pair() {
    return make(fx::edge(3, 2), 6, {{0, 1, 2}, {3, 4, 5}}, {{0, 3}, {1, 4}, {2, 5}},
                {{0, 1, 2}, {3, 4, 5}});
}

// F = a 3-edge, X = two triples through vertex 0.
inline FHypergraph triple_bowtie() {
    return make(fx::edge(3, 2), 5, {{0, 1, 2}, {0, 3, 4}}, {{0}, {1, 3}, {2, 4}},
                {{0, 1, 2}, {0, 3, 4}});
}

// F = P3, X = P3 itself.
inline FHypergraph path_single() { return make(fx::p3(), 3, {{0, 1}, {1, 2}}, {{0}, {1}, {2}}, {{0, 1, 2}}); }

// F = one vertex, X = two vertices, both distinguished.
inline FHypergraph vertex_pair() { return make(fx::vertex(), 2, {}, {{0, 1}}, {{0}, {1}}); }

// F = two isolated vertices (r = 3, t = 2).
inline FHypergraph discrete_pair() {
    return make(fx::discrete(2, 3, 2), 4, {}, {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}});
}

inline std::vector<Named> small() {
    return {{"edge_single", edge_single()},   {"edge_pair", edge_pair()},
            {"edge_pair_unmarked", edge_pair_unmarked()},
            {"cherry", cherry()},             {"triple_pair", triple_pair()},
            {"triple_bowtie", triple_bowtie()}, {"path_single", path_single()},
            {"vertex_pair", vertex_pair()},   {"discrete_pair", discrete_pair()}};
}

} // namespace fh
