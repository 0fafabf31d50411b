#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "hypergraph.hpp"

namespace steiner_ramsey {

// "semi" only differs from "induced" between partite systems; on plain
// systems the two coincide.
enum class CopyKind { induced, strong, semi };

inline std::string_view to_string(CopyKind k) {
    switch (k) {
    case CopyKind::induced: return "induced";
    case CopyKind::strong: return "strongly-induced";
    case CopyKind::semi: return "semi-induced";
    }
    return "?";
}

inline CopyKind parse_copy_kind(std::string_view s) {
    if (s == "induced") return CopyKind::induced;
    if (s == "strong" || s == "strongly-induced") return CopyKind::strong;
    if (s == "semi" || s == "semi-induced") return CopyKind::semi;
    throw FormatError("unknown copy kind '" + std::string(s) + "'");
}

struct CopyEmbedding {
    VertexList map;  // pattern vertex i -> host vertex map[i]
    CopyKind kind = CopyKind::induced;
    bool ordered = false;

    VertexList image() const {
        VertexList im = map;
        std::sort(im.begin(), im.end());
        return im;
    }
    friend bool operator==(const CopyEmbedding&, const CopyEmbedding&) = default;
};

namespace detail {

inline void check_map(const Hypergraph& g, const Hypergraph& h, std::span<const Vertex> map) {
    if (map.size() != g.vertex_count())
        throw RangeError("map has " + std::to_string(map.size()) + " entries for " +
                         std::to_string(g.vertex_count()) + " pattern vertices");
    std::vector<char> seen(h.vertex_count(), 0);
    for (Vertex v : map) {
        if (v >= h.vertex_count())
            throw RangeError("host vertex " + std::to_string(v) + " out of range");
        if (seen[v]) throw NonInjectiveMap("host vertex " + std::to_string(v) + " hit twice");
        seen[v] = 1;
    }
}

inline Edge map_edge(std::span<const Vertex> e, std::span<const Vertex> map) {
    Edge out;
    out.reserve(e.size());
    for (Vertex v : e) out.push_back(map[v]);
    std::sort(out.begin(), out.end());
    return out;
}

// The induced condition once the map is known injective.
inline bool induced_unchecked(const Hypergraph& g, const Hypergraph& h,
                              std::span<const Vertex> map) {
    if (g.r() != h.r()) return false;
    for (const auto& e : g.edges())
        if (!h.has_edge(map_edge(e, map))) return false;
    VertexList image(map.begin(), map.end());
    std::sort(image.begin(), image.end());
    return h.edges_within(image).size() == g.edge_count();
}

inline bool strong_tail_unchecked(const Hypergraph& h, std::span<const Vertex> sorted_image,
                                  std::size_t t) {
    for (std::size_t i : h.edges_touching(sorted_image)) {
        std::size_t meet = intersection_size<Vertex>(h.edge(i), sorted_image);
        if (meet >= t && meet < h.r()) return false;
    }
    return true;
}

} // namespace detail

/// True iff `map` embeds g into h as an induced subhypergraph.
inline bool is_induced(const Hypergraph& g, const Hypergraph& h, std::span<const Vertex> map) {
    detail::check_map(g, h, map);
    return detail::induced_unchecked(g, h, map);
}

/// Induced, and every other host edge meets the image in fewer than t vertices.
inline bool is_strongly_induced(const Hypergraph& g, const Hypergraph& h,
                                std::span<const Vertex> map, std::size_t t) {
    if (!is_induced(g, h, map)) return false;
    VertexList image(map.begin(), map.end());
    std::sort(image.begin(), image.end());
    return detail::strong_tail_unchecked(h, image, t);
}

inline bool is_induced(const SteinerSystem& g, const SteinerSystem& h,
                       std::span<const Vertex> map) {
    return is_induced(g.hypergraph(), h.hypergraph(), map);
}

inline bool is_strongly_induced(const SteinerSystem& g, const SteinerSystem& h,
                                std::span<const Vertex> map) {
    return is_strongly_induced(g.hypergraph(), h.hypergraph(), map, h.t());
}

inline bool is_copy_of_kind(const Hypergraph& g, const Hypergraph& h, std::span<const Vertex> map,
                            CopyKind kind, std::size_t t) {
    return kind == CopyKind::strong ? is_strongly_induced(g, h, map, t) : is_induced(g, h, map);
}

inline bool is_monotone(std::span<const Vertex> map) {
    return std::adjacent_find(map.begin(), map.end(), std::greater_equal<>()) == map.end();
}

namespace detail {

// Backtracking search for embeddings of `g` into `h`. Pattern vertices are
// assigned in id order; a partial map is rejected as soon as a pattern edge
// or a host edge becomes fully assigned without a partner. Host candidates
// for pattern vertex 0 are restricted to [root_lo, root_hi) so callers can
// split the work.
class EmbeddingSearch {
public:
    EmbeddingSearch(const Hypergraph& g, const Hypergraph& h, bool monotone)
        : g_(g), h_(h), monotone_(monotone), map_(g.vertex_count()),
          inverse_(h.vertex_count(), unassigned), closing_(g.vertex_count()) {
        for (std::size_t i = 0; i < g.edge_count(); ++i)
            closing_[g.edge(i).back()].push_back(i);
    }

    // visit(map) returns false to stop. Returns false iff stopped.
    template <typename Visit>
    bool run(Vertex root_lo, Vertex root_hi, Visit&& visit) {
        if (g_.vertex_count() == 0) return visit(std::span<const Vertex>(map_));
        return extend(0, root_lo, root_hi, visit);
    }

private:
    static constexpr Vertex unassigned = static_cast<Vertex>(-1);

    bool consistent(Vertex i) const {
        for (std::size_t ei : closing_[i]) {
            Edge img;
            for (Vertex u : g_.edge(ei)) img.push_back(map_[u]);
            std::sort(img.begin(), img.end());
            if (!h_.has_edge(img)) return false;
        }
        Vertex hv = map_[i];
        for (std::size_t ei : h_.incident(hv)) {
            Edge pre;
            bool full = true;
            for (Vertex w : h_.edge(ei)) {
                if (inverse_[w] == unassigned) {
                    full = false;
                    break;
                }
                pre.push_back(inverse_[w]);
            }
            if (!full) continue;
            std::sort(pre.begin(), pre.end());
            if (!g_.has_edge(pre)) return false;
        }
        return true;
    }

    template <typename Visit>
    bool extend(Vertex i, Vertex lo, Vertex hi, Visit& visit) {
        const Vertex n = static_cast<Vertex>(h_.vertex_count());
        Vertex start = i == 0 ? lo : (monotone_ ? map_[i - 1] + 1 : 0);
        Vertex stop = i == 0 ? std::min(hi, n) : n;
        for (Vertex v = start; v < stop; ++v) {
            if (inverse_[v] != unassigned) continue;
            if (h_.degree(v) < g_.degree(i)) continue;
            map_[i] = v;
            inverse_[v] = i;
            bool go = true;
            if (consistent(i)) {
                if (i + 1 == g_.vertex_count())
                    go = visit(std::span<const Vertex>(map_));
                else
                    go = extend(i + 1, lo, hi, visit);
            }
            inverse_[v] = unassigned;
            if (!go) return false;
        }
        return true;
    }

    const Hypergraph& g_;
    const Hypergraph& h_;
    bool monotone_;
    VertexList map_;
    VertexList inverse_;
    std::vector<std::vector<std::size_t>> closing_;
};

} // namespace detail

/// All copies of `pattern` in `host` of the given kind. Ordered copies are
/// the monotone embeddings; unordered copies are represented by the
/// lexicographically least embedding onto each image. Output is sorted by
/// image. `root_range` restricts where pattern vertex 0 may land.
inline std::vector<CopyEmbedding>
enumerate_copies(const Hypergraph& pattern, const Hypergraph& host, std::size_t t, CopyKind kind,
                 bool ordered,
                 std::pair<Vertex, Vertex> root_range = {0, static_cast<Vertex>(-1)}) {
    if (pattern.r() != host.r())
        throw ParameterMismatch("pattern r=" + std::to_string(pattern.r()) +
                                " but host r=" + std::to_string(host.r()));
    std::map<VertexList, VertexList> by_image;
    std::vector<CopyEmbedding> out;
    if (pattern.vertex_count() > host.vertex_count()) return out;
    detail::EmbeddingSearch search(pattern, host, ordered);
    search.run(root_range.first, root_range.second, [&](std::span<const Vertex> m) {
        VertexList image(m.begin(), m.end());
        std::sort(image.begin(), image.end());
        if (!ordered && by_image.count(image)) return true;
        if (kind == CopyKind::strong && !detail::strong_tail_unchecked(host, image, t))
            return true;
        if (ordered)
            out.push_back({VertexList(m.begin(), m.end()), kind, true});
        else
            by_image.emplace(std::move(image), VertexList(m.begin(), m.end()));
        return true;
    });
    if (!ordered)
        for (auto& [image, m] : by_image) out.push_back({std::move(m), kind, false});
    return out;
}

inline std::vector<CopyEmbedding> enumerate_copies(const SteinerSystem& pattern,
                                                   const SteinerSystem& host, CopyKind kind,
                                                   bool ordered) {
    if (pattern.r() != host.r() || pattern.t() != host.t())
        throw ParameterMismatch("pattern (r,t)=(" + std::to_string(pattern.r()) + "," +
                                std::to_string(pattern.t()) + ") but host (r,t)=(" +
                                std::to_string(host.r()) + "," + std::to_string(host.t()) + ")");
    return enumerate_copies(pattern.hypergraph(), host.hypergraph(), host.t(), kind, ordered);
}

inline constexpr std::size_t default_isomorphism_bound = 10;

/// An isomorphism a -> b if one exists. Ordered systems are compared under
/// the vertex-id order, so the only candidate is the identity.
inline std::optional<VertexList> are_isomorphic(const Hypergraph& a, const Hypergraph& b,
                                                bool ordered,
                                                std::size_t bound = default_isomorphism_bound) {
    if (a.r() != b.r() || a.vertex_count() != b.vertex_count() ||
        a.edge_count() != b.edge_count())
        return std::nullopt;
    if (ordered) {
        if (a.edges() != b.edges()) return std::nullopt;
        VertexList id(a.vertex_count());
        std::iota(id.begin(), id.end(), Vertex{0});
        return id;
    }
    if (a.vertex_count() > bound)
        throw SizeLimitExceeded("unordered isomorphism test on " +
                                std::to_string(a.vertex_count()) + " vertices exceeds bound " +
                                std::to_string(bound));
    std::vector<std::size_t> da, db;
    for (Vertex v = 0; v < a.vertex_count(); ++v) da.push_back(a.degree(v));
    for (Vertex v = 0; v < b.vertex_count(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return std::nullopt;
    std::optional<VertexList> found;
    detail::EmbeddingSearch search(a, b, false);
    search.run(0, static_cast<Vertex>(-1), [&](std::span<const Vertex> m) {
        found = VertexList(m.begin(), m.end());
        return false;
    });
    return found;
}

inline std::optional<VertexList> are_isomorphic(const SteinerSystem& a, const SteinerSystem& b,
                                                bool ordered,
                                                std::size_t bound = default_isomorphism_bound) {
    if (a.t() != b.t()) return std::nullopt;
    return are_isomorphic(a.hypergraph(), b.hypergraph(), ordered, bound);
}

/// Every permutation of the vertices is an automorphism. The symmetric group
/// is transitive on r-subsets, so this happens exactly when there are no
/// edges or every r-subset is an edge.
inline bool is_homogeneous(const Hypergraph& f) {
    return f.edge_count() == 0 || f.edge_count() == binomial(f.vertex_count(), f.r());
}

inline bool is_homogeneous(const SteinerSystem& f) { return is_homogeneous(f.hypergraph()); }

/// Every t-subset lies in some edge. In a Steiner system each t-subset lies
/// in at most one edge, so counting suffices.
inline bool is_complete(const SteinerSystem& f) {
    const std::uint64_t need = binomial(f.vertex_count(), f.t());
    const unsigned __int128 have =
        static_cast<unsigned __int128>(f.edge_count()) * binomial(f.r(), f.t());
    return have == need;
}

struct ClassTag {
    bool ordered = false;
    bool strong = false;

    friend bool operator==(const ClassTag&, const ClassTag&) = default;
};

inline std::string name(ClassTag c) {
    std::string s = c.strong ? "S◀" : "S";
    if (c.ordered) s += "<";
    return s;
}

inline ClassTag parse_class_tag(std::string_view s) {
    if (s == "S") return {false, false};
    if (s == "S<") return {true, false};
    if (s == "S◀" || s == "S^" || s == "Sstrong") return {false, true};
    if (s == "S◀<" || s == "S^<" || s == "Sstrong<") return {true, true};
    throw FormatError("unknown class '" + std::string(s) + "' (expected S, S<, S^, S^<)");
}

inline std::vector<ClassTag> all_class_tags() {
    return {{false, false}, {true, false}, {false, true}, {true, true}};
}

struct RamseyStatus {
    bool has_property = false;
    std::string clause;  // "i", "ii" or empty
    std::string reason;
};

inline RamseyStatus f_ramsey_status(ClassTag cls, const SteinerSystem& f) {
    if (!cls.ordered && !is_homogeneous(f))
        return {false, "i", "class " + name(cls) + " is unordered and F is not homogeneous"};
    if (!cls.strong && f.t() < f.r() && !is_complete(f))
        return {false, "ii", "class " + name(cls) + " is weak, t < r, and F is not complete"};
    std::string why;
    if (cls.ordered && cls.strong)
        why = "ordered strong classes are Ramsey";
    else {
        if (!cls.ordered) why = "F is homogeneous";
        if (!cls.strong) {
            if (!why.empty()) why += "; ";
            why += f.t() == f.r() ? "r = t" : "F is complete";
        }
    }
    return {true, "", why};
}

} // namespace steiner_ramsey
