#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "errors.hpp"
#include "hypergraph.hpp"

namespace steiner_ramsey {

/// A Steiner system together with a partition of its vertices into k
/// (possibly empty) classes, all edges crossing. Classes are 0-based here.
class PartiteSystem {
public:
    PartiteSystem() = default;

    PartiteSystem(SteinerSystem base, std::vector<std::size_t> class_of, std::size_t k)
        : base_(std::move(base)), class_of_(std::move(class_of)), k_(k) {
        if (class_of_.size() != base_.vertex_count())
            throw RangeError("class map has " + std::to_string(class_of_.size()) +
                             " entries for " + std::to_string(base_.vertex_count()) + " vertices");
        classes_.assign(k_, {});
        for (Vertex v = 0; v < class_of_.size(); ++v) {
            if (class_of_[v] >= k_)
                throw IndexOutOfRange("vertex " + std::to_string(v) + " in class " +
                                      std::to_string(class_of_[v]) + " of " + std::to_string(k_));
            classes_[class_of_[v]].push_back(v);
        }
        for (const auto& e : base_.edges()) {
            std::vector<std::size_t> cs;
            for (Vertex v : e) cs.push_back(class_of_[v]);
            std::sort(cs.begin(), cs.end());
            if (std::adjacent_find(cs.begin(), cs.end()) != cs.end())
                throw NonCrossingEdge("edge " + to_string(e) + " meets a class twice");
        }
    }

    const SteinerSystem& base() const noexcept { return base_; }
    const Hypergraph& hypergraph() const noexcept { return base_.hypergraph(); }
    std::size_t k() const noexcept { return k_; }
    std::size_t vertex_count() const noexcept { return base_.vertex_count(); }
    std::size_t class_of(Vertex v) const { return class_of_.at(v); }
    const std::vector<std::size_t>& projection() const noexcept { return class_of_; }
    const VertexList& vertex_class(std::size_t i) const { return classes_.at(i); }
    const std::vector<VertexList>& classes() const noexcept { return classes_; }

    /// Sorted class indices of the vertices of `e`.
    Edge project(std::span<const Vertex> e) const {
        Edge out;
        for (Vertex v : e) out.push_back(static_cast<Vertex>(class_of_.at(v)));
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const PartiteSystem& a, const PartiteSystem& b) {
        return a.k_ == b.k_ && a.class_of_ == b.class_of_ && a.base_ == b.base_;
    }

private:
    SteinerSystem base_;
    std::vector<std::size_t> class_of_;
    std::size_t k_ = 0;
    std::vector<VertexList> classes_;
};

/// Builds a partite system from explicit class lists.
inline PartiteSystem make_partite(SteinerSystem base, const std::vector<VertexList>& classes) {
    std::vector<std::size_t> class_of(base.vertex_count(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (Vertex v : classes[i]) {
            if (v >= class_of.size()) throw RangeError("class vertex out of range");
            if (class_of[v] != static_cast<std::size_t>(-1))
                throw RangeError("vertex " + std::to_string(v) + " in two classes");
            class_of[v] = i;
        }
    for (Vertex v = 0; v < class_of.size(); ++v)
        if (class_of[v] == static_cast<std::size_t>(-1))
            throw RangeError("vertex " + std::to_string(v) + " in no class");
    return PartiteSystem(std::move(base), std::move(class_of), classes.size());
}

// A crossing copy of F (with V(F) = [k]) is stored as the list of its
// vertices class by class: copy[i] is the vertex in class i.
using CrossingCopy = VertexList;

/// The strongly induced copies of f in x on which the projection is an
/// isomorphism onto f.
inline std::vector<CrossingCopy> crossing_copies(const PartiteSystem& x, const SteinerSystem& f) {
    if (f.vertex_count() != x.k())
        throw ParameterMismatch("pattern has " + std::to_string(f.vertex_count()) +
                                " vertices but the system has " + std::to_string(x.k()) +
                                " classes");
    if (f.r() != x.base().r() || f.t() != x.base().t())
        throw ParameterMismatch("pattern and system differ in (r,t)");
    const Hypergraph& g = f.hypergraph();
    const Hypergraph& h = x.hypergraph();
    const std::size_t k = x.k();
    std::vector<CrossingCopy> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    std::vector<std::vector<std::size_t>> closing(k);
    for (std::size_t i = 0; i < g.edge_count(); ++i) closing[g.edge(i).back()].push_back(i);
    CrossingCopy m(k);
    // Host edges are crossing, so a host edge inside the partial image is
    // fully assigned exactly when all its classes are below the current one.
    auto consistent = [&](std::size_t i) {
        for (std::size_t ei : closing[i]) {
            Edge img;
            for (Vertex u : g.edge(ei)) img.push_back(m[u]);
            std::sort(img.begin(), img.end());
            if (!h.has_edge(img)) return false;
        }
        for (std::size_t ei : h.incident(m[i])) {
            const Edge& e = h.edge(ei);
            Edge pre;
            bool inside = true;
            for (Vertex w : e) {
                std::size_t c = x.class_of(w);
                if (c > i || m[c] != w) {
                    inside = false;
                    break;
                }
                pre.push_back(static_cast<Vertex>(c));
            }
            if (!inside) continue;
            std::sort(pre.begin(), pre.end());
            if (!g.has_edge(pre)) return false;
        }
        return true;
    };
    auto rec = [&](auto& self, std::size_t i) -> void {
        for (Vertex v : x.vertex_class(i)) {
            if (h.degree(v) < g.degree(static_cast<Vertex>(i))) continue;
            m[i] = v;
            if (!consistent(i)) continue;
            if (i + 1 < k) {
                self(self, i + 1);
                continue;
            }
            VertexList image = m;
            std::sort(image.begin(), image.end());
            if (detail::strong_tail_unchecked(h, image, f.t())) out.push_back(m);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// (X, Q): a partite system with a family of crossing strongly induced
/// copies of the pattern F.
struct FHypergraph {
    SteinerSystem f;
    PartiteSystem x;
    std::vector<CrossingCopy> q;  // sorted

    friend bool operator==(const FHypergraph&, const FHypergraph&) = default;
};

inline FHypergraph validate_fhypergraph(SteinerSystem f, PartiteSystem x,
                                        std::vector<CrossingCopy> q) {
    if (f.vertex_count() != x.k())
        throw ParameterMismatch("pattern has " + std::to_string(f.vertex_count()) +
                                " vertices but the system has " + std::to_string(x.k()) +
                                " classes");
    if (f.r() != x.base().r() || f.t() != x.base().t())
        throw ParameterMismatch("pattern and system differ in (r,t)");
    for (const auto& e : x.base().edges()) {
        Edge p = x.project(e);
        if (!f.hypergraph().has_edge(p))
            throw ProjectionNotEdge("edge " + to_string(e) + " projects to " + to_string(p) +
                                    ", which is not an edge of the pattern");
    }
    for (const auto& c : q) {
        if (c.size() != x.k())
            throw CopyNotCrossing("copy " + to_string(c) + " does not have one vertex per class");
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] >= x.vertex_count() || x.class_of(c[i]) != i)
                throw CopyNotCrossing("copy " + to_string(c) + " has no vertex in class " +
                                      std::to_string(i + 1));
        if (!is_strongly_induced(f, x.base(), c))
            throw CopyNotStrong("copy " + to_string(c) + " is not a strongly induced copy");
    }
    std::sort(q.begin(), q.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
    return FHypergraph{std::move(f), std::move(x), std::move(q)};
}

/// (X,Q) strongly induced in (Y,R) via `map`: X strongly induced in Y,
/// classes respected, and the members of R inside the image are exactly
/// the images of Q.
inline bool fh_strongly_induced(const FHypergraph& a, const FHypergraph& b,
                                std::span<const Vertex> map) {
    if (a.x.k() != b.x.k() || !(a.f == b.f)) return false;
    if (!is_strongly_induced(a.x.base(), b.x.base(), map)) return false;
    for (Vertex v = 0; v < map.size(); ++v)
        if (a.x.class_of(v) != b.x.class_of(map[v])) return false;
    std::set<CrossingCopy> pushed;
    for (const auto& c : a.q) {
        CrossingCopy img;
        for (Vertex v : c) img.push_back(map[v]);
        pushed.insert(std::move(img));
    }
    VertexList image(map.begin(), map.end());
    std::sort(image.begin(), image.end());
    std::set<CrossingCopy> trace;
    for (const auto& c : b.q) {
        bool inside = std::all_of(c.begin(), c.end(), [&](Vertex v) {
            return std::binary_search(image.begin(), image.end(), v);
        });
        if (inside) trace.insert(c);
    }
    return pushed == trace;
}

} // namespace steiner_ramsey
