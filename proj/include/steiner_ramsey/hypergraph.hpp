#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "errors.hpp"

namespace steiner_ramsey {

using Vertex = std::uint32_t;
using VertexList = std::vector<Vertex>;
using Edge = VertexList;

inline std::string to_string(std::span<const Vertex> vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(vs[i]);
    }
    return out + "}";
}

/// An r-uniform hypergraph on the dense vertex set {0, ..., n-1}.
///
/// Edges are stored sorted (each edge ascending, the edge list
/// lexicographically) and deduplicated. Incidence lists are built eagerly
/// because almost every consumer walks edges around a vertex subset.
class Hypergraph {
public:
    Hypergraph() = default;

    Hypergraph(std::size_t r, std::size_t vertex_count, std::vector<Edge> edges)
        : r_(r), n_(vertex_count), edges_(std::move(edges)) {
        if (r_ == 0) throw RangeError("uniformity must be positive");
        for (auto& e : edges_) {
            std::sort(e.begin(), e.end());
            if (e.size() != r_ || std::adjacent_find(e.begin(), e.end()) != e.end() ||
                (!e.empty() && e.back() >= n_)) {
                throw EdgeArityError("edge " + to_string(e) + " is not a " +
                                     std::to_string(r_) + "-subset of the " +
                                     std::to_string(n_) + " vertices");
            }
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        incidence_.assign(n_, {});
        for (std::size_t i = 0; i < edges_.size(); ++i)
            for (Vertex v : edges_[i]) incidence_[v].push_back(i);
    }

    std::size_t r() const noexcept { return r_; }
    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_.at(i); }

    /// Edge indices containing `v`.
    const std::vector<std::size_t>& incident(Vertex v) const { return incidence_.at(v); }
    std::size_t degree(Vertex v) const { return incidence_.at(v).size(); }

    /// `e` must be sorted.
    bool has_edge(std::span<const Vertex> e) const {
        return edge_index(e) != npos;
    }

    std::size_t edge_index(std::span<const Vertex> e) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                                   [](const Edge& a, std::span<const Vertex> b) {
                                       return std::lexicographical_compare(a.begin(), a.end(),
                                                                           b.begin(), b.end());
                                   });
        if (it != edges_.end() && std::equal(it->begin(), it->end(), e.begin(), e.end()))
            return static_cast<std::size_t>(it - edges_.begin());
        return npos;
    }

    /// Indices of edges meeting the sorted vertex set `vs`, ascending.
    std::vector<std::size_t> edges_touching(std::span<const Vertex> vs) const {
        std::vector<std::size_t> out;
        for (Vertex v : vs)
            out.insert(out.end(), incidence_.at(v).begin(), incidence_.at(v).end());
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    /// Indices of edges contained in the sorted vertex set `vs`.
    std::vector<std::size_t> edges_within(std::span<const Vertex> vs) const {
        std::vector<std::size_t> out;
        for (std::size_t i : edges_touching(vs))
            if (is_sorted_subset<Vertex>(edges_[i], vs)) out.push_back(i);
        return out;
    }

    /// Induced subhypergraph on the sorted vertex set `vs`, relabelled so that
    /// vs[i] becomes i.
    Hypergraph induced(std::span<const Vertex> vs) const {
        std::vector<Edge> es;
        for (std::size_t i : edges_within(vs)) {
            Edge e;
            for (Vertex v : edges_[i])
                e.push_back(static_cast<Vertex>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()));
            es.push_back(std::move(e));
        }
        return Hypergraph(r_, vs.size(), std::move(es));
    }

    /// Image under `relabel` (old id -> new id) inside a vertex set of size
    /// `new_count`.
    Hypergraph relabeled(std::span<const Vertex> relabel, std::size_t new_count) const {
        std::vector<Edge> es;
        es.reserve(edges_.size());
        for (const auto& e : edges_) {
            Edge f;
            f.reserve(e.size());
            for (Vertex v : e) f.push_back(relabel[v]);
            es.push_back(std::move(f));
        }
        return Hypergraph(r_, new_count, std::move(es));
    }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.r_ == b.r_ && a.n_ == b.n_ && a.edges_ == b.edges_;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::size_t r_ = 1;
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> incidence_;
};

/// First pair of edges sharing at least `t` vertices, if any.
inline std::optional<std::pair<Edge, Edge>> find_steiner_violation(const Hypergraph& h,
                                                                   std::size_t t) {
    std::map<VertexList, std::size_t> owner;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        std::optional<std::pair<Edge, Edge>> hit;
        for_each_subset<Vertex>(h.edge(i), t, [&](std::span<const Vertex> x) {
            auto [it, fresh] = owner.emplace(VertexList(x.begin(), x.end()), i);
            if (!fresh) {
                hit = std::make_pair(h.edge(it->second), h.edge(i));
                return false;
            }
            return true;
        });
        if (hit) return hit;
    }
    return std::nullopt;
}

class SteinerSystem;
inline SteinerSystem validate_steiner(Hypergraph h, std::size_t t);

/// A Steiner (r,t)-system: an r-uniform hypergraph in which any two distinct
/// edges share fewer than t vertices. Only `validate_steiner` produces one.
class SteinerSystem {
public:
    SteinerSystem() : h_(2, 0, {}), t_(2) {}

    std::size_t r() const noexcept { return h_.r(); }
    std::size_t t() const noexcept { return t_; }
    std::size_t vertex_count() const noexcept { return h_.vertex_count(); }
    std::size_t edge_count() const noexcept { return h_.edge_count(); }
    const std::vector<Edge>& edges() const noexcept { return h_.edges(); }
    const Hypergraph& hypergraph() const noexcept { return h_; }

    friend bool operator==(const SteinerSystem& a, const SteinerSystem& b) {
        return a.t_ == b.t_ && a.h_ == b.h_;
    }

private:
    SteinerSystem(Hypergraph h, std::size_t t) : h_(std::move(h)), t_(t) {}
    friend SteinerSystem validate_steiner(Hypergraph h, std::size_t t);

    Hypergraph h_;
    std::size_t t_;
};

inline SteinerSystem validate_steiner(Hypergraph h, std::size_t t) {
    if (t < 2 || t > h.r())
        throw RangeError("need 2 <= t <= r, got r=" + std::to_string(h.r()) +
                         " t=" + std::to_string(t));
    if (auto bad = find_steiner_violation(h, t))
        throw SteinerViolation("edges " + to_string(bad->first) + " and " +
                               to_string(bad->second) + " share at least " +
                               std::to_string(t) + " vertices");
    return SteinerSystem(std::move(h), t);
}

inline SteinerSystem validate_steiner(std::size_t r, std::size_t t, std::size_t vertex_count,
                                      std::vector<Edge> edges) {
    if (t < 2 || t > r)
        throw RangeError("need 2 <= t <= r, got r=" + std::to_string(r) +
                         " t=" + std::to_string(t));
    return validate_steiner(Hypergraph(r, vertex_count, std::move(edges)), t);
}

/// A Steiner system with the linear order given by vertex ids.
struct OrderedSteinerSystem {
    SteinerSystem base;

    std::size_t vertex_count() const noexcept { return base.vertex_count(); }
    friend bool operator==(const OrderedSteinerSystem&, const OrderedSteinerSystem&) = default;
};

} // namespace steiner_ramsey
