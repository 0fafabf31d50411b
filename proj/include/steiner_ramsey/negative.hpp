#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "core.hpp"
#include "errors.hpp"
#include "hypergraph.hpp"
#include "oracle.hpp"

// Colourings that block the Ramsey property for incomplete or
// non-homogeneous patterns, and the ordering-property search they rely on.
namespace steiner_ramsey::negative {

using oracle::Color;
using steiner_ramsey::to_string;
inline constexpr Color red = 0;
inline constexpr Color blue = 1;

/// A 2-colouring of copies of a pattern. Ordered colourings key copies by
/// their map, unordered ones by their image.
struct Colouring {
    bool ordered = true;
    std::vector<VertexList> copies;  // sorted
    std::vector<Color> colour;

    std::optional<Color> colour_of(const VertexList& copy) const {
        VertexList key = copy;
        if (!ordered) std::sort(key.begin(), key.end());
        auto it = std::lower_bound(copies.begin(), copies.end(), key);
        if (it == copies.end() || *it != key) return std::nullopt;
        return colour[static_cast<std::size_t>(it - copies.begin())];
    }
    std::size_t count(Color c) const { return static_cast<std::size_t>(std::count(colour.begin(), colour.end(), c)); }
};

inline Colouring make_colouring(const std::vector<CopyEmbedding>& copies, bool ordered,
                                const std::function<Color(const VertexList&)>& pick) {
    std::vector<std::pair<VertexList, Color>> rows;
    for (const auto& cp : copies) {
        VertexList key = ordered ? cp.map : cp.image();
        rows.emplace_back(key, pick(cp.map));
    }
    std::sort(rows.begin(), rows.end());
    Colouring out;
    out.ordered = ordered;
    for (auto& [k, c] : rows) {
        out.copies.push_back(std::move(k));
        out.colour.push_back(c);
    }
    return out;
}

struct NoMonoResult {
    bool holds = true;                       // no monochromatic target
    std::optional<VertexList> monochromatic; // first offending copy of g
    std::size_t targets_checked = 0;
};

inline constexpr std::size_t default_max_targets = 1'000'000;

/// No copy of `g` (of kind_g, ordered or not) in `h` has a monochromatic set
/// of `f`-copies, where the f-copies of a target are those of kind_f
/// relative to the target itself. An empty set counts as monochromatic.
inline NoMonoResult verify_no_mono(const Hypergraph& h, const Hypergraph& g, const Hypergraph& f, std::size_t t,
                                   const Colouring& col, CopyKind kind_g, CopyKind kind_f, bool ordered,
                                   std::size_t max_targets = default_max_targets) {
    auto targets = enumerate_copies(g, h, t, kind_g, ordered);
    if (targets.size() > max_targets)
        throw SizeLimitExceeded(std::to_string(targets.size()) + " copies of the target exceed " +
                                std::to_string(max_targets));
    NoMonoResult out;
    for (const auto& gc : targets) {
        ++out.targets_checked;
        const VertexList vs = gc.image();
        const Hypergraph sub = h.induced(vs);
        std::optional<Color> seen;
        bool mono = true;
        for (const auto& inner : enumerate_copies(f, sub, t, kind_f, col.ordered)) {
            VertexList m;
            for (Vertex v : inner.map) m.push_back(vs[v]);
            auto c = col.colour_of(m);
            if (!c) throw DimensionMismatch("copy " + to_string(m) + " is not coloured");
            if (seen && *seen != *c) {
                mono = false;
                break;
            }
            seen = c;
        }
        if (mono) {
            out.holds = false;
            out.monochromatic = gc.map;
            return out;
        }
    }
    return out;
}

// Ordered versions -------------------------------------------------------

/// The distinct ordered systems obtained by ordering V(k), sorted by edge list.
inline std::vector<Hypergraph> ordered_versions(const Hypergraph& k) {
    VertexList pos(k.vertex_count());
    std::iota(pos.begin(), pos.end(), Vertex{0});
    std::set<std::vector<Edge>> seen;
    std::vector<Hypergraph> out;
    do {
        auto v = k.relabeled(pos, k.vertex_count());
        if (seen.insert(v.edges()).second) out.push_back(std::move(v));
    } while (std::next_permutation(pos.begin(), pos.end()));
    std::sort(out.begin(), out.end(), [](const Hypergraph& a, const Hypergraph& b) { return a.edges() < b.edges(); });
    return out;
}

/// Edges of the subsystem on `vs`, renumbered by position in `vs`.
inline std::vector<Edge> ordered_type(const Hypergraph& h, const VertexList& vs) {
    std::vector<std::size_t> where(h.vertex_count(), Hypergraph::npos);
    for (std::size_t i = 0; i < vs.size(); ++i) where[vs[i]] = i;
    VertexList sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Edge> es;
    for (std::size_t i : h.edges_within(sorted)) {
        Edge e;
        for (Vertex v : h.edges()[i]) e.push_back(static_cast<Vertex>(where[v]));
        std::sort(e.begin(), e.end());
        es.push_back(std::move(e));
    }
    std::sort(es.begin(), es.end());
    return es;
}

/// Disjoint union, `a` first.
inline Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
    std::vector<Edge> es = a.edges();
    const auto shift = static_cast<Vertex>(a.vertex_count());
    for (auto e : b.edges()) {
        for (auto& v : e) v += shift;
        es.push_back(std::move(e));
    }
    return Hypergraph(a.r(), a.vertex_count() + b.vertex_count(), std::move(es));
}

// Ordering property ------------------------------------------------------

/// m * N! * ((m-1)/m)^e, the failure bound of the random insertion.
inline double ordering_failure_bound(std::size_t m, std::size_t n, std::size_t e) {
    if (m == 0) throw RangeError("need at least one ordered version");
    if (m == 1) return e == 0 ? std::tgamma(static_cast<double>(n) + 1) : 0.0;
    const double lg = std::log(static_cast<double>(m)) + std::lgamma(static_cast<double>(n) + 1) +
                      static_cast<double>(e) * std::log(static_cast<double>(m - 1) / static_cast<double>(m));
    return std::exp(lg);
}

struct OrderingOptions {
    std::uint64_t seed = 1;
    std::size_t attempts = 64;            // random hosts per vertex count
    std::size_t max_vertices = 8;         // exhaustive certificate bound on v_G
    std::size_t max_pattern_vertices = 4; // v_K
};

struct OrderingCertificate {
    SteinerSystem g;
    enum class Kind { homogeneous, exhaustive } kind = Kind::exhaustive;
    std::uint64_t seed = 0;
    std::vector<Edge> host;               // the Steiner (v_K,2) host, empty for homogeneous K
    std::vector<std::size_t> versions;    // ordered version inserted into each host edge
    std::uint64_t orderings_checked = 0;
};

inline std::string to_string(OrderingCertificate::Kind k) {
    return k == OrderingCertificate::Kind::homogeneous ? "homogeneous" : "exhaustive";
}

/// An ordering of V(g) (position of each vertex) and an ordered version of k
/// with no strongly induced copy under it, if any.
struct OrderingGap {
    VertexList position;
    std::vector<Edge> missing;  // edges of the missing ordered version
};

/// Walks every ordering of V(g). Feasible for small g only.
inline std::optional<OrderingGap> find_ordering_gap(const SteinerSystem& g, const SteinerSystem& k,
                                                    std::uint64_t* walked = nullptr) {
    if (g.r() != k.r() || g.t() != k.t()) throw ParameterMismatch("pattern and host differ in (r,t)");
    if (g.vertex_count() > 10) throw SizeLimitExceeded("too many orderings of " + std::to_string(g.vertex_count()) + " vertices");
    const auto versions = ordered_versions(k.hypergraph());
    std::vector<VertexList> images;
    for (const auto& cp : enumerate_copies(k.hypergraph(), g.hypergraph(), g.t(), CopyKind::strong, false))
        images.push_back(cp.image());
    VertexList pos(g.vertex_count());
    std::iota(pos.begin(), pos.end(), Vertex{0});
    std::uint64_t count = 0;
    do {
        ++count;
        std::set<std::vector<Edge>> found;
        for (auto vs : images) {
            std::sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
            found.insert(ordered_type(g.hypergraph(), vs));
            if (found.size() == versions.size()) break;
        }
        for (const auto& v : versions)
            if (!found.count(v.edges())) {
                if (walked) *walked = count;
                return OrderingGap{pos, v.edges()};
            }
    } while (std::next_permutation(pos.begin(), pos.end()));
    if (walked) *walked = count;
    return std::nullopt;
}

namespace detail {

// Random greedy packing of s-subsets of [n] pairwise meeting in <= 1 vertex.
inline std::vector<Edge> greedy_packing(std::size_t n, std::size_t s, std::mt19937_64& rng) {
    std::vector<Edge> all;
    VertexList vs(n);
    std::iota(vs.begin(), vs.end(), Vertex{0});
    for_each_subset<Vertex>(vs, s, [&](std::span<const Vertex> e) {
        all.emplace_back(e.begin(), e.end());
        return true;
    });
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Edge> out;
    for (const auto& e : all) {
        bool ok = std::all_of(out.begin(), out.end(), [&](const Edge& f) {
            std::size_t meet = 0;
            for (Vertex v : e) meet += std::binary_search(f.begin(), f.end(), v);
            return meet <= 1;
        });
        if (ok) out.push_back(e);
    }
    return out;
}

} // namespace detail

/// Some G such that every ordering of G contains a strongly induced copy of
/// every ordered version of k. Random insertion into a packing host, each
/// candidate certified over all orderings.
inline OrderingCertificate ordering_property_search(const SteinerSystem& k, const OrderingOptions& opt = {}) {
    OrderingCertificate cert;
    cert.seed = opt.seed;
    if (is_homogeneous(k)) {
        cert.g = k;
        cert.kind = OrderingCertificate::Kind::homogeneous;
        return cert;
    }
    const std::size_t vk = k.vertex_count();
    if (vk > opt.max_pattern_vertices)
        throw SearchInfeasible("pattern has " + std::to_string(vk) + " vertices, search covers at most " +
                               std::to_string(opt.max_pattern_vertices));
    const auto versions = ordered_versions(k.hypergraph());
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::size_t> pick(0, versions.size() - 1);
    for (std::size_t n = vk; n <= opt.max_vertices; ++n)
        for (std::size_t a = 0; a < opt.attempts; ++a) {
            auto host = detail::greedy_packing(n, vk, rng);
            std::vector<std::size_t> chosen;
            std::vector<Edge> es;
            for (const auto& he : host) {
                chosen.push_back(pick(rng));
                for (const auto& e : versions[chosen.back()].edges()) {
                    Edge m;
                    for (Vertex v : e) m.push_back(he[v]);
                    es.push_back(std::move(m));
                }
            }
            auto g = validate_steiner(Hypergraph(k.r(), n, std::move(es)), k.t());
            std::uint64_t walked = 0;
            if (!find_ordering_gap(g, k, &walked)) {
                cert.g = std::move(g);
                cert.host = std::move(host);
                cert.versions = std::move(chosen);
                cert.orderings_checked = walked;
                return cert;
            }
        }
    throw SearchInfeasible("no host on at most " + std::to_string(opt.max_vertices) + " vertices after " +
                           std::to_string(opt.attempts) + " attempts per size");
}

// Incomplete ordered patterns ---------------------------------------------

/// An ordered system with a distinguished embedding of the pattern.
struct RootedExtension {
    OrderedSteinerSystem system;
    VertexList root;  // V(F) -> V(system), monotone

    friend bool operator==(const RootedExtension&, const RootedExtension&) = default;
};

struct IncompleteColouring {
    OrderedSteinerSystem f;
    VertexList x;  // t-set of f in no edge
    RootedExtension first, second;
    OrderedSteinerSystem g;  // first then second
    Colouring colouring;     // ordered induced copies of f in the host
};

/// The first t-set of f lying in no edge, if any.
inline std::optional<VertexList> uncovered_tset(const SteinerSystem& f) {
    std::set<Edge> covered;
    for (const auto& e : f.edges())
        for_each_subset<Vertex>(e, f.t(), [&](std::span<const Vertex> s) {
            covered.emplace(s.begin(), s.end());
            return true;
        });
    VertexList vs(f.vertex_count());
    std::iota(vs.begin(), vs.end(), Vertex{0});
    std::optional<VertexList> out;
    for_each_subset<Vertex>(vs, f.t(), [&](std::span<const Vertex> s) {
        if (covered.count(Edge(s.begin(), s.end()))) return true;
        out = VertexList(s.begin(), s.end());
        return false;
    });
    return out;
}

/// f plus an edge through x whose r-t new vertices all come after (or all
/// before) the vertices of f.
inline RootedExtension extend_through(const SteinerSystem& f, const VertexList& x, bool new_last) {
    const std::size_t n = f.vertex_count(), extra = f.r() - f.t();
    VertexList root(n);
    for (Vertex v = 0; v < n; ++v) root[v] = new_last ? v : static_cast<Vertex>(v + extra);
    std::vector<Edge> es;
    for (const auto& e : f.edges()) {
        Edge m;
        for (Vertex v : e) m.push_back(root[v]);
        es.push_back(std::move(m));
    }
    Edge added;
    for (Vertex v : x) added.push_back(root[v]);
    for (std::size_t i = 0; i < extra; ++i) added.push_back(static_cast<Vertex>(new_last ? n + i : i));
    es.push_back(std::move(added));
    return {OrderedSteinerSystem{validate_steiner(Hypergraph(f.r(), n + extra, std::move(es)), f.t())}, root};
}

/// Colours the ordered induced copies of f in h: red exactly when the copy is
/// the root of an induced copy of the first extension, blue otherwise.
inline IncompleteColouring incomplete_coloring_ordered(const OrderedSteinerSystem& f_, const OrderedSteinerSystem& h_) {
    const auto& f = f_.base;
    const auto& h = h_.base;
    if (f.r() != h.r() || f.t() != h.t()) throw ParameterMismatch("pattern and host differ in (r,t)");
    if (f.t() >= f.r()) throw ParameterMismatch("needs t < r");
    auto x = uncovered_tset(f);
    if (!x) throw PatternComplete("every t-set of the pattern lies in an edge");
    IncompleteColouring out;
    out.f = f_;
    out.x = *x;
    out.first = extend_through(f, *x, true);
    out.second = extend_through(f, *x, false);
    if (out.first == out.second) throw construction_bug("the two extensions coincide");
    out.g = OrderedSteinerSystem{validate_steiner(
        disjoint_union(out.first.system.base.hypergraph(), out.second.system.base.hypergraph()), f.t())};
    std::set<VertexList> reds;
    for (const auto& psi :
         enumerate_copies(out.first.system.base.hypergraph(), h.hypergraph(), h.t(), CopyKind::induced, true)) {
        VertexList phi;
        for (Vertex v : out.first.root) phi.push_back(psi.map[v]);
        reds.insert(std::move(phi));
    }
    out.colouring = make_colouring(enumerate_copies(f.hypergraph(), h.hypergraph(), h.t(), CopyKind::induced, true),
                                   true, [&](const VertexList& m) { return reds.count(m) ? red : blue; });
    return out;
}

inline NoMonoResult verify_incomplete(const IncompleteColouring& c, const OrderedSteinerSystem& h,
                                      std::size_t max_targets = default_max_targets) {
    return verify_no_mono(h.base.hypergraph(), c.g.base.hypergraph(), c.f.base.hypergraph(), h.base.t(), c.colouring,
                          CopyKind::induced, CopyKind::induced, true, max_targets);
}

// Non-homogeneous patterns -------------------------------------------------

struct NonhomogeneousOptions {
    CopyKind kind = CopyKind::induced;  // which copies of f in h get coloured
    bool require_g = false;
    OrderingOptions search;
};

struct NonhomogeneousColouring {
    SteinerSystem f;
    Hypergraph first, second;           // two ordered versions of f on [v_f]
    OrderedSteinerSystem k;             // first then second
    std::optional<OrderingCertificate> g;
    std::string g_reason;
    Colouring colouring;                // unordered copies of f in the host
};

/// Orders h by vertex id and colours a copy of f red when its induced
/// ordering is the first ordered version, blue otherwise.
inline NonhomogeneousColouring nonhomogeneous_coloring(const SteinerSystem& f, const SteinerSystem& h,
                                                       const NonhomogeneousOptions& opt = {}) {
    if (f.r() != h.r() || f.t() != h.t()) throw ParameterMismatch("pattern and host differ in (r,t)");
    if (is_homogeneous(f)) throw PatternHomogeneous("every ordering of the pattern is the same");
    NonhomogeneousColouring out;
    out.f = f;
    auto versions = ordered_versions(f.hypergraph());
    if (versions.size() < 2) throw construction_bug("a non-homogeneous pattern has one ordered version");
    out.first = versions[0];
    out.second = versions[1];
    out.k = OrderedSteinerSystem{validate_steiner(disjoint_union(out.first, out.second), f.t())};
    try {
        out.g = ordering_property_search(out.k.base, opt.search);
        out.g_reason = "certified over all orderings";
    } catch (const SearchInfeasible& e) {
        if (opt.require_g) throw;
        out.g_reason = e.what();
    }
    const auto& hh = h.hypergraph();
    out.colouring = make_colouring(enumerate_copies(f.hypergraph(), hh, h.t(), opt.kind, false), false,
                                   [&](const VertexList& m) {
                                       VertexList vs = m;
                                       std::sort(vs.begin(), vs.end());
                                       return ordered_type(hh, vs) == out.first.edges() ? red : blue;
                                   });
    return out;
}

/// Every strongly induced ordered copy of k in h carries both colours among
/// its strongly induced copies of f.
inline NoMonoResult verify_k_bichromatic(const NonhomogeneousColouring& c, const SteinerSystem& h,
                                         std::size_t max_targets = default_max_targets) {
    return verify_no_mono(h.hypergraph(), c.k.base.hypergraph(), c.f.hypergraph(), h.t(), c.colouring,
                          CopyKind::strong, CopyKind::strong, true, max_targets);
}

/// The full claim for a found G: no copy of G in h has a monochromatic set
/// of strongly induced copies of f.
inline NoMonoResult verify_nonhomogeneous(const NonhomogeneousColouring& c, const SteinerSystem& h,
                                          std::size_t max_targets = default_max_targets) {
    if (!c.g) throw SearchInfeasible("no ordering-property host: " + c.g_reason);
    return verify_no_mono(h.hypergraph(), c.g->g.hypergraph(), c.f.hypergraph(), h.t(), c.colouring,
                          CopyKind::induced, CopyKind::strong, false, max_targets);
}

} // namespace steiner_ramsey::negative
