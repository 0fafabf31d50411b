#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "core.hpp"
#include "errors.hpp"
#include "halesjewett.hpp"
#include "oracle.hpp"
#include "partite.hpp"

// The n-th power of an F-hypergraph and its combinatorial-line copies.
namespace steiner_ramsey::prelim {

using steiner_ramsey::to_string;

enum class ArrowMode { verified, assumed };

inline std::string to_string(ArrowMode m) { return m == ArrowMode::verified ? "verified-arrow" : "assumed-arrow"; }

/// Where the dimension n comes from.
struct NSource {
    enum class Kind { decided, fixed, assume } kind = Kind::decided;
    std::size_t n = 0;         // for fixed / assume
    std::size_t hj_bound = 4;  // for decided: largest n tried by the HJ search

    static NSource decided(std::size_t bound = 4) { return {Kind::decided, 0, bound}; }
    static NSource fixed(std::size_t n) { return {Kind::fixed, n, 0}; }
    static NSource assume(std::size_t n) { return {Kind::assume, n, 0}; }
};

inline constexpr std::size_t default_max_vertices = 10'000;

struct Limits {
    std::size_t max_vertices = default_max_vertices;
    std::size_t max_copies = oracle::default_max_copies;
};

struct LineCopy {
    hj::Line line;
    VertexList phi;                    // V(X) -> V(Y)
    std::vector<std::size_t> members;  // indices into R, one per member of Q in Q order
};

struct PowerWitness {
    FHypergraph input;
    std::size_t n = 1;
    FHypergraph output;
    std::vector<VertexList> tuples;       // Y vertex -> its n coordinates in V(X)
    std::vector<std::size_t> lambda;      // cube point rank -> index into output.q
    std::vector<LineCopy> lines;          // in enumerate_lines order
    ArrowMode mode = ArrowMode::assumed;
    std::string mode_reason;

    /// Index of a line copy whose members are monochromatic under `col`
    /// (a colouring of output.q), found by colouring the cube through lambda.
    std::optional<std::size_t> extract(const std::vector<oracle::Color>& col) const {
        if (input.q.empty()) return 0;
        hj::Cube cube{input.q.size(), n};
        std::vector<hj::Color> pts(lambda.size());
        for (std::size_t p = 0; p < lambda.size(); ++p) pts[p] = col.at(lambda[p]);
        auto hit = hj::find_monochromatic_line(cube, pts);
        if (!hit) return std::nullopt;
        auto it = std::lower_bound(lines.begin(), lines.end(), hit->first,
                                   [](const LineCopy& a, const hj::Line& b) { return a.line < b; });
        return static_cast<std::size_t>(it - lines.begin());
    }
};

/// The power system (Y, R) with lambda, without line copies or arrow mode.
inline PowerWitness build_power_system(const FHypergraph& x, std::size_t n,
                                       const Limits& lim = {}) {
    if (n == 0) throw RangeError("dimension must be positive");
    PowerWitness w;
    w.input = x;
    w.n = n;
    const std::size_t k = x.x.k();
    const auto& classes = x.x.classes();
    std::vector<std::size_t> offset(k + 1, 0);
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < k; ++i) {
        std::uint64_t sz = saturating_pow(classes[i].size(), n);
        total += sz;
        if (sz > lim.max_vertices || total > lim.max_vertices)
            throw SizeLimitExceeded("power system with n=" + std::to_string(n) + " would have more than " +
                                    std::to_string(lim.max_vertices) + " vertices");
        offset[i + 1] = offset[i] + sz;
    }
    // Class-local index of each X vertex.
    std::vector<std::size_t> local(x.x.vertex_count());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t a = 0; a < classes[i].size(); ++a) local[classes[i][a]] = a;
    auto id_of = [&](std::size_t cls, const VertexList& coords) {
        std::uint64_t rk = 0;
        for (Vertex v : coords) rk = rk * classes[cls].size() + local[v];
        return static_cast<Vertex>(offset[cls] + rk);
    };

    const std::size_t vy = offset[k];
    w.tuples.assign(vy, {});
    std::vector<std::size_t> class_of(vy);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t s = classes[i].size();
        for (std::size_t rk = 0; rk < offset[i + 1] - offset[i]; ++rk) {
            VertexList coords(n);
            std::size_t rest = rk;
            for (std::size_t h = n; h-- > 0;) {
                coords[h] = classes[i][rest % s];
                rest /= s;
            }
            w.tuples[offset[i] + rk] = std::move(coords);
            class_of[offset[i] + rk] = i;
        }
    }

    // Edges of Y over a class set S are the n-tuples of X-edges over S.
    std::map<Edge, std::vector<std::size_t>> by_classes;
    const auto& xh = x.x.hypergraph();
    for (std::size_t ei = 0; ei < xh.edge_count(); ++ei) by_classes[x.x.project(xh.edge(ei))].push_back(ei);
    std::vector<Edge> edges;
    for (const auto& [cls, group] : by_classes) {
        std::uint64_t count = saturating_pow(group.size(), n);
        if (count > 50 * lim.max_vertices)
            throw SizeLimitExceeded("power system has too many edges");
        for (std::uint64_t rk = 0; rk < count; ++rk) {
            std::vector<std::size_t> pick(n);
            std::uint64_t rest = rk;
            for (std::size_t h = n; h-- > 0;) {
                pick[h] = group[rest % group.size()];
                rest /= group.size();
            }
            Edge f;
            for (Vertex c : cls) {
                VertexList coords(n);
                for (std::size_t h = 0; h < n; ++h) {
                    for (Vertex v : xh.edge(pick[h]))
                        if (x.x.class_of(v) == c) coords[h] = v;
                }
                f.push_back(id_of(c, coords));
            }
            edges.push_back(std::move(f));
        }
    }
    Hypergraph yh(xh.r(), vy, std::move(edges));
    if (auto bad = find_steiner_violation(yh, x.f.t()))
        throw construction_bug("power system is not Steiner: " + to_string(bad->first) + " and " +
                               to_string(bad->second));
    PartiteSystem y(validate_steiner(std::move(yh), x.f.t()), std::move(class_of), k);

    // lambda over Q^n, in cube rank order.
    std::vector<CrossingCopy> r;
    const std::size_t qn = x.q.size();
    if (qn > 0) {
        hj::Cube cube{qn, n};
        hj::check_cube(cube, lim.max_vertices * 16);
        for (std::uint64_t p = 0; p < cube.point_count(); ++p) {
            auto word = hj::unrank(cube, p);
            CrossingCopy c(k);
            for (std::size_t i = 0; i < k; ++i) {
                VertexList coords(n);
                for (std::size_t h = 0; h < n; ++h) coords[h] = x.q[word[h]][i];
                c[i] = id_of(i, coords);
            }
            r.push_back(std::move(c));
        }
    }
    std::vector<CrossingCopy> by_point = r;
    try {
        w.output = validate_fhypergraph(x.f, std::move(y), std::move(r));
    } catch (const input_error& e) {
        throw construction_bug(std::string("power system fails the F-hypergraph checks: ") + e.what());
    }
    w.lambda.resize(by_point.size());
    for (std::size_t p = 0; p < by_point.size(); ++p) {
        auto it = std::lower_bound(w.output.q.begin(), w.output.q.end(), by_point[p]);
        w.lambda[p] = static_cast<std::size_t>(it - w.output.q.begin());
    }
    if (w.output.q.size() != by_point.size())
        throw construction_bug("lambda is not injective");
    return w;
}

/// phi_{C,g} together with the indices of L_{C,g} in R.
inline LineCopy build_line_copy(const PowerWitness& w, const hj::Line& line) {
    if (line.word.size() != w.n)
        throw DimensionMismatch("line of dimension " + std::to_string(line.word.size()) +
                                " for a power of dimension " + std::to_string(w.n));
    const auto& x = w.input;
    const std::size_t qn = x.q.size();
    LineCopy out;
    out.line = line;
    const auto& classes = w.output.x.classes();
    // Tuples are stored class by class in rank order; find ids by search.
    auto id_of = [&](std::size_t cls, const VertexList& coords) {
        const auto& members = classes[cls];
        auto it = std::lower_bound(members.begin(), members.end(), coords,
                                   [&](Vertex a, const VertexList& b) { return w.tuples[a] < b; });
        if (it == members.end() || w.tuples[*it] != coords)
            throw construction_bug("tuple missing from power system");
        return *it;
    };
    out.phi.resize(x.x.vertex_count());
    for (Vertex v = 0; v < x.x.vertex_count(); ++v) {
        std::size_t i = x.x.class_of(v);
        VertexList coords(w.n);
        for (std::size_t h = 0; h < w.n; ++h) {
            auto a = line.word[h];
            if (a == hj::Line::moving)
                coords[h] = v;
            else {
                if (static_cast<std::size_t>(a) >= qn) throw LetterNotInAlphabet("line letter out of range");
                coords[h] = x.q[a][i];
            }
        }
        out.phi[v] = id_of(i, coords);
    }
    if (qn > 0) {
        hj::Cube cube{qn, w.n};
        for (hj::Letter a = 0; a < qn; ++a)
            out.members.push_back(w.lambda[hj::rank(cube, hj::embed_line(cube, line, a))]);
    }
    return out;
}

/// Certificate that Lemma (ii) fails: line copy, R member, and t-set.
struct PropertyIIViolation {
    std::size_t line = 0;
    std::size_t r_member = 0;
    VertexList x;
};

/// For every line copy, every member of R and every t-subset of their
/// common vertices, some member of that line's copy set covers the t-set.
inline std::optional<PropertyIIViolation> verify_ppl_property_ii(const PowerWitness& w) {
    const std::size_t t = w.input.f.t();
    const auto& r = w.output.q;
    for (std::size_t li = 0; li < w.lines.size(); ++li) {
        const auto& lc = w.lines[li];
        VertexList vx = lc.phi;
        std::sort(vx.begin(), vx.end());
        std::vector<VertexList> cover;
        for (std::size_t m : lc.members) {
            VertexList vs = r[m];
            std::sort(vs.begin(), vs.end());
            cover.push_back(std::move(vs));
        }
        for (std::size_t ri = 0; ri < r.size(); ++ri) {
            VertexList vf = r[ri];
            std::sort(vf.begin(), vf.end());
            VertexList common;
            std::set_intersection(vx.begin(), vx.end(), vf.begin(), vf.end(), std::back_inserter(common));
            std::optional<PropertyIIViolation> bad;
            for_each_subset<Vertex>(common, t, [&](std::span<const Vertex> s) {
                for (const auto& c : cover)
                    if (is_sorted_subset<Vertex>(s, c)) return true;
                bad = PropertyIIViolation{li, ri, VertexList(s.begin(), s.end())};
                return false;
            });
            if (bad) return bad;
        }
    }
    return std::nullopt;
}

/// The arrow problem "line copies -> (X,Q)" over colourings of R.
inline oracle::ArrowProblem line_arrow_problem(const PowerWitness& w, std::size_t c) {
    oracle::ArrowProblem p;
    p.family_size = w.output.q.size();
    p.c = c;
    for (const auto& lc : w.lines) {
        auto m = lc.members;
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
        p.targets.push_back(std::move(m));
    }
    return p;
}

inline PowerWitness build_prelim_witness(const FHypergraph& x, std::size_t c, NSource src,
                                         const Limits& lim = {}) {
    if (c == 0) throw RangeError("need at least one colour");
    if (x.q.empty()) {
        // Nothing to colour: Y is X renumbered class by class, with the
        // single diagonal copy.
        PowerWitness w = build_power_system(x, 1, lim);
        w.lines.push_back(build_line_copy(w, hj::Line{{hj::Line::moving}}));
        w.mode = ArrowMode::verified;
        w.mode_reason = "no copies to colour";
        return w;
    }
    std::size_t n = 0;
    ArrowMode mode = ArrowMode::assumed;
    std::string reason;
    switch (src.kind) {
    case NSource::Kind::decided: {
        auto hjn = hj::hj_number(x.q.size(), c, src.hj_bound);
        if (!hjn)
            throw SizeLimitExceeded("HJ(" + std::to_string(x.q.size()) + "," + std::to_string(c) +
                                    ") is not decided within dimension " + std::to_string(src.hj_bound));
        n = *hjn;
        mode = ArrowMode::verified;
        reason = "n = HJ(" + std::to_string(x.q.size()) + "," + std::to_string(c) + ") decided by search";
        break;
    }
    case NSource::Kind::fixed:
    case NSource::Kind::assume:
        n = src.n;
        reason = "n supplied by caller";
        break;
    }
    PowerWitness w = build_power_system(x, n, lim);
    hj::Cube cube{x.q.size(), n};
    for (const auto& line : hj::enumerate_lines(cube, lim.max_vertices * 16))
        w.lines.push_back(build_line_copy(w, line));
    if (auto bad = verify_ppl_property_ii(w))
        throw construction_bug("property (ii) fails for line " + std::to_string(bad->line) +
                               " and copy " + std::to_string(bad->r_member) + " on " + to_string(bad->x));
    if (src.kind == NSource::Kind::fixed) {
        if (w.output.q.size() <= lim.max_copies) {
            auto v = oracle::decide(line_arrow_problem(w, c), {lim.max_copies, 1});
            if (!v.holds)
                throw ArrowRefuted("line copies do not arrow with n=" + std::to_string(n) + " and c=" +
                                   std::to_string(c));
            mode = ArrowMode::verified;
            reason = "arrow verified by exhausting colourings of R";
        } else {
            reason = "n supplied by caller; R too large to verify";
        }
    } else if (src.kind == NSource::Kind::assume) {
        reason = "arrow assumed";
    }
    w.mode = mode;
    w.mode_reason = std::move(reason);
    return w;
}

} // namespace steiner_ramsey::prelim
