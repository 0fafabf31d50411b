#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "core.hpp"
#include "errors.hpp"
#include "hypergraph.hpp"
#include "oracle.hpp"
#include "partite.hpp"
#include "prelim.hpp"

// Pictures and the partite construction. Hypergraphs here need not be
// Steiner. Every copy is stored as an explicit map, so "copy sets agree"
// is plain set equality of maps.
namespace steiner_ramsey::pictures {

using prelim::ArrowMode;
using Color = oracle::Color;

/// A k-partite F-system (W, P): copies are crossing, copy[i] in class i.
struct PartiteFSystem {
    Hypergraph w;
    std::vector<std::size_t> class_of;
    std::size_t k = 0;
    std::vector<CrossingCopy> p;  // sorted
};

inline PartiteFSystem from_fhypergraph(const FHypergraph& fh) {
    return {fh.x.hypergraph(), fh.x.projection(), fh.x.k(), fh.q};
}

inline FHypergraph to_fhypergraph(const PartiteFSystem& s, const SteinerSystem& f) {
    return validate_fhypergraph(f, PartiteSystem(validate_steiner(s.w, f.t()), s.class_of, s.k), s.p);
}

/// A system of k-partite copies of `input` inside `host` together with a
/// recorded arrow claim. copies[w] maps V(input) into V(host); members[w]
/// lists the indices of host.p that are images of input.p under it, in
/// input.p order.
struct WitnessSystem {
    PartiteFSystem host;
    std::vector<VertexList> copies;
    std::vector<std::vector<std::size_t>> members;
    ArrowMode mode = ArrowMode::assumed;
    std::string provider;
    std::string reason;
    // Picks a copy whose members are monochromatic under a colouring of
    // host.p. Defaults to a scan when unset.
    std::function<std::optional<std::size_t>(const std::vector<Color>&)> extractor;

    std::optional<std::size_t> extract(const std::vector<Color>& col) const {
        if (extractor) {
            auto w = extractor(col);
            if (w && is_mono(*w, col)) return w;
        }
        for (std::size_t w = 0; w < copies.size(); ++w)
            if (is_mono(w, col)) return w;
        return std::nullopt;
    }

    bool is_mono(std::size_t w, const std::vector<Color>& col) const {
        const auto& m = members.at(w);
        return std::all_of(m.begin(), m.end(), [&](std::size_t j) { return col.at(j) == col.at(m[0]); });
    }

    oracle::ArrowProblem arrow_problem(std::size_t c) const {
        oracle::ArrowProblem pr;
        pr.family_size = host.p.size();
        pr.c = c;
        for (auto m : members) {
            std::sort(m.begin(), m.end());
            m.erase(std::unique(m.begin(), m.end()), m.end());
            pr.targets.push_back(std::move(m));
        }
        return pr;
    }
};

using Provider = std::function<WitnessSystem(const PartiteFSystem&, std::size_t c)>;

/// The data the construction runs on: (X,Q), (Y,R) with V(Y) = [m], the
/// semi-induced copies tau[y] : V(X) -> [m], and c.
struct ArrowInput {
    Hypergraph f;  // pattern on [k]
    std::size_t t = 2;
    Hypergraph x;
    std::vector<VertexList> q;  // maps [k] -> V(X)
    Hypergraph y;
    std::vector<VertexList> r;  // maps [k] -> V(Y), sorted by image then map
    std::vector<VertexList> tau;
    std::vector<std::vector<std::size_t>> q_members;  // filled by validate_arrow_input
    std::size_t c = 2;
    ArrowMode mode = ArrowMode::assumed;
    std::function<std::optional<std::size_t>(const std::vector<Color>&)> base_extractor;

    std::size_t k() const { return f.vertex_count(); }
    std::size_t m() const { return y.vertex_count(); }
};

inline bool image_less(const VertexList& a, const VertexList& b) {
    VertexList sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return std::tie(sa, a) < std::tie(sb, b);
}

/// Sorts R and the witness copies into the fixed enumeration order, checks
/// every witness copy is a semi-induced copy of (X,Q) in (Y,R), and fills
/// q_members.
inline ArrowInput validate_arrow_input(ArrowInput in) {
    if (in.x.r() != in.f.r() || in.y.r() != in.f.r())
        throw ParameterMismatch("pattern, X and Y must have the same uniformity");
    for (const auto& qc : in.q)
        if (!is_induced(in.f, in.x, qc)) throw WitnessShapeMismatch("a member of Q is not an induced copy");
    std::sort(in.r.begin(), in.r.end(), image_less);
    in.r.erase(std::unique(in.r.begin(), in.r.end()), in.r.end());
    for (const auto& rc : in.r)
        if (!is_induced(in.f, in.y, rc)) throw WitnessShapeMismatch("a member of R is not an induced copy");
    std::sort(in.tau.begin(), in.tau.end(), image_less);
    in.tau.erase(std::unique(in.tau.begin(), in.tau.end()), in.tau.end());
    std::map<VertexList, std::size_t> r_index;
    for (std::size_t i = 0; i < in.r.size(); ++i) r_index[in.r[i]] = i;
    in.q_members.clear();
    for (const auto& tau : in.tau) {
        if (!is_induced(in.x, in.y, tau)) throw WitnessShapeMismatch("a witness copy is not induced in Y");
        std::vector<std::size_t> mem;
        for (const auto& qc : in.q) {
            VertexList img;
            for (Vertex v : qc) img.push_back(tau[v]);
            auto it = r_index.find(img);
            if (it == r_index.end())
                throw WitnessShapeMismatch("witness copy sends " + to_string(qc) + " outside R");
            mem.push_back(it->second);
        }
        in.q_members.push_back(std::move(mem));
    }
    return in;
}

struct SCopy {
    std::size_t rho = 0;
    VertexList map;  // [k] -> V(Z)
    friend auto operator<=>(const SCopy&, const SCopy&) = default;
};

struct GoodCopy {
    std::size_t y = 0;
    VertexList mu;  // V(X) -> V(Z)
    friend auto operator<=>(const GoodCopy&, const GoodCopy&) = default;
};

struct Picture {
    std::size_t m = 0;
    Hypergraph z;
    std::vector<std::size_t> class_of;
    std::vector<SCopy> s;        // sorted
    std::vector<GoodCopy> good;  // sorted

    std::size_t vertex_count() const { return z.vertex_count(); }
    std::vector<VertexList> classes() const {
        std::vector<VertexList> out(m);
        for (Vertex v = 0; v < class_of.size(); ++v) out[class_of[v]].push_back(v);
        return out;
    }
    std::size_t s_index(const VertexList& map) const {
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i].map == map) return i;
        return npos;
    }
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

inline VertexList compose(const VertexList& outer, const VertexList& inner) {
    VertexList out;
    out.reserve(inner.size());
    for (Vertex v : inner) out.push_back(outer.at(v));
    return out;
}

inline Picture build_picture_zero(const ArrowInput& in) {
    Picture pi;
    pi.m = in.m();
    const std::size_t vx = in.x.vertex_count();
    const std::size_t ny = in.tau.size();
    pi.class_of.resize(vx * ny);
    std::vector<Edge> edges;
    for (std::size_t y = 0; y < ny; ++y) {
        VertexList mu(vx);
        for (Vertex v = 0; v < vx; ++v) {
            mu[v] = static_cast<Vertex>(y * vx + v);
            pi.class_of[mu[v]] = in.tau[y][v];
        }
        for (const auto& e : in.x.edges()) edges.push_back(compose(mu, e));
        for (std::size_t a = 0; a < in.q.size(); ++a)
            pi.s.push_back({in.q_members[y][a], compose(mu, in.q[a])});
        pi.good.push_back({y, std::move(mu)});
    }
    pi.z = Hypergraph(in.f.r(), vx * ny, std::move(edges));
    std::sort(pi.s.begin(), pi.s.end());
    std::sort(pi.good.begin(), pi.good.end());
    return pi;
}

/// First failed clause of the picture definition, if any.
inline std::optional<std::string> validate_picture(const ArrowInput& in, const Picture& pi) {
    if (pi.class_of.size() != pi.z.vertex_count()) return "class map has the wrong size";
    for (auto c : pi.class_of)
        if (c >= in.m()) return "class index out of range";
    auto psi = [&](const VertexList& vs) {
        VertexList out;
        for (Vertex v : vs) out.push_back(static_cast<Vertex>(pi.class_of[v]));
        return out;
    };
    for (const auto& e : pi.z.edges()) {
        auto pe = psi(e);
        std::sort(pe.begin(), pe.end());
        if (std::adjacent_find(pe.begin(), pe.end()) != pe.end()) return "edge " + to_string(e) + " is not crossing";
        if (!in.y.has_edge(pe)) return "edge " + to_string(e) + " does not project onto an edge of Y";
    }
    std::set<VertexList> s_maps;
    for (const auto& sc : pi.s) {
        if (sc.rho >= in.r.size()) return "copy refers to a missing member of R";
        if (psi(sc.map) != in.r[sc.rho]) return "copy " + to_string(sc.map) + " does not project onto its member of R";
        if (!is_induced(in.f, pi.z, sc.map)) return "copy " + to_string(sc.map) + " is not induced";
        s_maps.insert(sc.map);
    }
    for (const auto& g : pi.good) {
        if (g.y >= in.tau.size()) return "good copy refers to a missing witness copy";
        if (psi(g.mu) != in.tau[g.y]) return "good copy does not project onto its witness copy";
        if (!is_induced(in.x, pi.z, g.mu)) return "good copy is not induced";
        VertexList image = g.mu;
        std::sort(image.begin(), image.end());
        std::set<VertexList> inside, expect;
        for (const auto& m : s_maps)
            if (std::all_of(m.begin(), m.end(), [&](Vertex v) { return std::binary_search(image.begin(), image.end(), v); }))
                inside.insert(m);
        for (const auto& qc : in.q) expect.insert(compose(g.mu, qc));
        if (inside != expect) return "good copy " + to_string(g.mu) + " does not trace its copy set";
    }
    return std::nullopt;
}

/// (Z_rho, S_rho) relabelled densely: local vertex ids run class by class.
struct RhoSystem {
    std::size_t rho = 0;
    PartiteFSystem local;
    VertexList local_to_global;
    std::vector<std::size_t> global_to_local;  // npos outside
};

inline RhoSystem restrict_to_rho(const ArrowInput& in, const Picture& pi, std::size_t rho) {
    if (rho >= in.r.size())
        throw IndexOutOfRange("rho " + std::to_string(rho) + " with |R| = " + std::to_string(in.r.size()));
    const auto& sigma = in.r[rho];
    const std::size_t k = in.k();
    RhoSystem out;
    out.rho = rho;
    out.global_to_local.assign(pi.vertex_count(), Picture::npos);
    std::vector<std::size_t> spine_class(in.m(), Picture::npos);
    for (std::size_t i = 0; i < k; ++i) spine_class[sigma[i]] = i;
    auto cls = pi.classes();
    for (std::size_t i = 0; i < k; ++i)
        for (Vertex v : cls[sigma[i]]) {
            out.global_to_local[v] = out.local_to_global.size();
            out.local_to_global.push_back(v);
            out.local.class_of.push_back(i);
        }
    out.local.k = k;
    std::vector<Edge> edges;
    for (const auto& e : pi.z.edges()) {
        Edge pre;  // classes in pattern coordinates
        bool inside = true;
        for (Vertex v : e) {
            auto i = spine_class[pi.class_of[v]];
            if (i == Picture::npos) {
                inside = false;
                break;
            }
            pre.push_back(static_cast<Vertex>(i));
        }
        if (!inside) continue;
        std::sort(pre.begin(), pre.end());
        if (!in.f.has_edge(pre)) continue;
        Edge le;
        for (Vertex v : e) le.push_back(static_cast<Vertex>(out.global_to_local[v]));
        edges.push_back(std::move(le));
    }
    out.local.w = Hypergraph(in.f.r(), out.local_to_global.size(), std::move(edges));
    for (const auto& sc : pi.s)
        if (sc.rho == rho) {
            CrossingCopy c;
            for (Vertex v : sc.map) c.push_back(static_cast<Vertex>(out.global_to_local[v]));
            out.local.p.push_back(std::move(c));
        }
    std::sort(out.local.p.begin(), out.local.p.end());
    return out;
}

/// Checks that `w` is a system of k-partite induced copies of `input`.
inline void check_witness_shape(const PartiteFSystem& input, const WitnessSystem& w, const Hypergraph& f) {
    const auto& host = w.host;
    if (host.k != input.k) throw WitnessShapeMismatch("witness host has the wrong number of classes");
    if (w.members.size() != w.copies.size()) throw WitnessShapeMismatch("members and copies differ in length");
    std::set<CrossingCopy> hp(host.p.begin(), host.p.end());
    for (const auto& c : host.p)
        if (!is_induced(f, host.w, c)) throw WitnessShapeMismatch("host copy is not induced");
    for (std::size_t wi = 0; wi < w.copies.size(); ++wi) {
        const auto& phi = w.copies[wi];
        if (phi.size() != input.w.vertex_count()) throw WitnessShapeMismatch("copy map has the wrong size");
        for (Vertex v = 0; v < phi.size(); ++v)
            if (phi[v] >= host.w.vertex_count() || host.class_of[phi[v]] != input.class_of[v])
                throw WitnessShapeMismatch("copy map does not respect classes");
        if (std::set<Vertex>(phi.begin(), phi.end()).size() != phi.size())
            throw WitnessShapeMismatch("copy map is not injective");
        if (!is_induced(input.w, host.w, phi)) throw WitnessShapeMismatch("copy is not induced");
        VertexList image = phi;
        std::sort(image.begin(), image.end());
        std::set<CrossingCopy> inside, expect;
        for (const auto& c : host.p)
            if (std::all_of(c.begin(), c.end(), [&](Vertex v) { return std::binary_search(image.begin(), image.end(), v); }))
                inside.insert(c);
        for (const auto& c : input.p) expect.insert(compose(phi, c));
        if (inside != expect) throw WitnessShapeMismatch("copy does not trace the distinguished copies");
        if (w.members[wi].size() != input.p.size()) throw WitnessShapeMismatch("member list has the wrong size");
        for (std::size_t a = 0; a < input.p.size(); ++a)
            if (host.p.at(w.members[wi][a]) != compose(phi, input.p[a]))
                throw WitnessShapeMismatch("member list does not match the copy map");
    }
}

struct Amalgamation {
    Picture picture;
    std::vector<VertexList> canonical;  // phi_w : V(old) -> V(new)
    VertexList host_to_new;             // V(W) -> V(new)
};

/// Pi *_rho W. W's vertices keep their ids; the off-spine pairs (v, w)
/// follow, ordered by v and then w.
inline Amalgamation amalgamate(const ArrowInput& in, const Picture& pi, const RhoSystem& rs,
                               const WitnessSystem& w) {
    check_witness_shape(rs.local, w, in.f);
    const std::size_t nw = w.copies.size();
    const std::size_t vw = w.host.w.vertex_count();
    const auto& sigma = in.r[rs.rho];
    Amalgamation out;
    Picture& np = out.picture;
    np.m = pi.m;
    out.host_to_new.resize(vw);
    np.class_of.resize(vw);
    for (Vertex v = 0; v < vw; ++v) {
        out.host_to_new[v] = v;
        np.class_of[v] = sigma[w.host.class_of[v]];
    }
    std::vector<Vertex> off_spine;
    for (Vertex v = 0; v < pi.vertex_count(); ++v)
        if (rs.global_to_local[v] == Picture::npos) off_spine.push_back(v);
    std::vector<std::size_t> off_index(pi.vertex_count(), Picture::npos);
    for (std::size_t a = 0; a < off_spine.size(); ++a) off_index[off_spine[a]] = a;
    np.class_of.resize(vw + off_spine.size() * nw);
    for (std::size_t a = 0; a < off_spine.size(); ++a)
        for (std::size_t wi = 0; wi < nw; ++wi) np.class_of[vw + a * nw + wi] = pi.class_of[off_spine[a]];

    std::vector<Edge> edges;
    std::set<SCopy> s;
    std::set<GoodCopy> good;
    for (std::size_t wi = 0; wi < nw; ++wi) {
        VertexList phi(pi.vertex_count());
        for (Vertex v = 0; v < pi.vertex_count(); ++v) {
            auto l = rs.global_to_local[v];
            phi[v] = l != Picture::npos ? out.host_to_new[w.copies[wi][l]]
                                        : static_cast<Vertex>(vw + off_index[v] * nw + wi);
        }
        for (const auto& e : pi.z.edges()) edges.push_back(compose(phi, e));
        for (const auto& sc : pi.s) s.insert({sc.rho, compose(phi, sc.map)});
        for (const auto& g : pi.good) good.insert({g.y, compose(phi, g.mu)});
        out.canonical.push_back(std::move(phi));
    }
    np.z = Hypergraph(in.f.r(), np.class_of.size(), std::move(edges));
    np.s.assign(s.begin(), s.end());
    np.good.assign(good.begin(), good.end());
    return out;
}

/// The canonical copy given by `phi` is an induced subpicture of `big`.
inline std::optional<std::string> check_part_ind(const ArrowInput& in, const Picture& small, const Picture& big,
                                                 const VertexList& phi) {
    for (Vertex v = 0; v < phi.size(); ++v)
        if (big.class_of.at(phi[v]) != small.class_of[v]) return "class of vertex " + std::to_string(v) + " changes";
    if (!is_induced(small.z, big.z, phi)) return "canonical copy is not induced";
    VertexList image = phi;
    std::sort(image.begin(), image.end());
    auto inside = [&](const VertexList& m) {
        return std::all_of(m.begin(), m.end(), [&](Vertex v) { return std::binary_search(image.begin(), image.end(), v); });
    };
    std::set<VertexList> got, want;
    for (const auto& sc : big.s)
        if (inside(sc.map)) got.insert(sc.map);
    for (const auto& sc : small.s) want.insert(compose(phi, sc.map));
    if (got != want) return "distinguished copies inside the canonical copy differ";
    std::set<GoodCopy> ggot, gwant;
    for (const auto& g : big.good)
        if (inside(g.mu)) ggot.insert(g);
    for (const auto& g : small.good) gwant.insert({g.y, compose(phi, g.mu)});
    if (ggot != gwant) return "good copies inside the canonical copy differ";
    (void)in;
    return std::nullopt;
}

struct Step {
    std::size_t rho = 0;
    RhoSystem restricted;
    WitnessSystem witness;
    std::vector<VertexList> canonical;
    VertexList host_to_new;
};

struct Construction {
    ArrowInput input;
    std::vector<Picture> pictures;  // Pi^0 .. Pi^{|R|}
    std::vector<Step> steps;        // steps[rho] builds pictures[rho + 1]

    const Picture& final_picture() const { return pictures.back(); }
    bool all_verified() const {
        if (input.mode != ArrowMode::verified) return false;
        return std::all_of(steps.begin(), steps.end(), [](const Step& s) { return s.witness.mode == ArrowMode::verified; });
    }
};

struct RunOptions {
    bool validate = true;  // re-check pictures and canonical copies every step
    std::size_t max_vertices = prelim::default_max_vertices;
    // Called after each step with the new picture, for extra invariants.
    std::function<void(const Construction&, std::size_t rho)> on_step;
};

inline Construction run_partite_construction(ArrowInput input, const Provider& provider, const RunOptions& opt = {}) {
    Construction out;
    out.input = std::move(input);
    const auto& in = out.input;
    out.pictures.push_back(build_picture_zero(in));
    if (opt.validate)
        if (auto bad = validate_picture(in, out.pictures.back()))
            throw construction_bug("picture zero: " + *bad);
    for (std::size_t rho = 0; rho < in.r.size(); ++rho) {
        const Picture& cur = out.pictures.back();
        Step st;
        st.rho = rho;
        st.restricted = restrict_to_rho(in, cur, rho);
        try {
            st.witness = provider(st.restricted.local, in.c);
        } catch (const infeasible_error&) {
            throw;
        } catch (const std::exception& e) {
            throw ProviderFailure("step " + std::to_string(rho + 1) + ": " + e.what());
        }
        const std::uint64_t off = cur.vertex_count() - st.restricted.local_to_global.size();
        const std::uint64_t predicted = st.witness.host.w.vertex_count() + off * st.witness.copies.size();
        if (predicted > opt.max_vertices)
            throw SizeLimitExceeded("picture after step " + std::to_string(rho + 1) + " would have " +
                                    std::to_string(predicted) + " vertices");
        auto am = amalgamate(in, cur, st.restricted, st.witness);
        if (opt.validate) {
            if (auto bad = validate_picture(in, am.picture))
                throw construction_bug("picture " + std::to_string(rho + 1) + ": " + *bad);
            for (const auto& phi : am.canonical)
                if (auto bad = check_part_ind(in, cur, am.picture, phi))
                    throw construction_bug("picture " + std::to_string(rho + 1) + ": " + *bad);
        }
        st.canonical = std::move(am.canonical);
        st.host_to_new = std::move(am.host_to_new);
        out.steps.push_back(std::move(st));
        out.pictures.push_back(std::move(am.picture));
        if (opt.on_step) opt.on_step(out, rho);
    }
    return out;
}

struct Extraction {
    GoodCopy copy;               // in the final picture
    std::vector<Color> phi;      // colour chosen for each member of R
    VertexList zero_to_final;    // embedding of picture zero
    bool monochromatic = false;
};

/// Replays the backwards argument: at each step the witness picks a
/// canonical copy on which the copies over F_rho share a colour, then the
/// base arrow picks a witness copy whose Q is monochromatic.
inline Extraction extract_monochromatic(const Construction& cons, const std::vector<Color>& gamma) {
    const auto& in = cons.input;
    const Picture& fin = cons.final_picture();
    if (gamma.size() != fin.s.size())
        throw DimensionMismatch("colouring has " + std::to_string(gamma.size()) + " entries for " +
                                std::to_string(fin.s.size()) + " copies");
    std::map<VertexList, std::size_t> s_final;
    for (std::size_t i = 0; i < fin.s.size(); ++i) s_final[fin.s[i].map] = i;

    Extraction ex;
    ex.phi.assign(in.r.size(), 0);
    VertexList cur(fin.vertex_count());
    for (Vertex v = 0; v < cur.size(); ++v) cur[v] = v;
    for (std::size_t step = cons.steps.size(); step-- > 0;) {
        const Step& st = cons.steps[step];
        const auto& w = st.witness;
        std::vector<Color> col(w.host.p.size(), 0);
        for (std::size_t j = 0; j < w.host.p.size(); ++j) {
            VertexList m;
            for (Vertex v : w.host.p[j]) m.push_back(cur.at(st.host_to_new[v]));
            auto it = s_final.find(m);
            if (it != s_final.end()) col[j] = gamma[it->second];
        }
        auto pick = w.extract(col);
        if (!pick) {
            if (w.mode == ArrowMode::verified && in.mode == ArrowMode::verified)
                throw construction_bug("verified witness at step " + std::to_string(step + 1) + " has no monochromatic copy");
            throw ArrowRefuted("witness at step " + std::to_string(step + 1) + " (" + w.provider +
                               ", assumed arrow) has no monochromatic copy");
        }
        const auto& mem = w.members[*pick];
        ex.phi[st.rho] = mem.empty() ? 0 : col[mem[0]];
        cur = compose(cur, st.canonical[*pick]);
    }
    ex.zero_to_final = cur;

    std::optional<std::size_t> y;
    if (in.base_extractor) y = in.base_extractor(ex.phi);
    auto mono_y = [&](std::size_t yi) {
        const auto& m = in.q_members[yi];
        return std::all_of(m.begin(), m.end(), [&](std::size_t j) { return ex.phi[j] == ex.phi[m[0]]; });
    };
    if (y && (*y >= in.tau.size() || !mono_y(*y))) y.reset();
    for (std::size_t yi = 0; !y && yi < in.tau.size(); ++yi)
        if (mono_y(yi)) y = yi;
    if (!y) {
        if (cons.all_verified()) throw construction_bug("verified base arrow has no monochromatic copy");
        throw ArrowRefuted("base arrow (assumed) has no monochromatic copy");
    }
    const Picture& zero = cons.pictures.front();
    auto g0 = std::find_if(zero.good.begin(), zero.good.end(), [&](const GoodCopy& g) { return g.y == *y; });
    ex.copy = {*y, compose(cur, g0->mu)};
    if (!std::binary_search(fin.good.begin(), fin.good.end(), ex.copy))
        throw construction_bug("extracted copy is not a good copy of the final picture");
    ex.monochromatic = true;
    std::optional<Color> seen;
    for (const auto& qc : in.q) {
        auto it = s_final.find(compose(ex.copy.mu, qc));
        if (it == s_final.end()) throw construction_bug("extracted copy lost one of its distinguished copies");
        Color c = gamma[it->second];
        if (seen && *seen != c) ex.monochromatic = false;
        seen = c;
    }
    if (!ex.monochromatic) {
        if (cons.all_verified()) throw construction_bug("extraction returned a non-monochromatic copy");
        throw ArrowRefuted("extracted copy is not monochromatic; some arrow was only assumed");
    }
    return ex;
}

/// The arrow problem "good copies -> (X,Q)" over colourings of S.
inline oracle::ArrowProblem good_copy_problem(const ArrowInput& in, const Picture& pi, std::size_t c) {
    std::map<VertexList, std::size_t> idx;
    for (std::size_t i = 0; i < pi.s.size(); ++i) idx[pi.s[i].map] = i;
    oracle::ArrowProblem p;
    p.family_size = pi.s.size();
    p.c = c;
    for (const auto& g : pi.good) {
        std::vector<std::size_t> t;
        for (const auto& qc : in.q) t.push_back(idx.at(compose(g.mu, qc)));
        std::sort(t.begin(), t.end());
        t.erase(std::unique(t.begin(), t.end()), t.end());
        p.targets.push_back(std::move(t));
    }
    return p;
}

// Providers --------------------------------------------------------------

/// The input itself with the identity copy. Its arrow holds exactly when
/// at most one copy is distinguished or c = 1.
inline WitnessSystem identity_witness(const PartiteFSystem& input, std::size_t c) {
    WitnessSystem w;
    w.host = input;
    VertexList id(input.w.vertex_count());
    for (Vertex v = 0; v < id.size(); ++v) id[v] = v;
    w.copies.push_back(std::move(id));
    std::vector<std::size_t> mem(input.p.size());
    for (std::size_t a = 0; a < mem.size(); ++a) mem[a] = a;
    w.members.push_back(std::move(mem));
    w.provider = "identity";
    if (input.p.size() <= 1 || c == 1) {
        w.mode = ArrowMode::verified;
        w.reason = "at most one copy or one colour";
    } else {
        w.mode = ArrowMode::assumed;
        w.reason = "identity copy cannot force a colour";
    }
    return w;
}

inline Provider identity_provider() {
    return [](const PartiteFSystem& input, std::size_t c) {
        auto w = identity_witness(input, c);
        if (w.mode != ArrowMode::verified)
            throw ProviderFailure("identity provider needs at most one copy or one colour");
        return w;
    };
}

inline WitnessSystem witness_from_power(const prelim::PowerWitness& pw) {
    WitnessSystem w;
    w.host = from_fhypergraph(pw.output);
    for (const auto& lc : pw.lines) {
        w.copies.push_back(lc.phi);
        w.members.push_back(lc.members);
    }
    w.mode = pw.mode;
    w.provider = "prelim";
    w.reason = pw.mode_reason;
    auto shared = std::make_shared<prelim::PowerWitness>(pw);
    w.extractor = [shared](const std::vector<Color>& col) { return shared->extract(col); };
    return w;
}

inline constexpr std::uint64_t max_witness_copies = 100'000;

/// One-class inputs (the pattern is a single vertex, so there are no
/// edges): c(s-1)+1 distinguished points and every s-subset as a copy.
/// Some colour class has s points, so the arrow holds by pigeonhole.
inline WitnessSystem pigeonhole_witness(const PartiteFSystem& input, std::size_t c) {
    if (input.k != 1 || input.w.edge_count() != 0)
        throw ProviderFailure("pigeonhole provider needs a single class without edges");
    if (c == 0) throw RangeError("need at least one colour");
    const std::size_t s = input.p.size();
    const std::size_t big = s == 0 ? 0 : c * (s - 1) + 1;
    if (binomial(big, s) > max_witness_copies)
        throw SizeLimitExceeded("pigeonhole witness would have " + std::to_string(binomial(big, s)) + " copies");
    VertexList marked, rest;
    for (const auto& cp : input.p) marked.push_back(cp[0]);
    for (Vertex v = 0; v < input.w.vertex_count(); ++v)
        if (!std::binary_search(marked.begin(), marked.end(), v)) rest.push_back(v);
    WitnessSystem w;
    w.host.k = 1;
    w.host.class_of.assign(big + rest.size(), 0);
    w.host.w = Hypergraph(input.w.r(), big + rest.size(), {});
    for (Vertex v = 0; v < big; ++v) w.host.p.push_back({v});
    VertexList all(big);
    for (Vertex v = 0; v < big; ++v) all[v] = v;
    for_each_subset<Vertex>(all, s, [&](std::span<const Vertex> pick) {
        VertexList phi(input.w.vertex_count());
        for (std::size_t a = 0; a < s; ++a) phi[marked[a]] = pick[a];
        for (std::size_t b = 0; b < rest.size(); ++b) phi[rest[b]] = static_cast<Vertex>(big + b);
        w.copies.push_back(std::move(phi));
        w.members.emplace_back(pick.begin(), pick.end());
        return true;
    });
    w.mode = ArrowMode::verified;
    w.provider = "pigeonhole";
    w.reason = std::to_string(big) + " points in " + std::to_string(c) + " colours contain " +
               std::to_string(s) + " of one colour";
    w.extractor = [s, big, members = w.members](const std::vector<Color>& col) -> std::optional<std::size_t> {
        std::map<Color, std::vector<std::size_t>> by;
        for (std::size_t v = 0; v < big; ++v) by[col.at(v)].push_back(v);
        for (const auto& [colour, vs] : by)
            if (vs.size() >= s) {
                std::vector<std::size_t> want(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(s));
                for (std::size_t i = 0; i < members.size(); ++i)
                    if (members[i] == want) return i;
            }
        return std::nullopt;
    };
    return w;
}

inline Provider pigeonhole_provider() { return pigeonhole_witness; }

/// The preliminary partite lemma as a provider. The input must be an
/// F-hypergraph for the given Steiner pattern.
inline Provider prelim_provider(SteinerSystem f, prelim::NSource src, prelim::Limits lim = {}) {
    return [f = std::move(f), src, lim](const PartiteFSystem& input, std::size_t c) {
        FHypergraph fh;
        try {
            fh = to_fhypergraph(input, f);
        } catch (const input_error& e) {
            throw ProviderFailure(std::string("restricted system is not an F-hypergraph: ") + e.what());
        }
        return witness_from_power(prelim::build_prelim_witness(fh, c, src, lim));
    };
}

/// Pigeonhole for one-class inputs, the preliminary lemma otherwise.
inline Provider standard_provider(SteinerSystem f, prelim::NSource src, prelim::Limits lim = {}) {
    auto pre = prelim_provider(std::move(f), src, lim);
    return [pre](const PartiteFSystem& input, std::size_t c) {
        return input.k == 1 ? pigeonhole_witness(input, c) : pre(input, c);
    };
}

} // namespace steiner_ramsey::pictures
