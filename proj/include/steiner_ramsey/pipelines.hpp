#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "core.hpp"
#include "errors.hpp"
#include "hypergraph.hpp"
#include "oracle.hpp"
#include "partite.hpp"
#include "pictures.hpp"
#include "prelim.hpp"

// The clean partite lemma and the end-to-end construction for strongly
// induced ordered Steiner systems.
namespace steiner_ramsey::pipelines {

using pictures::ArrowInput;
using pictures::Color;
using pictures::Construction;
using pictures::Picture;
using prelim::ArrowMode;
using steiner_ramsey::to_string;

struct IntersectionViolation {
    std::size_t a = 0, b = 0;  // indices of the two copies
    VertexList x;
};

/// Distinct copies of (X,Q) may share a t-set only inside a member of Q on
/// both sides. `copies[i]` maps V(X) into the host.
inline std::optional<IntersectionViolation> intersection_violation(const std::vector<CrossingCopy>& q,
                                                                   const std::vector<VertexList>& copies,
                                                                   std::size_t t) {
    std::vector<VertexList> images;
    std::vector<std::vector<VertexList>> covers;
    for (const auto& phi : copies) {
        VertexList img = phi;
        std::sort(img.begin(), img.end());
        images.push_back(std::move(img));
        std::vector<VertexList> cv;
        for (const auto& qc : q) {
            auto m = pictures::compose(phi, qc);
            std::sort(m.begin(), m.end());
            cv.push_back(std::move(m));
        }
        covers.push_back(std::move(cv));
    }
    auto covered = [&](std::size_t i, std::span<const Vertex> x) {
        return std::any_of(covers[i].begin(), covers[i].end(),
                           [&](const VertexList& c) { return is_sorted_subset<Vertex>(x, c); });
    };
    for (std::size_t a = 0; a < copies.size(); ++a)
        for (std::size_t b = a + 1; b < copies.size(); ++b) {
            VertexList common;
            std::set_intersection(images[a].begin(), images[a].end(), images[b].begin(), images[b].end(),
                                  std::back_inserter(common));
            std::optional<IntersectionViolation> bad;
            for_each_subset<Vertex>(common, t, [&](std::span<const Vertex> x) {
                if (covered(a, x) && covered(b, x)) return true;
                bad = IntersectionViolation{a, b, VertexList(x.begin(), x.end())};
                return false;
            });
            if (bad) return bad;
        }
    return std::nullopt;
}

/// First failure of "Z is Steiner and every distinguished copy is strongly
/// induced in it", if any.
inline std::optional<std::string> steiner_and_strong(const ArrowInput& in, const Picture& pi) {
    if (auto bad = find_steiner_violation(pi.z, in.t))
        return "edges " + to_string(bad->first) + " and " + to_string(bad->second) + " share t vertices";
    for (const auto& sc : pi.s)
        if (!is_strongly_induced(in.f, pi.z, sc.map, in.t))
            return "copy " + to_string(sc.map) + " is not strongly induced";
    return std::nullopt;
}

// Clean partite lemma -----------------------------------------------------

struct CleanOptions {
    prelim::NSource src = prelim::NSource::decided();
    prelim::Limits lim;
    std::size_t max_vertices = prelim::default_max_vertices;
    bool check_steps = true;
};

struct CleanWitness {
    FHypergraph input;
    FHypergraph output;
    std::vector<VertexList> copies;                   // V(X) -> V(Z)
    std::vector<std::vector<std::size_t>> members;    // indices into output.q, in input.q order
    std::shared_ptr<const prelim::PowerWitness> base;
    std::size_t class_size = 0;                       // |V^i(Y)| after padding
    Construction construction;
    std::vector<std::size_t> s_to_q;                  // final picture copy -> output.q index
    ArrowMode mode = ArrowMode::assumed;
    std::string reason;

    /// A copy whose members share a colour under `col` (a colouring of
    /// output.q), or nothing when an assumed arrow fails.
    std::optional<std::size_t> extract(const std::vector<Color>& col) const {
        if (col.size() != output.q.size())
            throw DimensionMismatch("colouring has " + std::to_string(col.size()) + " entries for " +
                                    std::to_string(output.q.size()) + " copies");
        std::vector<Color> gamma(s_to_q.size());
        for (std::size_t i = 0; i < s_to_q.size(); ++i) gamma[i] = col[s_to_q[i]];
        try {
            auto ex = pictures::extract_monochromatic(construction, gamma);
            const auto& good = construction.final_picture().good;
            auto it = std::lower_bound(good.begin(), good.end(), ex.copy);
            return static_cast<std::size_t>(it - good.begin());
        } catch (const refutation_error&) {
            return std::nullopt;
        }
    }
};

inline std::optional<IntersectionViolation> verify_intersection_property(const CleanWitness& w) {
    return intersection_violation(w.input.q, w.copies, w.input.f.t());
}

/// The arrow problem of a witness: colour output.q, targets are the copies.
inline oracle::ArrowProblem clean_arrow_problem(const CleanWitness& w, std::size_t c) {
    oracle::ArrowProblem p;
    p.family_size = w.output.q.size();
    p.c = c;
    for (auto m : w.members) {
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
        p.targets.push_back(std::move(m));
    }
    return p;
}

inline CleanWitness build_clean_witness(const FHypergraph& x, std::size_t c, const CleanOptions& opt = {}) {
    CleanWitness out;
    out.input = x;
    auto pw = std::make_shared<const prelim::PowerWitness>(prelim::build_prelim_witness(x, c, opt.src, opt.lim));
    out.base = pw;
    const std::size_t k = x.x.k();
    const auto& yc = pw->output.x.classes();
    std::size_t s = 1;
    for (const auto& cl : yc) s = std::max(s, cl.size());
    out.class_size = s;
    // Pad every class to s vertices and number class i as [i*s, (i+1)*s).
    VertexList relabel(pw->output.x.vertex_count());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t a = 0; a < yc[i].size(); ++a) relabel[yc[i][a]] = static_cast<Vertex>(i * s + a);

    ArrowInput in;
    in.f = x.f.hypergraph();
    in.t = x.f.t();
    in.x = x.x.hypergraph();
    in.q = x.q;
    in.y = pw->output.x.hypergraph().relabeled(relabel, k * s);
    for (const auto& rc : pw->output.q) in.r.push_back(pictures::compose(relabel, rc));
    for (const auto& lc : pw->lines) in.tau.push_back(pictures::compose(relabel, lc.phi));
    in.c = c;
    in.mode = pw->mode;
    try {
        in = pictures::validate_arrow_input(std::move(in));
    } catch (const input_error& e) {
        throw construction_bug(std::string("power system is not a valid arrow input: ") + e.what());
    }
    std::map<VertexList, std::size_t> r_pos, tau_pos;
    for (std::size_t i = 0; i < in.r.size(); ++i) r_pos[in.r[i]] = i;
    for (std::size_t i = 0; i < in.tau.size(); ++i) tau_pos[in.tau[i]] = i;
    std::vector<std::size_t> r_of(pw->output.q.size()), tau_of(pw->lines.size());
    for (std::size_t j = 0; j < r_of.size(); ++j) r_of[j] = r_pos.at(pictures::compose(relabel, pw->output.q[j]));
    for (std::size_t l = 0; l < tau_of.size(); ++l) tau_of[l] = tau_pos.at(pictures::compose(relabel, pw->lines[l].phi));
    in.base_extractor = [pw, r_of, tau_of](const std::vector<Color>& phi) -> std::optional<std::size_t> {
        std::vector<Color> col(r_of.size());
        for (std::size_t j = 0; j < r_of.size(); ++j) col[j] = phi.at(r_of[j]);
        auto l = pw->extract(col);
        if (!l) return std::nullopt;
        return tau_of.at(*l);
    };

    pictures::RunOptions ro;
    ro.validate = opt.check_steps;
    ro.max_vertices = opt.max_vertices;
    if (opt.check_steps)
        ro.on_step = [](const Construction& cons, std::size_t rho) {
            if (auto bad = steiner_and_strong(cons.input, cons.final_picture()))
                throw construction_bug("clean lemma, picture " + std::to_string(rho + 1) + ": " + *bad);
        };
    auto provider = pictures::standard_provider(x.f, opt.src, opt.lim);
    out.construction = pictures::run_partite_construction(std::move(in), provider, ro);
    const auto& cons = out.construction;
    const auto& fin = cons.final_picture();
    if (auto bad = steiner_and_strong(cons.input, cons.pictures.front()))
        throw construction_bug("clean lemma, picture zero: " + *bad);

    if (opt.check_steps)
        for (std::size_t p = 0; p < cons.pictures.size(); ++p) {
            std::vector<VertexList> maps;
            for (const auto& g : cons.pictures[p].good) maps.push_back(g.mu);
            if (auto bad = intersection_violation(x.q, maps, x.f.t()))
                throw construction_bug("clean lemma, picture " + std::to_string(p) +
                                       ": good copies share " + to_string(bad->x) + " outside their copies of F");
        }

    // Regroup: Y-classes [i*s, (i+1)*s) become class i.
    std::vector<std::size_t> class_of(fin.vertex_count());
    for (Vertex v = 0; v < class_of.size(); ++v) class_of[v] = fin.class_of[v] / s;
    std::vector<CrossingCopy> sq;
    for (const auto& sc : fin.s) sq.push_back(sc.map);
    try {
        out.output = validate_fhypergraph(x.f, PartiteSystem(validate_steiner(fin.z, x.f.t()), class_of, k), sq);
    } catch (const input_error& e) {
        throw construction_bug(std::string("regrouped picture is not an F-hypergraph: ") + e.what());
    }
    for (const auto& sc : fin.s) {
        auto it = std::lower_bound(out.output.q.begin(), out.output.q.end(), sc.map);
        out.s_to_q.push_back(static_cast<std::size_t>(it - out.output.q.begin()));
    }
    for (const auto& g : fin.good) {
        if (!fh_strongly_induced(x, out.output, g.mu))
            throw construction_bug("good copy " + to_string(g.mu) + " is not strongly induced");
        std::vector<std::size_t> mem;
        for (const auto& qc : x.q) {
            auto img = pictures::compose(g.mu, qc);
            auto it = std::lower_bound(out.output.q.begin(), out.output.q.end(), img);
            mem.push_back(static_cast<std::size_t>(it - out.output.q.begin()));
        }
        out.copies.push_back(g.mu);
        out.members.push_back(std::move(mem));
    }
    if (auto bad = verify_intersection_property(out))
        throw construction_bug("clean witness copies " + std::to_string(bad->a) + " and " +
                               std::to_string(bad->b) + " share " + to_string(bad->x));
    out.mode = cons.all_verified() ? ArrowMode::verified : ArrowMode::assumed;
    out.reason = out.mode == ArrowMode::verified ? "every arrow in the construction is verified"
                                                 : "some arrow in the construction is assumed";
    return out;
}

inline pictures::WitnessSystem witness_from_clean(const CleanWitness& cw) {
    pictures::WitnessSystem w;
    w.host = pictures::from_fhypergraph(cw.output);
    w.copies = cw.copies;
    w.members = cw.members;
    w.mode = cw.mode;
    w.provider = "clean";
    w.reason = cw.reason;
    auto shared = std::make_shared<const CleanWitness>(cw);
    w.extractor = [shared](const std::vector<Color>& col) { return shared->extract(col); };
    return w;
}

inline pictures::Provider clean_provider(SteinerSystem f, CleanOptions opt = {}) {
    return [f = std::move(f), opt](const pictures::PartiteFSystem& input, std::size_t c) {
        FHypergraph fh;
        try {
            fh = pictures::to_fhypergraph(input, f);
        } catch (const input_error& e) {
            throw ProviderFailure(std::string("restricted system is not an F-hypergraph: ") + e.what());
        }
        return witness_from_clean(build_clean_witness(fh, c, opt));
    };
}

// Base ordered Ramsey witness ----------------------------------------------

enum class Strategy { classical, exhaustive, user };

inline std::string to_string(Strategy s) {
    switch (s) {
    case Strategy::classical: return "classical";
    case Strategy::exhaustive: return "exhaustive-search";
    case Strategy::user: return "user-supplied";
    }
    return "?";
}

inline Strategy parse_strategy(std::string_view s) {
    if (s == "classical") return Strategy::classical;
    if (s == "exhaustive" || s == "exhaustive-search") return Strategy::exhaustive;
    if (s == "user" || s == "user-supplied") return Strategy::user;
    throw FormatError("unknown strategy '" + std::string(s) + "'");
}

struct BaseOptions {
    std::size_t max_copies = oracle::default_max_copies;
    std::size_t max_host_vertices = 6;  // exhaustive search
    std::optional<Hypergraph> host;     // user-supplied
    std::size_t jobs = 1;
};

struct BaseWitness {
    ArrowInput input;
    Strategy strategy = Strategy::classical;
    std::string reason;
};

/// (Y, R, witness copies) for an ordered host Y. R is every ordered copy of
/// F in Y, the witness copies are every ordered induced copy of X.
inline ArrowInput ordered_arrow_input(const SteinerSystem& f, const SteinerSystem& x, const Hypergraph& y,
                                      std::size_t c) {
    ArrowInput in;
    in.f = f.hypergraph();
    in.t = f.t();
    in.x = x.hypergraph();
    for (const auto& cp : enumerate_copies(f.hypergraph(), x.hypergraph(), f.t(), CopyKind::strong, true))
        in.q.push_back(cp.map);
    in.y = y;
    for (const auto& cp : enumerate_copies(f.hypergraph(), y, f.t(), CopyKind::induced, true)) in.r.push_back(cp.map);
    for (const auto& cp : enumerate_copies(x.hypergraph(), y, f.t(), CopyKind::induced, true))
        in.tau.push_back(cp.map);
    in.c = c;
    return pictures::validate_arrow_input(std::move(in));
}

inline oracle::ArrowProblem base_arrow_problem(const ArrowInput& in) {
    oracle::ArrowProblem p;
    p.family_size = in.r.size();
    p.c = in.c;
    for (auto m : in.q_members) {
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
        p.targets.push_back(std::move(m));
    }
    return p;
}

inline BaseWitness base_ramsey_witness(const OrderedSteinerSystem& f_, const OrderedSteinerSystem& x_, std::size_t c,
                                       Strategy strategy, const BaseOptions& opt = {}) {
    const auto& f = f_.base;
    const auto& x = x_.base;
    if (f.r() != x.r() || f.t() != x.t()) throw ParameterMismatch("pattern and target differ in (r,t)");
    if (c == 0) throw RangeError("need at least one colour");
    BaseWitness out;
    out.strategy = strategy;
    auto verify = [&](ArrowInput in) -> std::optional<ArrowInput> {
        auto p = base_arrow_problem(in);
        if (p.family_size > opt.max_copies)
            throw SizeLimitExceeded("host has " + std::to_string(p.family_size) + " copies of the pattern");
        if (!oracle::decide(p, {opt.max_copies, opt.jobs}).holds) return std::nullopt;
        in.mode = ArrowMode::verified;
        return in;
    };
    const std::size_t vx = x.vertex_count();
    switch (strategy) {
    case Strategy::classical: {
        Hypergraph y;
        if (c == 1 || are_isomorphic(f.hypergraph(), x.hypergraph(), true)) {
            y = x.hypergraph();
            out.reason = c == 1 ? "one colour: the target itself" : "pattern equals target";
        } else if (f.vertex_count() == 1) {
            const std::size_t n = c * (vx - 1) + 1;
            if (x.edge_count() == 0) {
                y = Hypergraph(x.r(), n, {});
            } else if (x.edge_count() == binomial(vx, x.r())) {
                std::vector<Edge> es;
                VertexList all(n);
                for (Vertex v = 0; v < n; ++v) all[v] = v;
                for_each_subset<Vertex>(all, x.r(), [&](std::span<const Vertex> e) {
                    es.emplace_back(e.begin(), e.end());
                    return true;
                });
                y = Hypergraph(x.r(), n, std::move(es));
            } else {
                throw StrategyInfeasible("no classical host for vertex colourings of this target");
            }
            out.reason = "pigeonhole on " + std::to_string(n) + " vertices";
        } else {
            throw StrategyInfeasible("classical hosts cover c = 1, a single-vertex pattern, or pattern = target");
        }
        auto in = ordered_arrow_input(f, x, y, c);
        in.mode = ArrowMode::verified;
        // Small cases are re-checked by the oracle; the rest rest on the argument above.
        auto p = base_arrow_problem(in);
        if (p.family_size <= opt.max_copies && !oracle::decide(p, {opt.max_copies, opt.jobs}).holds)
            throw construction_bug("classical host fails its arrow");
        out.input = std::move(in);
        return out;
    }
    case Strategy::exhaustive: {
        if (f.r() != 2 || f.t() != 2) throw StrategyInfeasible("exhaustive search covers graphs only (r = t = 2)");
        for (std::size_t m = vx; m <= opt.max_host_vertices; ++m) {
            std::vector<Edge> pairs;
            for (Vertex a = 0; a < m; ++a)
                for (Vertex b = a + 1; b < m; ++b) pairs.push_back({a, b});
            const std::uint64_t masks = std::uint64_t{1} << pairs.size();
            // Dense candidates first.
            for (std::uint64_t inv = 0; inv < masks; ++inv) {
                const std::uint64_t mask = masks - 1 - inv;
                std::vector<Edge> es;
                for (std::size_t i = 0; i < pairs.size(); ++i)
                    if (mask >> i & 1) es.push_back(pairs[i]);
                Hypergraph y(2, m, std::move(es));
                auto in = ordered_arrow_input(f, x, y, c);
                if (in.r.size() > opt.max_copies || in.tau.empty()) continue;
                if (auto ok = verify(std::move(in))) {
                    out.input = std::move(*ok);
                    out.reason = "smallest host found on " + std::to_string(m) + " vertices";
                    return out;
                }
            }
        }
        throw StrategyInfeasible("no host with at most " + std::to_string(opt.max_host_vertices) + " vertices");
    }
    case Strategy::user: {
        if (!opt.host) throw StrategyInfeasible("no host supplied");
        if (opt.host->r() != f.r()) throw ParameterMismatch("host uniformity differs from the pattern");
        auto ok = verify(ordered_arrow_input(f, x, *opt.host, c));
        if (!ok) throw ArrowRefuted("supplied host does not arrow the target");
        out.input = std::move(*ok);
        out.reason = "supplied host verified by exhaustive colouring";
        return out;
    }
    }
    throw RangeError("unknown strategy");
}

// Theorem pipeline --------------------------------------------------------

/// Vertices renumbered class by class, construction order inside a class.
/// Returns the ordered system and the map old id -> new id.
inline std::pair<OrderedSteinerSystem, VertexList> order_final(const Picture& pi, std::size_t t) {
    VertexList order(pi.vertex_count());
    for (Vertex v = 0; v < order.size(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return pi.class_of[a] < pi.class_of[b]; });
    VertexList to_new(order.size());
    for (Vertex i = 0; i < order.size(); ++i) to_new[order[i]] = i;
    return {OrderedSteinerSystem{validate_steiner(pi.z.relabeled(to_new, to_new.size()), t)}, to_new};
}

struct TheoremOptions {
    Strategy strategy = Strategy::classical;
    BaseOptions base;
    CleanOptions clean;
    std::size_t max_vertices = prelim::default_max_vertices;
};

struct StepReport {
    std::size_t rho = 0;
    std::size_t vertices = 0;
    std::size_t witness_copies = 0;
    std::string provider;
    ArrowMode mode = ArrowMode::assumed;
};

struct TheoremWitness {
    OrderedSteinerSystem f;
    OrderedSteinerSystem x;
    std::size_t c = 2;
    BaseWitness base;
    Construction construction;
    std::vector<StepReport> steps;
    OrderedSteinerSystem z;
    VertexList to_z;                    // final picture vertex -> vertex of z
    std::vector<VertexList> f_copies;   // strongly induced ordered copies of f in z
    ArrowMode mode = ArrowMode::assumed;

    /// A strongly induced ordered copy of x in z whose copies of f share a
    /// colour under `col` (a colouring of f_copies).
    std::optional<VertexList> extract(const std::vector<Color>& col) const {
        if (col.size() != f_copies.size())
            throw DimensionMismatch("colouring has " + std::to_string(col.size()) + " entries for " +
                                    std::to_string(f_copies.size()) + " copies");
        std::map<VertexList, std::size_t> idx;
        for (std::size_t i = 0; i < f_copies.size(); ++i) idx[f_copies[i]] = i;
        const auto& fin = construction.final_picture();
        std::vector<Color> gamma(fin.s.size());
        for (std::size_t i = 0; i < fin.s.size(); ++i) gamma[i] = col[idx.at(pictures::compose(to_z, fin.s[i].map))];
        try {
            auto ex = pictures::extract_monochromatic(construction, gamma);
            return pictures::compose(to_z, ex.copy.mu);
        } catch (const refutation_error&) {
            return std::nullopt;
        }
    }
};

/// The strong arrow z ->(x)^f_c over ordered copies, as a colouring problem.
inline oracle::CopyProblem strong_arrow_problem(const OrderedSteinerSystem& z, const OrderedSteinerSystem& x,
                                                const OrderedSteinerSystem& f, std::size_t c) {
    return oracle::build_copy_problem(z.base.hypergraph(), x.base.hypergraph(), f.base.hypergraph(), z.base.t(), c,
                                      CopyKind::strong, CopyKind::strong, true);
}

namespace detail {

// The per-step claims of the theorem construction; throws on failure.
inline void check_theorem_step(const Construction& cons, std::size_t rho) {
    const auto& in = cons.input;
    const std::size_t t = in.t;
    const auto& prev = cons.pictures[cons.pictures.size() - 2];
    const auto& cur = cons.final_picture();
    const auto& st = cons.steps.back();
    auto fail = [&](const std::string& what) {
        throw construction_bug("theorem construction, picture " + std::to_string(rho + 1) + ": " + what);
    };
    if (auto bad = steiner_and_strong(in, cur)) fail(*bad);
    for (const auto& g : cur.good)
        if (!is_strongly_induced(in.x, cur.z, g.mu, t)) fail("good copy " + to_string(g.mu) + " is not strongly induced");
    std::vector<VertexList> images;
    for (const auto& phi : st.canonical) {
        if (!is_strongly_induced(prev.z, cur.z, phi, t)) fail("a canonical copy is not strongly induced");
        VertexList img = phi;
        std::sort(img.begin(), img.end());
        images.push_back(std::move(img));
    }
    // Edges of the witness host, in new coordinates.
    const auto& w = st.witness.host.w;
    std::vector<Edge> spine_edges;
    for (const auto& e : w.edges()) {
        Edge ne = pictures::compose(st.host_to_new, e);
        std::sort(ne.begin(), ne.end());
        spine_edges.push_back(std::move(ne));
    }
    std::vector<std::size_t> new_to_host(cur.vertex_count(), Picture::npos);
    for (Vertex v = 0; v < st.host_to_new.size(); ++v) new_to_host[st.host_to_new[v]] = v;
    // Every spine edge meeting a canonical copy in t vertices lies in it.
    for (const auto& e : spine_edges)
        for (std::size_t a = 0; a < images.size(); ++a) {
            VertexList meet;
            std::set_intersection(e.begin(), e.end(), images[a].begin(), images[a].end(), std::back_inserter(meet));
            if (meet.size() >= t && meet.size() != e.size()) fail("spine edge " + to_string(e) + " leaves a canonical copy");
        }
    // Distinct canonical copies share t-sets only inside copies of F that
    // are strongly induced in the witness host.
    auto covered = [&](std::size_t a, std::span<const Vertex> x) {
        for (const auto& sc : prev.s) {
            auto m = pictures::compose(st.canonical[a], sc.map);
            VertexList sm = m;
            std::sort(sm.begin(), sm.end());
            if (!is_sorted_subset<Vertex>(x, sm)) continue;
            VertexList local;
            bool on_spine = true;
            for (Vertex v : m) {
                if (new_to_host[v] == Picture::npos) {
                    on_spine = false;
                    break;
                }
                local.push_back(static_cast<Vertex>(new_to_host[v]));
            }
            if (on_spine && is_strongly_induced(in.f, w, local, t)) return true;
        }
        return false;
    };
    for (std::size_t a = 0; a < images.size(); ++a)
        for (std::size_t b = a + 1; b < images.size(); ++b) {
            VertexList common;
            std::set_intersection(images[a].begin(), images[a].end(), images[b].begin(), images[b].end(),
                                  std::back_inserter(common));
            for_each_subset<Vertex>(common, t, [&](std::span<const Vertex> x) {
                if (!covered(a, x) || !covered(b, x))
                    fail("canonical copies " + std::to_string(a) + " and " + std::to_string(b) + " share " +
                         to_string(x) + " outside strongly induced copies of F");
                return true;
            });
        }
}

} // namespace detail

inline TheoremWitness build_theorem_witness(const OrderedSteinerSystem& f, const OrderedSteinerSystem& x, std::size_t c,
                                            const TheoremOptions& opt = {}) {
    TheoremWitness out;
    out.f = f;
    out.x = x;
    out.c = c;
    out.base = base_ramsey_witness(f, x, c, opt.strategy, opt.base);
    pictures::RunOptions ro;
    ro.max_vertices = opt.max_vertices;
    ro.on_step = [&out](const Construction& cons, std::size_t rho) {
        detail::check_theorem_step(cons, rho);
        const auto& st = cons.steps.back();
        out.steps.push_back({rho, cons.final_picture().vertex_count(), st.witness.copies.size(), st.witness.provider,
                             st.witness.mode});
    };
    auto clean = opt.clean;
    clean.max_vertices = std::min(clean.max_vertices, opt.max_vertices);
    out.construction = pictures::run_partite_construction(out.base.input, clean_provider(f.base, clean), ro);
    const auto& cons = out.construction;
    if (auto bad = steiner_and_strong(cons.input, cons.pictures.front()))
        throw construction_bug("theorem construction, picture zero: " + *bad);
    auto [z, to_z] = order_final(cons.final_picture(), f.base.t());
    out.z = std::move(z);
    out.to_z = std::move(to_z);
    for (const auto& cp : enumerate_copies(f.base, out.z.base, CopyKind::strong, true)) out.f_copies.push_back(cp.map);
    std::sort(out.f_copies.begin(), out.f_copies.end());
    out.mode = cons.all_verified() ? ArrowMode::verified : ArrowMode::assumed;
    return out;
}

} // namespace steiner_ramsey::pipelines
