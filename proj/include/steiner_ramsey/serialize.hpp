#pragma once

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "errors.hpp"
#include "halesjewett.hpp"
#include "hypergraph.hpp"
#include "negative.hpp"
#include "oracle.hpp"
#include "partite.hpp"
#include "pipelines.hpp"
#include "prelim.hpp"

// The shared text format. Systems are JSON records; class indices are
// written 1-based.
namespace steiner_ramsey::io {

using json = nlohmann::json;

inline constexpr int format_version = 1;

namespace detail {

inline const json& field(const json& j, const char* key) {
    if (!j.is_object()) throw FormatError("expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw FormatError(std::string("missing field '") + key + "'");
    return *it;
}

template <class T>
T get(const json& j, const char* key) {
    try {
        return field(j, key).get<T>();
    } catch (const json::exception& e) {
        throw FormatError(std::string("field '") + key + "': " + e.what());
    }
}

inline void check_version(const json& j) {
    if (get<int>(j, "format_version") != format_version)
        throw FormatError("unsupported format_version " + field(j, "format_version").dump());
}

} // namespace detail

/// FNV-1a over the canonical record of a pattern, as 16 hex digits.
inline std::string pattern_hash(const Hypergraph& h, std::size_t t) {
    std::uint64_t x = 0xcbf29ce484222325ULL;
    auto feed = [&](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            x ^= (v >> (8 * i)) & 0xff;
            x *= 0x100000001b3ULL;
        }
    };
    feed(h.r());
    feed(t);
    feed(h.vertex_count());
    feed(h.edge_count());
    for (const auto& e : h.edges())
        for (Vertex v : e) feed(v);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

inline std::string pattern_hash(const SteinerSystem& s) { return pattern_hash(s.hypergraph(), s.t()); }

// Systems ----------------------------------------------------------------

inline json to_json(const SteinerSystem& s) {
    return {{"format_version", format_version},
            {"r", s.r()},
            {"t", s.t()},
            {"vertex_count", s.vertex_count()},
            {"edges", s.edges()}};
}

inline json to_json(const OrderedSteinerSystem& s) {
    json j = to_json(s.base);
    j["ordered"] = true;
    return j;
}

inline SteinerSystem steiner_from_json(const json& j) {
    detail::check_version(j);
    auto r = detail::get<std::size_t>(j, "r");
    auto t = detail::get<std::size_t>(j, "t");
    auto n = detail::get<std::size_t>(j, "vertex_count");
    auto es = detail::get<std::vector<Edge>>(j, "edges");
    return validate_steiner(r, t, n, std::move(es));
}

inline OrderedSteinerSystem ordered_from_json(const json& j) { return OrderedSteinerSystem{steiner_from_json(j)}; }

inline json classes_to_json(const std::vector<VertexList>& classes) {
    json out = json::array();
    for (std::size_t i = 0; i < classes.size(); ++i) out.push_back({{"class", i + 1}, {"vertices", classes[i]}});
    return out;
}

/// Accepts the {class, vertices} records written above, or a bare list of
/// vertex lists in class order.
inline std::vector<VertexList> classes_from_json(const json& j) {
    if (!j.is_array()) throw FormatError("classes must be a list");
    std::vector<VertexList> out(j.size());
    std::vector<bool> seen(j.size(), false);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& c = j[i];
        if (c.is_array()) {
            out[i] = c.get<VertexList>();
            seen[i] = true;
            continue;
        }
        auto idx = detail::get<std::size_t>(c, "class");
        if (idx < 1 || idx > j.size() || seen[idx - 1])
            throw FormatError("class index " + std::to_string(idx) + " out of range or repeated");
        out[idx - 1] = detail::get<VertexList>(c, "vertices");
        seen[idx - 1] = true;
    }
    return out;
}

inline json to_json(const PartiteSystem& x) {
    json j = to_json(x.base());
    j["classes"] = classes_to_json(x.classes());
    return j;
}

inline PartiteSystem partite_from_json(const json& j) {
    auto base = steiner_from_json(j);
    return make_partite(std::move(base), classes_from_json(detail::field(j, "classes")));
}

// Copies -------------------------------------------------------------------

inline json copy_to_json(const Hypergraph& pattern, std::size_t t, const CopyEmbedding& c) {
    json j{{"pattern_hash", pattern_hash(pattern, t)}, {"image", c.image()}, {"kind", std::string(to_string(c.kind))}};
    if (c.ordered) j["map"] = c.map;
    return j;
}

struct CopyRecord {
    std::string pattern_hash;
    VertexList image;
    CopyKind kind = CopyKind::induced;
    std::optional<VertexList> map;

    friend bool operator==(const CopyRecord&, const CopyRecord&) = default;
};

inline CopyRecord copy_from_json(const json& j) {
    CopyRecord c;
    c.pattern_hash = detail::get<std::string>(j, "pattern_hash");
    c.image = detail::get<VertexList>(j, "image");
    if (!std::is_sorted(c.image.begin(), c.image.end())) throw FormatError("copy image must be sorted");
    c.kind = parse_copy_kind(detail::get<std::string>(j, "kind"));
    if (j.contains("map")) c.map = detail::get<VertexList>(j, "map");
    return c;
}

inline json to_json(const FHypergraph& fh) {
    json j = to_json(fh.x);
    j["pattern"] = to_json(fh.f);
    const std::string h = pattern_hash(fh.f);
    json q = json::array();
    // map[i] is the vertex in class i + 1.
    for (const auto& c : fh.q) {
        VertexList img = c;
        std::sort(img.begin(), img.end());
        q.push_back({{"pattern_hash", h}, {"image", img}, {"kind", "crossing"}, {"map", c}});
    }
    j["q"] = std::move(q);
    return j;
}

inline FHypergraph fhypergraph_from_json(const json& j) {
    auto f = steiner_from_json(detail::field(j, "pattern"));
    auto x = partite_from_json(j);
    std::vector<CrossingCopy> q;
    const std::string h = pattern_hash(f);
    for (const auto& c : detail::field(j, "q")) {
        if (detail::get<std::string>(c, "pattern_hash") != h) throw FormatError("copy of a different pattern");
        q.push_back(detail::get<CrossingCopy>(c, "map"));
    }
    return validate_fhypergraph(std::move(f), std::move(x), std::move(q));
}

// Certificates -------------------------------------------------------------

inline json to_json(const hj::Certificate& c) {
    json j{{"q", c.q}, {"c", c.c}, {"n", c.n}, {"verdict", hj::to_string(c.verdict)}};
    if (c.counterexample) j["counterexample"] = *c.counterexample;
    return j;
}

inline hj::Certificate hj_certificate_from_json(const json& j) {
    hj::Certificate c;
    c.q = detail::get<std::size_t>(j, "q");
    c.c = detail::get<std::size_t>(j, "c");
    c.n = detail::get<std::size_t>(j, "n");
    auto v = detail::get<std::string>(j, "verdict");
    if (v == "arrow") c.verdict = hj::Verdict::arrow;
    else if (v == "counterexample") c.verdict = hj::Verdict::counterexample;
    else if (v == "undecided") c.verdict = hj::Verdict::undecided;
    else throw FormatError("unknown verdict '" + v + "'");
    if (j.contains("counterexample")) c.counterexample = detail::get<std::vector<hj::Color>>(j, "counterexample");
    return c;
}

inline json to_json(const oracle::Verdict& v) {
    json j{{"holds", v.holds}, {"nodes", v.nodes}};
    if (v.counterexample) j["counterexample"] = *v.counterexample;
    return j;
}

inline oracle::Verdict verdict_from_json(const json& j) {
    oracle::Verdict v;
    v.holds = detail::get<bool>(j, "holds");
    v.nodes = detail::get<std::uint64_t>(j, "nodes");
    if (j.contains("counterexample")) v.counterexample = detail::get<std::vector<oracle::Color>>(j, "counterexample");
    return v;
}

inline json to_json(const negative::Colouring& c) {
    json rows = json::array();
    for (std::size_t i = 0; i < c.copies.size(); ++i)
        rows.push_back({{c.ordered ? "map" : "image", c.copies[i]}, {"colour", c.colour[i] == negative::red ? "red" : "blue"}});
    return {{"ordered", c.ordered}, {"copies", rows}};
}

inline negative::Colouring colouring_from_json(const json& j) {
    negative::Colouring c;
    c.ordered = detail::get<bool>(j, "ordered");
    for (const auto& row : detail::field(j, "copies")) {
        c.copies.push_back(detail::get<VertexList>(row, c.ordered ? "map" : "image"));
        auto col = detail::get<std::string>(row, "colour");
        if (col != "red" && col != "blue") throw FormatError("colour must be red or blue");
        c.colour.push_back(col == "red" ? negative::red : negative::blue);
    }
    if (!std::is_sorted(c.copies.begin(), c.copies.end())) throw FormatError("copies must be sorted");
    return c;
}

inline json to_json(const negative::NoMonoResult& r) {
    json j{{"no_monochromatic_target", r.holds}, {"targets_checked", r.targets_checked}};
    if (r.monochromatic) j["monochromatic_target"] = *r.monochromatic;
    return j;
}

inline json to_json(const negative::OrderingCertificate& c) {
    return {{"g", to_json(c.g)},
            {"kind", negative::to_string(c.kind)},
            {"seed", c.seed},
            {"host_edges", c.host},
            {"versions", c.versions},
            {"orderings_checked", c.orderings_checked}};
}

inline json to_json(const negative::IncompleteColouring& c) {
    return {{"pattern", to_json(c.f)},
            {"uncovered", c.x},
            {"first", {{"system", to_json(c.first.system)}, {"root", c.first.root}}},
            {"second", {{"system", to_json(c.second.system)}, {"root", c.second.root}}},
            {"target", to_json(c.g)},
            {"colouring", to_json(c.colouring)}};
}

inline json to_json(const negative::NonhomogeneousColouring& c) {
    json j{{"pattern", to_json(c.f)},
           {"first_edges", c.first.edges()},
           {"second_edges", c.second.edges()},
           {"k", to_json(c.k)},
           {"g_reason", c.g_reason},
           {"colouring", to_json(c.colouring)}};
    if (c.g) j["g"] = to_json(*c.g);
    return j;
}

// Witness manifests --------------------------------------------------------

inline json to_json(const prelim::PowerWitness& w) {
    json lines = json::array();
    for (const auto& lc : w.lines) lines.push_back({{"word", lc.line.word}, {"phi", lc.phi}, {"members", lc.members}});
    return {{"input", to_json(w.input)},
            {"n", w.n},
            {"mode", prelim::to_string(w.mode)},
            {"mode_reason", w.mode_reason},
            {"output", to_json(w.output)},
            {"lines", std::move(lines)}};
}

inline json step_manifest(const pictures::Construction& cons) {
    json steps = json::array();
    for (const auto& st : cons.steps)
        steps.push_back({{"rho", st.rho + 1},
                         {"provider", st.witness.provider},
                         {"mode", prelim::to_string(st.witness.mode)},
                         {"witness_hash", pattern_hash(st.witness.host.w, cons.input.t)},
                         {"witness_vertices", st.witness.host.w.vertex_count()},
                         {"witness_copies", st.witness.copies.size()}});
    return steps;
}

inline json to_json(const pipelines::CleanWitness& w) {
    return {{"input", to_json(w.input)},
            {"output", to_json(w.output)},
            {"copies", w.copies},
            {"members", w.members},
            {"prelim_n", w.base ? w.base->n : 0},
            {"class_size", w.class_size},
            {"steps", step_manifest(w.construction)},
            {"mode", prelim::to_string(w.mode)},
            {"reason", w.reason}};
}

inline json to_json(const pipelines::TheoremWitness& w) {
    return {{"pattern", to_json(w.f)},
            {"target", to_json(w.x)},
            {"c", w.c},
            {"base", {{"strategy", pipelines::to_string(w.base.strategy)},
                      {"reason", w.base.reason},
                      {"host", to_json(validate_steiner(w.base.input.y, w.f.base.t()))},
                      {"host_hash", pattern_hash(w.base.input.y, w.f.base.t())}}},
            {"steps", step_manifest(w.construction)},
            {"z", to_json(w.z)},
            {"z_hash", pattern_hash(w.z.base)},
            {"pattern_copies", w.f_copies.size()},
            {"mode", prelim::to_string(w.mode)}};
}

} // namespace steiner_ramsey::io
