// steiner-ramsey: command-line front end. Every command prints one JSON
// record. Exit codes: 0 success, 1 property refuted (the record carries the
// certificate), 2 infeasible at this scale, 3 bad input, 4 internal error.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "steiner_ramsey.hpp"

using namespace steiner_ramsey;
using io::json;

namespace {

enum Exit { ok = 0, refuted = 1, infeasible = 2, bad_input = 3, internal = 4 };

struct Globals {
    std::uint64_t seed = 1;
    std::size_t max_vertices = prelim::default_max_vertices;
    std::size_t max_copies = oracle::default_max_copies;
    std::size_t jobs = 1;
    std::string out;
};

Globals g;

// Rough per-vertex footprint of a picture, used to turn the memory cap into
// a vertex cap.
constexpr std::size_t bytes_per_vertex = 4096;

std::size_t parse_bytes(const std::string& s) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    double mult = 1;
    if (pos < s.size()) {
        switch (std::toupper(static_cast<unsigned char>(s[pos]))) {
        case 'K': mult = 1024.0; break;
        case 'M': mult = 1024.0 * 1024; break;
        case 'G': mult = 1024.0 * 1024 * 1024; break;
        default: throw FormatError("bad size '" + s + "'");
        }
    }
    return static_cast<std::size_t>(v * mult);
}

std::size_t vertex_cap() {
    std::size_t cap = g.max_vertices;
    if (const char* m = std::getenv("STEINER_RAMSEY_MAX_MEM"))
        cap = std::min(cap, std::max<std::size_t>(1, parse_bytes(m) / bytes_per_vertex));
    return cap;
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw FormatError(path + ": " + e.what());
    }
}

/// A system from a file or from "fixture:NAME[:a[:b[:c]]]". K and DISCRETE
/// take n (then r, t); EDGE and VERTEX take r, t.
SteinerSystem load_system(const std::string& spec) {
    if (spec.rfind("fixture:", 0) == 0) {
        std::vector<std::string> parts;
        std::stringstream ss(spec.substr(8));
        for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
        if (parts.empty()) throw FormatError("empty fixture name");
        std::vector<std::size_t> a;
        for (std::size_t i = 1; i < parts.size(); ++i) a.push_back(std::stoul(parts[i]));
        const auto& name = parts[0];
        auto at = [&](std::size_t i, std::size_t d) { return i < a.size() ? a[i] : d; };
        if (name == "EDGE" || name == "VERTEX") return fixtures::by_name(name, 4, at(0, 2), at(1, 2));
        return fixtures::by_name(name, at(0, 4), at(1, 2), at(2, 2));
    }
    return io::steiner_from_json(read_json(spec));
}

OrderedSteinerSystem load_ordered(const std::string& spec) { return OrderedSteinerSystem{load_system(spec)}; }

int emit(const json& j, int code = ok) {
    const std::string text = j.dump(2);
    if (g.out.empty()) {
        std::cout << text << '\n';
    } else {
        std::ofstream f(g.out);
        if (!f) throw FormatError("cannot write '" + g.out + "'");
        f << text << '\n';
    }
    return code;
}

VertexList parse_map(const std::string& s) {
    VertexList m;
    std::stringstream ss(s);
    for (std::string p; std::getline(ss, p, ',');) m.push_back(static_cast<Vertex>(std::stoul(p)));
    return m;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steiner systems, partite constructions and Ramsey certificates"};
    app.require_subcommand(1);
    app.add_option("--seed", g.seed, "seed for every randomised search");
    app.add_option("--max-vertices", g.max_vertices, "vertex cap for constructed systems");
    app.add_option("--max-copies", g.max_copies, "copy cap for exhaustive colouring checks");
    app.add_option("--jobs", g.jobs, "worker threads for the colouring oracle")->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "write the record here instead of stdout");

    std::function<int()> action;

    // check
    auto* check = app.add_subcommand("check", "evaluate a predicate on a system");
    std::string pred, in_file, pattern_file, map_text;
    std::optional<std::size_t> r_over, t_over;
    check->add_option("predicate", pred, "steiner, homogeneous, complete or strong")
        ->required()
        ->check(CLI::IsMember({"steiner", "homogeneous", "complete", "strong"}));
    check->add_option("--in", in_file, "system file or fixture:NAME")->required();
    check->add_option("--r", r_over, "override r");
    check->add_option("--t", t_over, "override t");
    check->add_option("--pattern", pattern_file, "pattern for 'strong'");
    check->add_option("--map", map_text, "comma-separated pattern -> host map for 'strong'");
    check->callback([&] {
        action = [&] {
            if (pred == "steiner") {
                // Read raw so that violations are reported rather than rejected.
                json j = in_file.rfind("fixture:", 0) == 0 ? io::to_json(load_system(in_file)) : read_json(in_file);
                const auto r = r_over.value_or(j.at("r").get<std::size_t>());
                const auto t = t_over.value_or(j.at("t").get<std::size_t>());
                Hypergraph h(r, j.at("vertex_count").get<std::size_t>(), j.at("edges").get<std::vector<Edge>>());
                if (t < 2 || t > r) throw RangeError("need 2 <= t <= r");
                auto bad = find_steiner_violation(h, t);
                json rec{{"predicate", pred}, {"holds", !bad}};
                if (bad) rec["violation"] = {bad->first, bad->second};
                return emit(rec, bad ? refuted : ok);
            }
            auto s = load_system(in_file);
            if (r_over || t_over)
                s = validate_steiner(r_over.value_or(s.r()), t_over.value_or(s.t()), s.vertex_count(), s.edges());
            bool holds = false;
            if (pred == "homogeneous") holds = is_homogeneous(s);
            if (pred == "complete") holds = is_complete(s);
            if (pred == "strong") {
                if (pattern_file.empty() || map_text.empty()) throw FormatError("'strong' needs --pattern and --map");
                auto p = load_system(pattern_file);
                holds = is_strongly_induced(p, s, parse_map(map_text));
            }
            return emit({{"predicate", pred}, {"holds", holds}}, holds ? ok : refuted);
        };
    });

    // status
    auto* status = app.add_subcommand("status", "F-Ramsey status of a class");
    std::string cls;
    status->add_option("--class", cls, "S, S<, S^ or S^< (also S◀, S◀<)")->required();
    status->add_option("--pattern", pattern_file, "pattern system")->required();
    status->callback([&] {
        action = [&] {
            auto tag = parse_class_tag(cls);
            auto st = f_ramsey_status(tag, load_system(pattern_file));
            json rec{{"class", name(tag)}, {"has_property", st.has_property}, {"reason", st.reason}};
            if (!st.clause.empty()) rec["clause"] = st.clause;
            return emit(rec);
        };
    });

    // copies
    auto* copies = app.add_subcommand("copies", "list copies of a pattern in a host");
    std::string host_file, kind_text = "induced";
    bool ordered_flag = false;
    copies->add_option("--pattern", pattern_file)->required();
    copies->add_option("--host", host_file)->required();
    copies->add_option("--kind", kind_text)->check(CLI::IsMember({"induced", "strong", "semi"}));
    copies->add_flag("--ordered", ordered_flag);
    copies->callback([&] {
        action = [&] {
            auto p = load_system(pattern_file), h = load_system(host_file);
            json list = json::array();
            for (const auto& c : enumerate_copies(p, h, parse_copy_kind(kind_text), ordered_flag))
                list.push_back(io::copy_to_json(p.hypergraph(), p.t(), c));
            return emit({{"count", list.size()}, {"copies", list}});
        };
    });

    // hj
    auto* hjc = app.add_subcommand("hj", "Hales-Jewett numbers and cube certificates");
    hjc->require_subcommand(1);
    std::size_t q = 2, c = 2, n = 1, bound = 3;
    auto* hj_search = hjc->add_subcommand("search", "least n up to a bound");
    hj_search->add_option("--q", q)->required();
    hj_search->add_option("--c", c)->required();
    hj_search->add_option("--bound", bound)->required();
    hj_search->callback([&] {
        action = [&] {
            auto found = hj::hj_number(q, c, bound);
            json rec{{"q", q}, {"c", c}, {"bound", bound}};
            if (!found) {
                rec["verdict"] = "undecided";
                return emit(rec, infeasible);
            }
            rec["n"] = *found;
            rec["certificate"] = io::to_json(hj::decide_cube(q, c, *found));
            if (*found > 1) rec["below"] = io::to_json(hj::decide_cube(q, c, *found - 1));
            return emit(rec);
        };
    });
    auto* hj_verify = hjc->add_subcommand("verify", "decide one cube");
    hj_verify->add_option("--q", q)->required();
    hj_verify->add_option("--c", c)->required();
    hj_verify->add_option("--n", n)->required();
    hj_verify->callback([&] {
        action = [&] {
            auto cert = hj::decide_cube(q, c, n);
            const int code = cert.verdict == hj::Verdict::arrow ? ok
                             : cert.verdict == hj::Verdict::counterexample ? refuted
                                                                           : infeasible;
            return emit(io::to_json(cert), code);
        };
    });

    // construct
    auto* construct = app.add_subcommand("construct", "run a construction and print its manifest");
    construct->require_subcommand(1);
    std::size_t colours = 2;
    std::optional<std::size_t> fixed_n, assume_n;
    auto* c_prelim = construct->add_subcommand("prelim", "power construction over a Hales-Jewett cube");
    c_prelim->add_option("--in", in_file, "F-hypergraph file")->required();
    c_prelim->add_option("--c", colours);
    c_prelim->add_option("--n", fixed_n, "use this dimension and verify the arrow");
    c_prelim->add_option("--assume-n", assume_n, "use this dimension without an arrow guarantee");
    c_prelim->callback([&] {
        action = [&] {
            auto x = io::fhypergraph_from_json(read_json(in_file));
            auto src = fixed_n ? prelim::NSource::fixed(*fixed_n)
                       : assume_n ? prelim::NSource::assume(*assume_n)
                                  : prelim::NSource::decided();
            auto w = prelim::build_prelim_witness(x, colours, src, {vertex_cap(), g.max_copies});
            return emit(io::to_json(w));
        };
    });
    auto* c_clean = construct->add_subcommand("clean", "clean partite witness");
    c_clean->add_option("--in", in_file, "F-hypergraph file")->required();
    c_clean->add_option("--c", colours);
    c_clean->callback([&] {
        action = [&] {
            auto x = io::fhypergraph_from_json(read_json(in_file));
            pipelines::CleanOptions opt;
            opt.lim = {vertex_cap(), g.max_copies};
            opt.max_vertices = vertex_cap();
            return emit(io::to_json(pipelines::build_clean_witness(x, colours, opt)));
        };
    });
    auto* c_theorem = construct->add_subcommand("theorem", "strongly induced ordered Ramsey host");
    std::string target_file, strategy = "classical";
    c_theorem->add_option("--pattern", pattern_file)->required();
    c_theorem->add_option("--target", target_file)->required();
    c_theorem->add_option("--c", colours);
    c_theorem->add_option("--strategy", strategy)->check(CLI::IsMember({"classical", "exhaustive", "user"}));
    c_theorem->add_option("--host", host_file, "base host for --strategy user");
    c_theorem->callback([&] {
        action = [&] {
            pipelines::TheoremOptions opt;
            opt.strategy = pipelines::parse_strategy(strategy);
            opt.base.max_copies = g.max_copies;
            opt.base.jobs = g.jobs;
            if (!host_file.empty()) opt.base.host = load_system(host_file).hypergraph();
            opt.max_vertices = vertex_cap();
            opt.clean.max_vertices = vertex_cap();
            opt.clean.lim = {vertex_cap(), g.max_copies};
            auto w = pipelines::build_theorem_witness(load_ordered(pattern_file), load_ordered(target_file), colours, opt);
            return emit(io::to_json(w));
        };
    });

    // verify
    auto* verify = app.add_subcommand("verify", "exhaustive checks");
    verify->require_subcommand(1);
    std::string kind_target = "induced", kind_pattern = "induced";
    auto* v_arrows = verify->add_subcommand("arrows", "decide host -> (target)^pattern_c");
    v_arrows->add_option("--host", host_file)->required();
    v_arrows->add_option("--target", target_file)->required();
    v_arrows->add_option("--pattern", pattern_file)->required();
    v_arrows->add_option("--c", colours);
    v_arrows->add_option("--kind-target", kind_target)->check(CLI::IsMember({"induced", "strong", "semi"}));
    v_arrows->add_option("--kind-pattern", kind_pattern)->check(CLI::IsMember({"induced", "strong", "semi"}));
    v_arrows->add_flag("--ordered", ordered_flag);
    v_arrows->callback([&] {
        action = [&] {
            auto v = oracle::arrows(load_system(host_file), load_system(target_file), load_system(pattern_file), colours,
                                    parse_copy_kind(kind_target), parse_copy_kind(kind_pattern), ordered_flag,
                                    {g.max_copies, g.jobs});
            return emit(io::to_json(v), v.holds ? ok : refuted);
        };
    });

    // negative
    auto* neg = app.add_subcommand("negative", "colourings that block the Ramsey property");
    neg->require_subcommand(1);
    auto* demo = neg->add_subcommand("demo", "build and check a blocking colouring");
    std::string mode;
    bool require_g = false;
    demo->add_option("--mode", mode)->required()->check(CLI::IsMember({"incomplete", "nonhomogeneous", "ordering"}));
    demo->add_option("--pattern", pattern_file)->required();
    demo->add_option("--host", host_file);
    demo->add_flag("--require-g", require_g, "fail when no ordering-property host is found");
    demo->callback([&] {
        action = [&] {
            negative::OrderingOptions oo;
            oo.seed = g.seed;
            if (mode == "ordering") {
                auto cert = negative::ordering_property_search(load_system(pattern_file), oo);
                return emit(io::to_json(cert));
            }
            if (host_file.empty()) throw FormatError("--host is required for this mode");
            if (mode == "incomplete") {
                auto h = load_ordered(host_file);
                auto col = negative::incomplete_coloring_ordered(load_ordered(pattern_file), h);
                auto v = negative::verify_incomplete(col, h);
                json rec = io::to_json(col);
                rec["check"] = io::to_json(v);
                return emit(rec, v.holds ? ok : refuted);
            }
            negative::NonhomogeneousOptions no;
            no.require_g = require_g;
            no.search = oo;
            auto h = load_system(host_file);
            auto col = negative::nonhomogeneous_coloring(load_system(pattern_file), h, no);
            auto v = negative::verify_k_bichromatic(col, h);
            json rec = io::to_json(col);
            rec["k_check"] = io::to_json(v);
            bool good = v.holds;
            if (col.g) {
                auto full = negative::verify_nonhomogeneous(col, h);
                rec["check"] = io::to_json(full);
                good = good && full.holds;
            }
            return emit(rec, good ? ok : refuted);
        };
    });

    // fixture
    auto* fix = app.add_subcommand("fixture", "print a named system");
    std::string fixture_spec;
    fix->add_option("name", fixture_spec, "NAME[:a[:b[:c]]], one of " + [] {
        std::string s;
        for (const auto& nm : fixtures::names()) s += (s.empty() ? "" : ", ") + nm;
        return s;
    }())->required();
    fix->callback([&] { action = [&] { return emit(io::to_json(load_system("fixture:" + fixture_spec))); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : bad_input;
    }
    try {
        return action();
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const refutation_error& e) {
        std::cerr << "refuted: " << e.what() << '\n';
        return refuted;
    } catch (const infeasible_error& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return infeasible;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return internal;
    }
}
