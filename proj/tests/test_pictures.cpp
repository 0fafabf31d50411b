#include <gtest/gtest.h>

#include <random>
#include <set>

#include "brute.hpp"
#include "steiner_ramsey/fixtures.hpp"
#include "steiner_ramsey/pictures.hpp"

using namespace steiner_ramsey;
using namespace steiner_ramsey::pictures;
namespace fx = steiner_ramsey::fixtures;

namespace {

ArrowInput make_input(const SteinerSystem& f, std::size_t vx, std::vector<Edge> xe, std::vector<VertexList> q,
                      std::size_t vy, std::vector<Edge> ye, std::vector<VertexList> r,
                      std::vector<VertexList> tau, std::size_t c) {
    ArrowInput in;
    in.f = f.hypergraph();
    in.t = f.t();
    in.x = Hypergraph(f.r(), vx, std::move(xe));
    in.q = std::move(q);
    in.y = Hypergraph(f.r(), vy, std::move(ye));
    in.r = std::move(r);
    in.tau = std::move(tau);
    in.c = c;
    in = validate_arrow_input(std::move(in));
    auto p = brute::arrow_holds(in.r.size(), in.q_members, static_cast<std::uint32_t>(c));
    in.mode = p ? ArrowMode::verified : ArrowMode::assumed;
    return in;
}

// F = vertex, X = vertex, Y = two points.
ArrowInput fixture_a() { return make_input(fx::vertex(), 1, {}, {{0}}, 2, {}, {{0}, {1}}, {{0}, {1}}, 2); }

// F = vertex, X = {a, b} with Q = {a}, Y = three points, R = {0}.
ArrowInput fixture_b() {
    return make_input(fx::vertex(), 2, {}, {{0}}, 3, {}, {{0}}, {{0, 1}, {0, 2}}, 2);
}

// As (b) with R = {0, 1} and three witness copies.
ArrowInput fixture_c() {
    return make_input(fx::vertex(), 2, {}, {{0}}, 3, {}, {{0}, {1}}, {{0, 2}, {1, 2}, {1, 0}}, 2);
}

// F = K2, X = edge plus an isolated vertex, Y = edge plus two isolated vertices.
ArrowInput fixture_d() {
    return make_input(fx::edge(2, 2), 3, {{0, 1}}, {{0, 1}}, 4, {{0, 1}}, {{0, 1}}, {{0, 1, 2}, {0, 1, 3}}, 2);
}

// F = vertex, Q = both vertices of X, Y = three points: pigeonhole.
ArrowInput fixture_pigeon() {
    return make_input(fx::vertex(), 2, {}, {{0}, {1}}, 3, {}, {{0}, {1}, {2}}, {{0, 1}, {0, 2}, {1, 2}}, 2);
}

Provider prelim_for(const ArrowInput& in) {
    return standard_provider(validate_steiner(in.f, in.t), prelim::NSource::decided());
}

// Extraction succeeds and is monochromatic for every colouring (or for a
// sample when there are too many copies).
void check_all_colourings(const Construction& cons, std::size_t sample = 4000) {
    const auto n = cons.final_picture().s.size();
    auto check = [&](const std::vector<Color>& col) {
        auto ex = extract_monochromatic(cons, col);
        ASSERT_TRUE(ex.monochromatic);
        std::set<Color> seen;
        for (const auto& qc : cons.input.q) {
            auto img = compose(ex.copy.mu, qc);
            auto idx = cons.final_picture().s_index(img);
            ASSERT_NE(idx, Picture::npos);
            seen.insert(col[idx]);
        }
        EXPECT_LE(seen.size(), 1u);
    };
    if (n <= 16) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<Color> col(n);
            for (std::size_t i = 0; i < n; ++i) col[i] = (mask >> i) & 1;
            check(col);
        }
    } else {
        std::mt19937 rng(11);
        std::bernoulli_distribution coin;
        for (std::size_t s = 0; s < sample; ++s) {
            std::vector<Color> col(n);
            for (auto& x : col) x = coin(rng);
            check(col);
        }
    }
}

} // namespace

TEST(ArrowInput, RejectsCopiesOutsideR) {
    EXPECT_THROW(make_input(fx::vertex(), 2, {}, {{0}}, 3, {}, {{0}}, {{1, 2}}, 2), WitnessShapeMismatch);
    EXPECT_THROW(make_input(fx::edge(2, 2), 2, {{0, 1}}, {{0, 1}}, 2, {}, {}, {{0, 1}}, 2), WitnessShapeMismatch);
}

TEST(PictureZero, DisjointGoodCopies) {
    auto in = fixture_c();
    auto pi = build_picture_zero(in);
    EXPECT_EQ(pi.vertex_count(), 3u * 2u);
    EXPECT_FALSE(validate_picture(in, pi));
    std::set<Vertex> used;
    for (const auto& g : pi.good)
        for (Vertex v : g.mu) EXPECT_TRUE(used.insert(v).second);
    // Each good copy projects onto its witness copy.
    for (const auto& g : pi.good)
        for (Vertex v = 0; v < g.mu.size(); ++v) EXPECT_EQ(pi.class_of[g.mu[v]], in.tau[g.y][v]);
    EXPECT_EQ(pi.s.size(), 3u);
}

TEST(PictureZero, SingleWitnessCopy) {
    auto in = make_input(fx::edge(2, 2), 3, {{0, 1}}, {{0, 1}}, 3, {{0, 1}}, {{0, 1}}, {{0, 1, 2}}, 1);
    auto pi = build_picture_zero(in);
    EXPECT_EQ(pi.z.edges(), (std::vector<Edge>{{0, 1}}));
    EXPECT_EQ(pi.class_of, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Validation, CatchesBrokenPictures) {
    auto in = fixture_d();
    auto pi = build_picture_zero(in);
    ASSERT_FALSE(validate_picture(in, pi));
    auto bad = pi;
    bad.class_of[2] = 3;  // the isolated vertex of copy 0 moves class
    EXPECT_TRUE(validate_picture(in, bad));
    bad = pi;
    bad.s.pop_back();
    EXPECT_TRUE(validate_picture(in, bad));
    bad = pi;
    bad.z = Hypergraph(2, pi.vertex_count(), {{0, 1}, {3, 4}, {2, 5}});
    EXPECT_TRUE(validate_picture(in, bad));
}

TEST(Restrict, SpineAndEmptyCases) {
    auto in = fixture_d();
    auto pi = build_picture_zero(in);
    auto rs = restrict_to_rho(in, pi, 0);
    EXPECT_EQ(rs.local.k, 2u);
    EXPECT_EQ(rs.local.w.vertex_count(), 4u);
    EXPECT_EQ(rs.local.w.edge_count(), 2u);
    EXPECT_EQ(rs.local.p.size(), 2u);
    EXPECT_THROW(restrict_to_rho(in, pi, 1), IndexOutOfRange);

    auto b = fixture_b();
    auto pb = build_picture_zero(b);
    auto rb = restrict_to_rho(b, pb, 0);
    EXPECT_EQ(rb.local.w.edge_count(), 0u);
    EXPECT_EQ(rb.local.p.size(), 2u);
}

TEST(Amalgamate, IdentityCopyKeepsThePicture) {
    auto in = fixture_d();
    auto pi = build_picture_zero(in);
    auto rs = restrict_to_rho(in, pi, 0);
    auto w = identity_witness(rs.local, 1);
    auto am = amalgamate(in, pi, rs, w);
    EXPECT_EQ(am.picture.vertex_count(), pi.vertex_count());
    EXPECT_EQ(am.picture.s.size(), pi.s.size());
    EXPECT_EQ(am.picture.good.size(), pi.good.size());
    EXPECT_FALSE(validate_picture(in, am.picture));
    EXPECT_FALSE(check_part_ind(in, pi, am.picture, am.canonical[0]));
    EXPECT_TRUE(are_isomorphic(am.picture.z, pi.z, false));
}

TEST(Amalgamate, OffSpineClassesMultiply) {
    auto in = fixture_c();
    auto pi = build_picture_zero(in);
    auto rs = restrict_to_rho(in, pi, 1);
    auto w = prelim_provider(fx::vertex(), prelim::NSource::decided())(rs.local, 2);
    ASSERT_GE(w.copies.size(), 2u);
    auto am = amalgamate(in, pi, rs, w);
    auto old_cls = pi.classes(), new_cls = am.picture.classes();
    for (std::size_t j = 0; j < in.m(); ++j)
        if (j != in.r[1][0]) EXPECT_EQ(new_cls[j].size(), old_cls[j].size() * w.copies.size());
    // Two canonical copies share exactly what their witness copies share.
    for (std::size_t a = 0; a < w.copies.size(); ++a)
        for (std::size_t b = a + 1; b < w.copies.size(); ++b) {
            std::set<Vertex> ca(am.canonical[a].begin(), am.canonical[a].end());
            std::set<Vertex> shared;
            for (Vertex v : am.canonical[b])
                if (ca.count(v)) shared.insert(v);
            std::set<Vertex> wa(w.copies[a].begin(), w.copies[a].end()), ws;
            for (Vertex v : w.copies[b])
                if (wa.count(v)) ws.insert(am.host_to_new[v]);
            EXPECT_EQ(shared, ws);
        }
}

TEST(Amalgamate, RejectsForeignWitness) {
    auto in = fixture_d();
    auto pi = build_picture_zero(in);
    auto rs = restrict_to_rho(in, pi, 0);
    auto w = identity_witness(rs.local, 1);
    w.copies[0][0] = w.copies[0][1];
    EXPECT_THROW(amalgamate(in, pi, rs, w), WitnessShapeMismatch);
}

TEST(Pigeonhole, WitnessArrows) {
    PartiteFSystem in{Hypergraph(2, 4, {}), {0, 0, 0, 0}, 1, {{0}, {2}, {3}}};
    for (std::size_t c = 1; c <= 3; ++c) {
        auto w = pigeonhole_witness(in, c);
        check_witness_shape(in, w, Hypergraph(2, 1, {}));
        auto p = w.arrow_problem(c);
        EXPECT_EQ(p.family_size, c * 2 + 1);
        EXPECT_TRUE(brute::arrow_holds(p.family_size, p.targets, static_cast<std::uint32_t>(c)));
    }
    EXPECT_THROW(pigeonhole_witness(PartiteFSystem{Hypergraph(2, 2, {{0, 1}}), {0, 1}, 2, {}}, 2), ProviderFailure);
}

TEST(Construction, EmptyRGivesPictureZero) {
    auto in = make_input(fx::edge(2, 2), 1, {}, {}, 2, {}, {}, {{0}, {1}}, 2);
    auto cons = run_partite_construction(in, identity_provider());
    EXPECT_EQ(cons.pictures.size(), 1u);
    auto ex = extract_monochromatic(cons, {});
    EXPECT_TRUE(ex.monochromatic);
}

TEST(Construction, OneColourUsesIdentity) {
    auto in = fixture_c();
    in.c = 1;
    auto cons = run_partite_construction(in, identity_provider());
    EXPECT_EQ(cons.pictures.size(), in.r.size() + 1);
    EXPECT_EQ(cons.final_picture().vertex_count(), cons.pictures[0].vertex_count());
    auto ex = extract_monochromatic(cons, std::vector<Color>(cons.final_picture().s.size(), 0));
    EXPECT_TRUE(ex.monochromatic);
}

TEST(Construction, IdentityProviderFailsWhenColoursMatter) {
    EXPECT_THROW(run_partite_construction(fixture_c(), identity_provider()), ProviderFailure);
}

TEST(Construction, AcceptanceFixtures) {
    for (auto make : {fixture_a, fixture_b, fixture_c, fixture_d}) {
        auto in = make();
        ASSERT_EQ(in.mode, ArrowMode::verified);
        std::size_t steps = 0;
        RunOptions opt;
        opt.on_step = [&](const Construction& c, std::size_t rho) {
            ++steps;
            EXPECT_EQ(c.steps.back().rho, rho);
        };
        auto cons = run_partite_construction(in, prelim_for(in), opt);
        EXPECT_EQ(steps, in.r.size());
        EXPECT_TRUE(cons.all_verified());
        for (const auto& pi : cons.pictures) EXPECT_FALSE(validate_picture(cons.input, pi));
        for (std::size_t s = 0; s < cons.steps.size(); ++s)
            for (const auto& phi : cons.steps[s].canonical)
                EXPECT_FALSE(check_part_ind(cons.input, cons.pictures[s], cons.pictures[s + 1], phi));
        check_all_colourings(cons);
        auto p = good_copy_problem(cons.input, cons.final_picture(), 2);
        if (p.family_size <= oracle::default_max_copies) EXPECT_TRUE(oracle::decide(p).holds);
    }
}

TEST(Construction, GrowthHitsTheVertexCap) {
    // Three copies of a two-point X over three points: the second step
    // already needs hundreds of witness copies.
    auto in = fixture_pigeon();
    EXPECT_THROW(run_partite_construction(in, prelim_for(in)), SizeLimitExceeded);
    RunOptions opt;
    opt.max_vertices = 10;
    EXPECT_THROW(run_partite_construction(fixture_c(), prelim_for(fixture_c()), opt), SizeLimitExceeded);
}

TEST(Extraction, ConstantColouring) {
    auto in = fixture_d();
    auto cons = run_partite_construction(in, prelim_for(in));
    auto ex = extract_monochromatic(cons, std::vector<Color>(cons.final_picture().s.size(), 1));
    EXPECT_TRUE(ex.monochromatic);
    EXPECT_TRUE(std::binary_search(cons.final_picture().good.begin(), cons.final_picture().good.end(), ex.copy));
    EXPECT_THROW(extract_monochromatic(cons, {0}), DimensionMismatch);
}

TEST(Extraction, AssumedArrowReportsRefutation) {
    // Two copies in X but only one witness copy: the base arrow is false.
    auto in = make_input(fx::vertex(), 2, {}, {{0}, {1}}, 2, {}, {{0}, {1}}, {{0, 1}}, 2);
    ASSERT_EQ(in.mode, ArrowMode::assumed);
    auto cons = run_partite_construction(in, prelim_for(in));
    std::vector<Color> col(cons.final_picture().s.size(), 0);
    // Colour by class: copies over the first member of R red, the rest blue.
    for (std::size_t i = 0; i < col.size(); ++i) col[i] = cons.final_picture().s[i].rho == 0 ? 0 : 1;
    EXPECT_THROW(extract_monochromatic(cons, col), ArrowRefuted);
}
