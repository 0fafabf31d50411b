#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "brute.hpp"
#include "steiner_ramsey/core.hpp"
#include "steiner_ramsey/fixtures.hpp"

using namespace steiner_ramsey;
namespace fx = steiner_ramsey::fixtures;

namespace {

brute::Edges plain(const SteinerSystem& s) {
    brute::Edges out;
    for (const auto& e : s.edges()) out.push_back(e);
    return out;
}

std::set<VertexList> images(const std::vector<CopyEmbedding>& cs) {
    std::set<VertexList> out;
    for (const auto& c : cs) out.insert(c.image());
    return out;
}

} // namespace

TEST(Validate, H5IsSteiner) {
    auto h = fx::h5();
    EXPECT_EQ(h.vertex_count(), 5u);
    EXPECT_EQ(h.edge_count(), 2u);
}

TEST(Validate, EdgelessIsSteiner) {
    EXPECT_NO_THROW(validate_steiner(3, 2, 9, {}));
    EXPECT_NO_THROW(validate_steiner(2, 2, 0, {}));
}

TEST(Validate, SharedPairRejected) {
    try {
        validate_steiner(3, 2, 5, {{0, 1, 2}, {1, 2, 3}});
        FAIL();
    } catch (const SteinerViolation& e) {
        EXPECT_NE(std::string(e.what()).find("{0,1,2}"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("{1,2,3}"), std::string::npos);
    }
}

TEST(Validate, ArityAndRange) {
    EXPECT_THROW(validate_steiner(3, 2, 5, {{0, 1}}), EdgeArityError);
    EXPECT_THROW(validate_steiner(3, 2, 5, {{0, 1, 7}}), EdgeArityError);
    EXPECT_THROW(validate_steiner(3, 2, 5, {{0, 1, 1}}), EdgeArityError);
    EXPECT_THROW(validate_steiner(3, 4, 5, {}), RangeError);
    EXPECT_THROW(validate_steiner(3, 1, 5, {}), RangeError);
}

TEST(Induced, Examples) {
    auto h = fx::h5();
    VertexList id3{0, 1, 2}, id4{0, 1, 2, 3};
    EXPECT_TRUE(is_induced(fx::g3(), h, id3));
    EXPECT_FALSE(is_induced(fx::discrete(3, 3, 2), h, id3));
    EXPECT_TRUE(is_induced(fx::g4(), h, id4));
}

TEST(Induced, RejectsBadMaps) {
    auto h = fx::h5();
    VertexList dup{0, 0, 1};
    EXPECT_THROW(is_induced(fx::g3(), h, dup), NonInjectiveMap);
    VertexList far{0, 1, 9};
    EXPECT_THROW(is_induced(fx::g3(), h, far), RangeError);
}

TEST(StronglyInduced, Examples) {
    auto h = fx::h5();
    VertexList id3{0, 1, 2}, id4{0, 1, 2, 3};
    EXPECT_TRUE(is_strongly_induced(fx::g3(), h, id3));
    EXPECT_FALSE(is_strongly_induced(fx::g4(), h, id4));
}

TEST(StronglyInduced, CollapsesWhenRIsT) {
    auto k4 = fx::complete_graph(4);
    auto p3 = fx::p3();
    for (const auto& c : enumerate_copies(fx::discrete(2), k4, CopyKind::induced, false))
        ADD_FAILURE() << "K4 has no independent pair: " << to_string(c.image());
    auto ind = enumerate_copies(fx::edge(2, 2), k4, CopyKind::induced, false);
    auto str = enumerate_copies(fx::edge(2, 2), k4, CopyKind::strong, false);
    EXPECT_EQ(images(ind), images(str));
    EXPECT_EQ(images(enumerate_copies(p3, k4, CopyKind::induced, false)).size(), 0u);
}

TEST(EnumerateCopies, Examples) {
    auto h = fx::h5();
    auto edges = enumerate_copies(fx::g3(), h, CopyKind::induced, false);
    ASSERT_EQ(edges.size(), 2u);
    EXPECT_EQ(edges[0].image(), (VertexList{0, 1, 2}));
    EXPECT_EQ(edges[1].image(), (VertexList{2, 3, 4}));
    EXPECT_EQ(enumerate_copies(fx::vertex(3, 2), h, CopyKind::induced, false).size(), 5u);
    EXPECT_EQ(enumerate_copies(fx::edge(2, 2), fx::complete_graph(4), CopyKind::induced, false)
                  .size(),
              6u);
}

TEST(EnumerateCopies, ParameterMismatch) {
    EXPECT_THROW(enumerate_copies(fx::edge(2, 2), fx::h5(), CopyKind::induced, false),
                 ParameterMismatch);
    auto s33 = validate_steiner(3, 3, 3, {{0, 1, 2}});
    EXPECT_THROW(enumerate_copies(s33, fx::h5(), CopyKind::induced, false), ParameterMismatch);
}

TEST(EnumerateCopies, CanonicalMapIsLexLeast) {
    // P3 has the automorphism swapping its ends; the canonical map keeps
    // the smaller end first.
    auto host = validate_steiner(2, 2, 4, {{1, 3}, {3, 2}});
    auto cs = enumerate_copies(fx::p3(), host, CopyKind::induced, false);
    ASSERT_EQ(cs.size(), 1u);
    EXPECT_EQ(cs[0].map, (VertexList{1, 3, 2}));
    EXPECT_TRUE(enumerate_copies(fx::p3(), host, CopyKind::induced, true).empty());
}

TEST(EnumerateCopies, RootRangeSplitsWork) {
    auto host = fx::complete_graph(6);
    auto all = enumerate_copies(fx::edge(2, 2).hypergraph(), host.hypergraph(), 2,
                                CopyKind::induced, true);
    std::size_t total = 0;
    for (Vertex lo = 0; lo < 6; lo += 2)
        total += enumerate_copies(fx::edge(2, 2).hypergraph(), host.hypergraph(), 2,
                                  CopyKind::induced, true, {lo, lo + 2})
                     .size();
    EXPECT_EQ(total, all.size());
}

TEST(Isomorphism, Examples) {
    auto h = fx::h5();
    auto id = are_isomorphic(h, h, false);
    ASSERT_TRUE(id);
    EXPECT_EQ(*id, (VertexList{0, 1, 2, 3, 4}));
    // Dense relabelling v -> (v + 2) mod 5.
    VertexList shift{2, 3, 4, 0, 1};
    auto moved = validate_steiner(h.hypergraph().relabeled(shift, 5), 2);
    auto iso = are_isomorphic(h, moved, false);
    ASSERT_TRUE(iso);
    EXPECT_TRUE(is_induced(h, moved, *iso));
    EXPECT_FALSE(are_isomorphic(h, fx::discrete(5, 3, 2), false));
    EXPECT_FALSE(are_isomorphic(h, moved, true));
    EXPECT_THROW(are_isomorphic(fx::discrete(11), fx::discrete(11), false), SizeLimitExceeded);
    EXPECT_TRUE(are_isomorphic(fx::discrete(11), fx::discrete(11), true));
}

TEST(Homogeneous, Examples) {
    EXPECT_TRUE(is_homogeneous(fx::edge(3, 2)));
    EXPECT_TRUE(is_homogeneous(fx::edge(2, 2)));
    EXPECT_FALSE(is_homogeneous(fx::fano()));
    EXPECT_FALSE(is_homogeneous(fx::p3()));
    EXPECT_TRUE(is_homogeneous(fx::complete_graph(5)));
    EXPECT_TRUE(is_homogeneous(fx::discrete(4)));
}

TEST(Homogeneous, FanoAgreesWithPermutationOracle) {
    auto f = fx::fano();
    EXPECT_EQ(is_homogeneous(f), brute::homogeneous(7, plain(f)));
}

TEST(Complete, Examples) {
    EXPECT_TRUE(is_complete(fx::fano()));
    EXPECT_TRUE(is_complete(fx::edge(3, 2)));
    EXPECT_FALSE(is_complete(fx::discrete(2)));
    EXPECT_TRUE(is_complete(fx::discrete(1)));
    EXPECT_TRUE(is_complete(fx::discrete(0, 3, 2)));
    EXPECT_FALSE(is_complete(fx::h5()));
    EXPECT_EQ(is_complete(fx::fano()), brute::complete(7, plain(fx::fano()), 2));
}

struct ClassifierRow {
    const char* cls;
    SteinerSystem f;
    bool expected;
    const char* clause;
};

TEST(Classifier, AgreesWithHandTable) {
    std::vector<ClassifierRow> rows = {
        // Ordered strong: always Ramsey.
        {"S^<", fx::fano(), true, ""},
        {"S^<", fx::p3(), true, ""},
        {"S^<", fx::h5(), true, ""},
        // Unordered weak, r > t: an edge or fewer than t vertices.
        {"S", fx::edge(3, 2), true, ""},
        {"S", fx::discrete(1, 3, 2), true, ""},
        {"S", fx::discrete(2, 3, 2), false, "ii"},
        {"S", fx::fano(), false, "i"},
        // Unordered weak, r = t: homogeneous.
        {"S", fx::complete_graph(4), true, ""},
        {"S", fx::discrete(3), true, ""},
        {"S", fx::p3(), false, "i"},
        // Ordered weak: r = t or complete.
        {"S<", fx::fano(), true, ""},
        {"S<", fx::p3(), true, ""},
        {"S<", fx::h5(), false, "ii"},
        {"S<", fx::discrete(2, 3, 2), false, "ii"},
        // Unordered strong: edge, discrete, or a clique when r = t.
        {"S^", fx::fano(), false, "i"},
        {"S^", fx::edge(3, 2), true, ""},
        {"S^", fx::discrete(3, 3, 2), true, ""},
        {"S^", fx::complete_graph(4), true, ""},
        {"S^", fx::p3(), false, "i"},
    };
    for (const auto& row : rows) {
        auto st = f_ramsey_status(parse_class_tag(row.cls), row.f);
        EXPECT_EQ(st.has_property, row.expected) << row.cls << " " << st.reason;
        EXPECT_EQ(st.clause, row.clause) << row.cls;
    }
}

TEST(Classifier, Names) {
    EXPECT_EQ(name({false, false}), "S");
    EXPECT_EQ(name({true, false}), "S<");
    EXPECT_EQ(name({false, true}), "S◀");
    EXPECT_EQ(name({true, true}), "S◀<");
    for (auto c : all_class_tags()) EXPECT_EQ(parse_class_tag(name(c)), c);
    EXPECT_THROW(parse_class_tag("T"), FormatError);
}

// Random systems on at most 8 vertices, checked against the naive oracles.
class RandomSystems : public ::testing::TestWithParam<int> {};

TEST_P(RandomSystems, PredicatesMatchOracles) {
    std::mt19937 rng(1000 + GetParam());
    std::uniform_int_distribution<int> rdist(2, 3);
    const std::size_t r = rdist(rng);
    const std::size_t t = std::uniform_int_distribution<std::size_t>(2, r)(rng);
    const std::uint32_t hn = std::uniform_int_distribution<std::uint32_t>(r, 8)(rng);
    const std::uint32_t pn = std::uniform_int_distribution<std::uint32_t>(1, std::min<std::uint32_t>(hn, 4))(rng);
    auto he = brute::random_steiner(rng, hn, r, t);
    auto pe = brute::random_steiner(rng, pn, r, t);
    ASSERT_TRUE(brute::steiner(he, t));
    auto host = validate_steiner(r, t, hn, std::vector<Edge>(he.begin(), he.end()));
    auto pat = validate_steiner(r, t, pn, std::vector<Edge>(pe.begin(), pe.end()));

    EXPECT_EQ(is_homogeneous(pat), brute::homogeneous(pn, pe));
    EXPECT_EQ(is_complete(host), brute::complete(hn, he, t));

    for (bool ordered : {false, true}) {
        auto ind = enumerate_copies(pat, host, CopyKind::induced, ordered);
        auto str = enumerate_copies(pat, host, CopyKind::strong, ordered);
        EXPECT_EQ(images(ind), brute::copy_images(pn, pe, hn, he, r, t, false, ordered));
        EXPECT_EQ(images(str), brute::copy_images(pn, pe, hn, he, r, t, true, ordered));
        // Output order is lexicographic on images and one embedding per image.
        for (std::size_t i = 1; i < ind.size(); ++i) EXPECT_LT(ind[i - 1].image(), ind[i].image());
        for (const auto& c : str) {
            EXPECT_TRUE(is_strongly_induced(pat, host, c.map));
            EXPECT_TRUE(is_induced(pat, host, c.map));
            if (ordered) EXPECT_TRUE(is_monotone(c.map));
        }
        if (r == t) EXPECT_EQ(images(ind), images(str));
    }
    auto uo = enumerate_copies(pat, host, CopyKind::induced, false).size();
    auto o = enumerate_copies(pat, host, CopyKind::induced, true).size();
    EXPECT_LE(o, uo);

    // Isomorphism against a random relabelling.
    VertexList perm(hn);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    auto moved = validate_steiner(host.hypergraph().relabeled(perm, hn), t);
    auto iso = are_isomorphic(host, moved, false);
    ASSERT_TRUE(iso);
    EXPECT_TRUE(is_induced(host, moved, *iso));
    EXPECT_EQ(are_isomorphic(host, pat, false).has_value(),
              hn == pn && brute::isomorphic(hn, he, pe));
}

INSTANTIATE_TEST_SUITE_P(Sweep, RandomSystems, ::testing::Range(0, 500));
