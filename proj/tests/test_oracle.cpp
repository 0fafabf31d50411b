#include <gtest/gtest.h>

#include <random>

#include "steiner_ramsey/fixtures.hpp"
#include "steiner_ramsey/oracle.hpp"

using namespace steiner_ramsey;
using namespace steiner_ramsey::oracle;
namespace fx = steiner_ramsey::fixtures;

namespace {

// Flat enumeration of all c^n colourings.
bool flat_holds(const ArrowProblem& p) {
    std::vector<Color> col(p.family_size, 0);
    while (true) {
        bool some_mono = false;
        for (const auto& t : p.targets) {
            bool mono = true;
            for (auto j : t) mono = mono && col[j] == col[t[0]];
            if (mono) some_mono = true;
        }
        if (!some_mono) return false;
        std::size_t i = 0;
        while (i < col.size() && col[i] == p.c - 1) col[i++] = 0;
        if (i == col.size()) return true;
        ++col[i];
    }
}

ArrowProblem random_problem(std::mt19937& rng) {
    ArrowProblem p;
    p.family_size = std::uniform_int_distribution<std::size_t>(1, 9)(rng);
    p.c = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    std::size_t nt = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
    std::bernoulli_distribution in(0.35);
    for (std::size_t i = 0; i < nt; ++i) {
        std::vector<std::size_t> t;
        for (std::size_t j = 0; j < p.family_size; ++j)
            if (in(rng)) t.push_back(j);
        if (!t.empty()) p.targets.push_back(t);
    }
    return p;
}

} // namespace

TEST(Oracle, ClassicTriangleArrow) {
    auto k2 = fx::edge(2, 2), k3 = fx::complete_graph(3);
    auto yes = arrows(fx::complete_graph(6), k3, k2, 2, CopyKind::induced, CopyKind::induced, false);
    EXPECT_TRUE(yes.holds);
    auto k5 = fx::complete_graph(5);
    auto no = arrows(k5, k3, k2, 2, CopyKind::induced, CopyKind::induced, false);
    ASSERT_FALSE(no.holds);
    ASSERT_TRUE(no.counterexample);
    // The colouring must leave every triangle of K5 bichromatic.
    auto cp = build_copy_problem(k5.hypergraph(), k3.hypergraph(), k2.hypergraph(), 2, 2,
                                 CopyKind::induced, CopyKind::induced, false);
    EXPECT_TRUE(is_counterexample(cp.problem, *no.counterexample));
    // Each colour class is a 5-cycle: every vertex has two edges of each colour.
    std::vector<int> red_degree(5, 0);
    for (std::size_t i = 0; i < cp.f_copies.size(); ++i)
        if ((*no.counterexample)[i] == 0)
            for (Vertex v : cp.f_copies[i].map) ++red_degree[v];
    for (int d : red_degree) EXPECT_EQ(d, 2);
}

TEST(Oracle, SingleCopyAlwaysArrows) {
    for (std::size_t c = 1; c <= 4; ++c) {
        auto f = fx::fano();
        EXPECT_TRUE(arrows(f, f, f, c, CopyKind::strong, CopyKind::strong, true).holds);
    }
}

TEST(Oracle, OneColourNeedsATarget) {
    auto k2 = fx::edge(2, 2);
    EXPECT_TRUE(arrows(fx::complete_graph(3), fx::complete_graph(3), k2, 1, CopyKind::induced,
                       CopyKind::induced, false)
                    .holds);
    EXPECT_FALSE(arrows(fx::p3(), fx::complete_graph(3), k2, 1, CopyKind::induced,
                        CopyKind::induced, false)
                     .holds);
}

TEST(Oracle, EmptyTargetAndNoTargets) {
    ArrowProblem p{3, {{0, 1}, {}}, 2};
    EXPECT_TRUE(decide(p).holds);
    ArrowProblem q{3, {}, 2};
    auto v = decide(q);
    EXPECT_FALSE(v.holds);
    EXPECT_TRUE(is_counterexample(q, *v.counterexample));
}

TEST(Oracle, SizeLimit) {
    ArrowProblem p{30, {{0, 1}}, 2};
    EXPECT_THROW(decide(p), SizeLimitExceeded);
    EXPECT_NO_THROW(decide(p, {30, 1}));
}

TEST(Oracle, AgreesWithFlatEnumeration) {
    std::mt19937 rng(11);
    for (int i = 0; i < 400; ++i) {
        auto p = random_problem(rng);
        auto v = decide(p);
        EXPECT_EQ(v.holds, flat_holds(p));
        if (!v.holds) EXPECT_TRUE(is_counterexample(p, *v.counterexample));
        EXPECT_EQ(decide(p, {default_max_copies, 3}).holds, v.holds);
    }
}

TEST(Oracle, VerdictIgnoresItemOrder) {
    std::mt19937 rng(12);
    for (int i = 0; i < 200; ++i) {
        auto p = random_problem(rng);
        std::vector<std::size_t> perm(p.family_size);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        ArrowProblem q = p;
        for (auto& t : q.targets)
            for (auto& j : t) j = perm[j];
        std::shuffle(q.targets.begin(), q.targets.end(), rng);
        EXPECT_EQ(decide(p).holds, decide(q).holds);
    }
}

TEST(Oracle, ParallelTriangleArrow) {
    auto k2 = fx::edge(2, 2), k3 = fx::complete_graph(3);
    EXPECT_TRUE(arrows(fx::complete_graph(6), k3, k2, 2, CopyKind::induced, CopyKind::induced,
                       false, {default_max_copies, 4})
                    .holds);
    EXPECT_FALSE(arrows(fx::complete_graph(5), k3, k2, 2, CopyKind::induced, CopyKind::induced,
                        false, {default_max_copies, 4})
                     .holds);
}
