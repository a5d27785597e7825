#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeincore/eval.hpp"

using namespace skeincore;

namespace {

SkeinRing free_ring(int n, int gens, int markings) {
    MarkedManifoldSpec s;
    s.n = n;
    s.group.generator_count = gens;
    s.markings = markings;
    return build_ring(s);
}

Word w(const std::string& t) { return parse_word(t); }

} // namespace

TEST_CASE("cut spec shape and summand count") {
    auto ring = free_ring(2, 1, 1);
    Web web;
    web.arcs.push_back({{0, 0, w("g1")}, 1, 1, 0});
    SplitResult s = theta_split(ring, web);
    CHECK(s.cut_spec.group.generator_count == 0);
    CHECK(s.cut_spec.markings == 3);
    CHECK(s.summands.size() == 2);  // one crossing, n states
    for (const Web& sw : s.summands) CHECK(sw.arcs.size() == 2);
    // crossing-free components pass through unchanged
    Web plain;
    plain.knots.push_back({Word{}, 1});
    SplitResult s2 = theta_split(free_ring(2, 1, 1), plain);
    CHECK(s2.summands.size() == 1);
    CHECK(s2.summands[0].knots.size() == 1);
}

TEST_CASE("glued representation lands in SL_n and matches the formula") {
    for (int n = 2; n <= 3; ++n) {
        auto ring = free_ring(n, 2, 1);
        Web web;
        web.arcs.push_back({{0, 0, w("g2")}, 1, 1, 0});
        SplitResult s = theta_split(ring, web);
        SkeinRing cut = build_ring(s.cut_spec);
        Representation rp = sample_representation(cut, 11);
        Representation glued = glue_rep(ring, cut, rp);
        CHECK(std::abs(cmat_det(glued.blocks.at("g2")) - 1.0) < 1e-9);
        CHECK(glued.blocks.at("g1") == rp.blocks.at("g1"));
    }
}

TEST_CASE("splitting square commutes for arcs") {
    struct Case {
        int n, gens;
        const char* word;
    };
    std::vector<Case> cases = {
        {2, 1, "g1"},          {2, 1, "g1^-1"},
        {3, 1, "g1"},          {3, 1, "g1^-1"},
        {2, 2, "g2*g1*g2"},    {2, 2, "g2*g1*g2^-1"},
        {3, 2, "g2^-1*g1*g2"}, {2, 2, "g1*g2"},
        {2, 1, "g1*g1"},       {2, 1, "g1^-1*g1^-1"},
    };
    for (const Case& c : cases) {
        CAPTURE(c.word);
        CAPTURE(c.n);
        auto ring = free_ring(c.n, c.gens, 1);
        for (int i = 1; i <= c.n; ++i) {
            Web web;
            web.arcs.push_back({{0, 0, w(c.word)}, i, 1, 0});
            CHECK(split_square_residual(ring, web, 3) <= 1e-9);
        }
        // with a spin bit set
        Web web;
        web.arcs.push_back({{0, 0, w(c.word)}, 1, 1, 1});
        CHECK(split_square_residual(ring, web, 4) <= 1e-9);
    }
}

TEST_CASE("splitting square commutes for knots") {
    struct Case {
        int n, gens;
        const char* word;
        int spin;
    };
    std::vector<Case> cases = {
        {2, 1, "g1", 0},        {2, 1, "g1", 1},
        {3, 1, "g1^-1", 0},     {2, 1, "g1*g1", 0},
        {2, 2, "g1*g2", 0},     {2, 2, "g2*g1*g2^-1*g1", 0},
        {3, 2, "g2^-1*g1", 0},  {2, 1, "g1*g1*g1", 0},
    };
    for (const Case& c : cases) {
        CAPTURE(c.word);
        CAPTURE(c.n);
        auto ring = free_ring(c.n, c.gens, 1);
        Web web;
        web.knots.push_back({w(c.word), c.spin});
        CHECK(split_square_residual(ring, web, 9) <= 1e-9);
    }
}

TEST_CASE("splitting a multi-component web") {
    auto ring = free_ring(2, 2, 1);
    Web web;
    web.arcs.push_back({{0, 0, w("g2")}, 1, 2, 0});
    web.knots.push_back({w("g1*g2"), 0});
    SplitResult s = theta_split(ring, web);
    CHECK(s.summands.size() == 4);  // two crossings across two components
    CHECK(split_square_residual(ring, web, 21) <= 1e-9);
}

TEST_CASE("unsupported splits are rejected") {
    auto ring = free_ring(2, 1, 1);
    Web with_vertex;
    WebVertex v{true, {}, Word{}};
    v.edges.push_back({VertexEdge::Target::Marking, Word{}, 0, 1, -1});
    v.edges.push_back({VertexEdge::Target::Marking, Word{}, 0, 2, -1});
    with_vertex.vertices.push_back(v);
    CHECK_THROWS_AS(theta_split(ring, with_vertex), UnsupportedError);

    MarkedManifoldSpec spec;
    spec.n = 2;
    spec.group.generator_count = 1;
    spec.markings = 1;
    spec.circles.push_back({w("g1"), 0});
    SkeinRing circle_ring = build_ring(spec);
    Web web;
    web.knots.push_back({w("g1"), 0});
    CHECK_THROWS_AS(theta_split(circle_ring, web), UnsupportedError);
}
