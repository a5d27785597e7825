#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeincore/skein.hpp"

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

TEST_CASE("arc elements: frozen small cases") {
    auto ring = free_ring(2, 1, 1);
    // generic loop at the base, states (1,1): the (1,1) entry of d_2 A X
    CHECK(arc_element(ring, {{0, 0, w("g1")}, 1, 1, 0}).str() == "-g1[2][1]");
    CHECK(arc_element(ring, {{0, 0, w("g1")}, 1, 2, 0}).str() == "-g1[2][2]");
    CHECK(arc_element(ring, {{0, 0, w("g1")}, 2, 1, 0}).str() == "g1[1][1]");
    CHECK(arc_element(ring, {{0, 0, w("g1")}, 2, 2, 0}).str() == "g1[1][2]");
    // spin flip multiplies by d_2 = -1
    CHECK(arc_element(ring, {{0, 0, w("g1")}, 1, 1, 1}).str() == "g1[2][1]");
}

TEST_CASE("trivial arc values match the turnback constants") {
    for (int n = 2; n <= 4; ++n) {
        auto ring = free_ring(n, 1, 1);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                Poly got = arc_element(ring, {{0, 0, Word{}}, i, j, 0});
                Rational want = 0;
                if (bar(n, j) == i) want = ((n - i) % 2 == 0) ? 1 : -1;
                CHECK(got == Poly::constant(ring.layout, want));
            }
    }
}

TEST_CASE("knot elements") {
    auto ring = free_ring(2, 2, 1);
    CHECK(knot_element(ring, {w("g1"), 0}).str() == "g1[1][1] + g1[2][2]");
    // empty knot with a twist: d_n * n
    CHECK(knot_element(ring, {Word{}, 1}) == Poly::constant(ring.layout, -2));
    auto ring3 = free_ring(3, 1, 1);
    CHECK(knot_element(ring3, {Word{}, 1}) == Poly::constant(ring3.layout, 3));
    // conjugation invariance modulo dets
    Poly a = knot_element(ring, {w("g1*g2"), 0});
    Poly b = knot_element(ring, {w("g2*g1"), 0});
    Poly c = knot_element(ring, {w("g2^-1*g1*g2*g2"), 0});
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("single sink expansion: frozen n = 2 example") {
    auto ring = free_ring(2, 1, 1);
    Web web;
    WebVertex sink{true, {}, Word{}};
    sink.edges.push_back({VertexEdge::Target::Marking, Word{}, 0, 1, -1});
    sink.edges.push_back({VertexEdge::Target::Marking, Word{}, 0, 2, -1});
    web.vertices.push_back(sink);
    auto terms = expand_vertex(ring, web, 0);
    CHECK(terms.size() == 2);
    CHECK(normalize(ring, web) == Poly::constant(ring.layout, 1));
    // flipping the edge states transposes the determinant columns
    web.vertices[0].edges[0].state = 2;
    web.vertices[0].edges[1].state = 1;
    CHECK(normalize(ring, web) == Poly::constant(ring.layout, -1));
}

TEST_CASE("sink with nontrivial words is the determinant-form state sum") {
    auto ring = free_ring(2, 2, 1);
    Web web;
    WebVertex sink{true, {}, Word{}};
    sink.edges.push_back({VertexEdge::Target::Marking, w("g1"), 0, 1, -1});
    sink.edges.push_back({VertexEdge::Target::Marking, w("g2"), 0, 2, -1});
    web.vertices.push_back(sink);
    // column vectors of d_2 A X_{g1} and d_2 A X_{g2}
    Poly want(ring.layout);
    Poly s11 = arc_element(ring, {{0, 0, w("g1")}, 1, 1, 0});
    Poly s21 = arc_element(ring, {{0, 0, w("g1")}, 2, 1, 0});
    Poly s12 = arc_element(ring, {{0, 0, w("g2")}, 1, 2, 0});
    Poly s22 = arc_element(ring, {{0, 0, w("g2")}, 2, 2, 0});
    want = s11 * s22 - s21 * s12;
    CHECK(normalize(ring, web) == reduce_by_dets(want));
}

TEST_CASE("vertex expansion order does not change the normal form") {
    auto ring = free_ring(3, 2, 1);
    Web web;
    WebVertex sink{true, {}, Word{}}, source{false, {}, Word{}};
    sink.edges.push_back({VertexEdge::Target::Vertex, w("g1"), 0, 1, 1});
    sink.edges.push_back({VertexEdge::Target::Marking, Word{}, 0, 2, -1});
    sink.edges.push_back({VertexEdge::Target::Vertex, w("g2^-1"), 0, 1, 1});
    source.edges.push_back({VertexEdge::Target::Vertex, Word{}, 0, 1, 0});
    source.edges.push_back({VertexEdge::Target::Marking, w("g2"), 0, 3, -1});
    source.edges.push_back({VertexEdge::Target::Vertex, w("g1"), 0, 1, 0});
    web.vertices = {sink, source};
    Poly p01 = normalize_with_order(ring, web, {0, 1});
    Poly p10 = normalize_with_order(ring, web, {1, 0});
    CHECK(p01 == p10);
    CHECK_FALSE(p01.is_zero());
}

TEST_CASE("re-anchoring a vertex does not change the normal form") {
    auto ring = free_ring(2, 2, 1);
    Web web;
    WebVertex sink{true, {}, Word{}};
    sink.edges.push_back({VertexEdge::Target::Marking, w("g1"), 0, 1, -1});
    sink.edges.push_back({VertexEdge::Target::Marking, Word{}, 0, 2, -1});
    web.vertices.push_back(sink);
    Poly base = normalize(ring, web);
    CHECK(normalize(ring, reanchor_vertex(web, 0, w("g2"))) == base);
    CHECK(normalize(ring, reanchor_vertex(web, 0, w("g1^-1*g2"))) == base);

    Web src_web;
    WebVertex source{false, {}, Word{}};
    source.edges.push_back({VertexEdge::Target::Marking, w("g2"), 0, 1, -1});
    source.edges.push_back({VertexEdge::Target::Marking, Word{}, 0, 1, -1});
    src_web.vertices.push_back(source);
    Poly base2 = normalize(ring, src_web);
    CHECK(normalize(ring, reanchor_vertex(src_web, 0, w("g1"))) == base2);
}

TEST_CASE("relation suite passes on free specs") {
    for (int n = 2; n <= 4; ++n) {
        auto ring = free_ring(n, 2, 1);
        for (const RelationCheck& rc : relation_suite(ring)) {
            CAPTURE(n);
            CAPTURE(rc.name);
            CAPTURE(rc.detail);
            CHECK(rc.pass);
        }
    }
}

TEST_CASE("bar involution") {
    auto ring = free_ring(3, 1, 1);
    Poly x11 = Poly::entry(ring.layout, 0, 1, 1);
    Poly x33 = Poly::entry(ring.layout, 0, 3, 3);
    Poly x22 = Poly::entry(ring.layout, 0, 2, 2);
    CHECK(bar_involution(x11) == x33);
    CHECK(bar_involution(x22) == x22);
    Poly p = x11 * x22.scaled(Rational(2, 3)) - Poly::constant(ring.layout, 5);
    CHECK(bar_involution(bar_involution(p)) == p);
    // ring map: respects products
    CHECK(bar_involution(x11 * x11) == x33 * x33);
}

TEST_CASE("including an extra marking is injective renaming") {
    auto small = free_ring(2, 1, 2);
    auto big = free_ring(2, 1, 3);
    StatedArc arc{{0, 1, w("g1")}, 1, 2, 0};
    Poly in_small = arc_element(small, arc);
    CHECK(include_marking(small, big, in_small) == arc_element(big, arc));
    CHECK_THROWS_AS(include_marking(small, small, in_small), ValidationError);
}

TEST_CASE("jmath inverts the inclusion on arcs at the last marking") {
    for (int n = 2; n <= 3; ++n) {
        auto ring = free_ring(n, 2, 2);  // last marking: 1
        std::vector<StatedArc> arcs;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                arcs.push_back({{0, 1, Word{}}, i, j, 0});       // connector generators
                arcs.push_back({{0, 1, w("g1")}, i, j, 0});      // end at the marking
                arcs.push_back({{1, 0, w("g2^-1")}, i, j, 0});   // start at the marking
                arcs.push_back({{1, 1, w("g1*g2")}, i, j, 1});   // both endpoints? no: same marking
            }
        for (const StatedArc& a : arcs) {
            CAPTURE(n);
            CAPTURE(a.path.src);
            CAPTURE(a.path.dst);
            if (a.path.src == a.path.dst) {
                CHECK_THROWS_AS(jmath_arc(ring, a), ValidationError);
            } else {
                CHECK(jmath_arc(ring, a) == arc_element(ring, a));
            }
        }
    }
}

TEST_CASE("jmath recovers the coordinate generators") {
    for (int n = 2; n <= 3; ++n) {
        auto ring = free_ring(n, 1, 2);
        int cblock = 1;  // blocks: g1, c1
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                Poly lhs = jmath_arc(ring, {{0, 1, Word{}}, bar(n, i), j, 0})
                               .scaled(i % 2 == 1 ? 1 : -1);
                CHECK(lhs == Poly::entry(ring.layout, cblock, i, j));
            }
    }
}

TEST_CASE("web validation") {
    auto ring = free_ring(2, 1, 1);
    Web bad;
    bad.arcs.push_back({{0, 0, Word{}}, 3, 1, 0});
    CHECK_THROWS_AS(validate_web(ring, bad), ValidationError);
    Web bad2;
    WebVertex v{true, {}, Word{}};
    v.edges.push_back({VertexEdge::Target::Marking, Word{}, 0, 1, -1});
    bad2.vertices.push_back(v);  // only one edge for n = 2
    CHECK_THROWS_AS(validate_web(ring, bad2), ValidationError);
    Web bad3;
    WebVertex v2{true, {}, Word{}};
    v2.edges.push_back({VertexEdge::Target::Vertex, Word{}, 0, 1, 0});
    v2.edges.push_back({VertexEdge::Target::Marking, Word{}, 0, 1, -1});
    bad3.vertices.push_back(v2);  // self-paired vertex
    CHECK_THROWS_AS(validate_web(ring, bad3), ValidationError);
}
