#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeincore/groups.hpp"

using namespace skeincore;

namespace {

MarkedManifoldSpec free_spec(int n, int gens, int markings) {
    MarkedManifoldSpec s;
    s.n = n;
    s.group.generator_count = gens;
    s.markings = markings;
    return s;
}

} // namespace

TEST_CASE("word parsing and reduction") {
    CHECK(parse_word("g1*g2^-1*g1").str() == "g1*g2^-1*g1");
    CHECK(parse_word("").empty());
    CHECK(parse_word("e").empty());
    CHECK(parse_word("g1*g1^-1").empty());
    CHECK(parse_word("g2*g1*g1^-1*g2^-1").empty());
    CHECK(word_inverse(parse_word("g1*g2^-1")).str() == "g2*g1^-1");
    CHECK(word_concat(parse_word("g1*g2"), parse_word("g2^-1")).str() == "g1");
    CHECK_THROWS_AS(parse_word("g1^2"), ParseError);
    CHECK_THROWS_AS(parse_word("x1"), ParseError);
}

TEST_CASE("path composition") {
    GroupoidPath p{1, 0, parse_word("g1")};
    GroupoidPath q{0, 1, parse_word("g2")};
    // q then p: q ends where p starts
    GroupoidPath pq = compose_paths(p, q);
    CHECK(pq.src == 0);
    CHECK(pq.dst == 0);
    CHECK(pq.core.str() == "g1*g2");
    CHECK_THROWS_AS(compose_paths(q, q), ValidationError);
    GroupoidPath inv = invert_path(pq);
    CHECK(inv.core.str() == "g2^-1*g1^-1");
}

TEST_CASE("A matrix identities for n up to 5") {
    for (int n = 2; n <= 5; ++n) {
        CAPTURE(n);
        auto r = make_layout(n, {});
        PolyMatrix a = a_matrix(r);
        // A^2 = d_n * I
        PolyMatrix sq = a * a;
        PolyMatrix want = PolyMatrix::identity(r, n).scaled(d_constant(n));
        CHECK(sq == want);
        // det A = 1
        CHECK(a.det() == Poly::constant(r, 1));
        // entries: A[i][bar(i)] = (-1)^{i+1}
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                Rational expect = (j == bar(n, i)) ? Rational(i % 2 == 1 ? 1 : -1) : Rational(0);
                CHECK(a.at(i, j) == Poly::constant(r, expect));
            }
    }
}

TEST_CASE("holonomy of words") {
    auto spec = free_spec(2, 2, 1);
    auto r = manifold_layout(spec);
    // free reduction first: g1 * g1^-1 is the identity on the nose
    CHECK(holonomy(r, spec, parse_word("g1*g1^-1")) == PolyMatrix::identity(r, 2));
    // adj(X) X reduces to I modulo dets
    PolyMatrix prod = holonomy(r, spec, parse_word("g1^-1")) * holonomy(r, spec, parse_word("g1"));
    CHECK(reduce_by_dets(prod) == PolyMatrix::identity(r, 2));
    // leftmost letter is the leftmost factor
    PolyMatrix x1 = PolyMatrix::block(r, 0), x2 = PolyMatrix::block(r, 1);
    CHECK(holonomy(r, spec, parse_word("g1*g2")) == x1 * x2);
    CHECK_THROWS_AS(holonomy(r, spec, parse_word("g3")), ValidationError);
}

TEST_CASE("morphism matrices carry connectors") {
    auto spec = free_spec(2, 1, 3);
    auto r = manifold_layout(spec);
    PolyMatrix x = PolyMatrix::block(r, 0);
    PolyMatrix c1 = PolyMatrix::block(r, 1), c2 = PolyMatrix::block(r, 2);
    CHECK(morphism_matrix(r, spec, {0, 0, parse_word("g1")}) == x);
    CHECK(morphism_matrix(r, spec, {0, 1, parse_word("g1")}) == c1 * x);
    CHECK(morphism_matrix(r, spec, {2, 0, parse_word("g1")}) == x * c2.adjugate());
    // trivial loop at the base is the identity
    CHECK(morphism_matrix(r, spec, {0, 0, Word{}}) == PolyMatrix::identity(r, 2));
    CHECK_THROWS_AS(morphism_matrix(r, spec, {3, 0, Word{}}), ValidationError);
}

TEST_CASE("composability matches matrix multiplication modulo dets") {
    auto spec = free_spec(2, 2, 2);
    auto r = manifold_layout(spec);
    GroupoidPath q{0, 1, parse_word("g1")};
    GroupoidPath p{1, 0, parse_word("g2^-1")};
    PolyMatrix lhs = morphism_matrix(r, spec, compose_paths(p, q));
    PolyMatrix rhs = morphism_matrix(r, spec, p) * morphism_matrix(r, spec, q);
    CHECK(reduce_by_dets(lhs) == reduce_by_dets(rhs));
}

TEST_CASE("manifold validation") {
    auto ok = free_spec(2, 1, 1);
    CHECK_NOTHROW(validate_manifold(ok));
    auto bad_n = free_spec(1, 1, 1);
    CHECK_THROWS_AS(validate_manifold(bad_n), ValidationError);
    auto bad_rel = free_spec(2, 1, 1);
    bad_rel.group.relators.push_back(parse_word("g2"));
    CHECK_THROWS_AS(validate_manifold(bad_rel), ValidationError);
    auto bad_circle = free_spec(2, 1, 1);
    bad_circle.circles.push_back({parse_word("g1"), 2});
    CHECK_THROWS_AS(validate_manifold(bad_circle), ValidationError);
}
