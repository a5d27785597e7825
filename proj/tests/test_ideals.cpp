#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeincore/ideals.hpp"

using namespace skeincore;

namespace {

RingPtr xy_ring() { return make_layout(2, {}, {"x", "y"}); }

Poly pp(const RingPtr& r, const std::string& t) { return parse_poly(r, t); }

} // namespace

TEST_CASE("buchberger on a textbook ideal") {
    auto r = xy_ring();
    // I = (x^2 + y^2, x*y)
    GroebnerBasis gb = buchberger(r, {pp(r, "x^2 + y^2"), pp(r, "x*y")});
    CHECK(gb.complete);
    CHECK(is_member(gb, pp(r, "x^3")));          // x^3 = x(x^2+y^2) - y(xy)
    CHECK(is_member(gb, pp(r, "y^3")));
    CHECK(is_member(gb, pp(r, "x^2*y - 7*x*y^2")));
    CHECK_FALSE(is_member(gb, pp(r, "x")));
    CHECK_FALSE(is_member(gb, pp(r, "x^2")));
    CHECK_FALSE(is_member(gb, pp(r, "x^2 - y^2")));
    // basis is monic and auto-reduced
    for (const Poly& p : gb.polys) {
        CHECK(p.leading_coeff() == 1);
        for (const Poly& q : gb.polys)
            if (!(p == q)) CHECK_FALSE(q.leading_monomial().divides(p.leading_monomial()));
    }
}

TEST_CASE("gb_reduce is a canonical normal form") {
    auto r = xy_ring();
    GroebnerBasis gb = buchberger(r, {pp(r, "x^2 - y"), pp(r, "y^2 - 1")});
    // two representatives of the same class reduce identically
    Poly a = pp(r, "x^4");
    Poly b = pp(r, "y^2") + (pp(r, "x^2 - y") * pp(r, "x^2 + y"));
    CHECK(gb_reduce(gb, a) == gb_reduce(gb, b));
    CHECK(gb_reduce(gb, pp(r, "x^4")) == pp(r, "1"));
    CHECK(gb_reduce(gb, gb_reduce(gb, a)) == gb_reduce(gb, a));
}

TEST_CASE("radical membership by the auxiliary variable trick") {
    auto r = make_layout(2, {}, {"x"});
    CHECK(is_nilpotent(r, {pp(r, "x^2")}, pp(r, "x")));
    CHECK(is_nilpotent(r, {pp(r, "x^3")}, pp(r, "2*x")));
    CHECK_FALSE(is_nilpotent(r, {pp(r, "x^2 - 1")}, pp(r, "x")));
    CHECK_FALSE(is_nilpotent(r, {pp(r, "x^2 - x")}, pp(r, "x")));
    auto r2 = xy_ring();
    CHECK(is_nilpotent(r2, {pp(r2, "x^2 + y^2"), pp(r2, "x*y")}, pp(r2, "x")));
    CHECK_FALSE(is_nilpotent(r2, {pp(r2, "x^2")}, pp(r2, "y")));
    // the unit ideal makes everything nilpotent
    CHECK(is_nilpotent(r, {pp(r, "1")}, pp(r, "x")));
}

TEST_CASE("budget exhaustion is reported, partial results are usable") {
    auto r = xy_ring();
    GroebnerBasis gb = buchberger(r, {pp(r, "x^2 + y^2"), pp(r, "x*y")}, 0);
    CHECK_FALSE(gb.complete);
    // a generator still reduces to zero: conclusive membership
    CHECK(is_member(gb, pp(r, "x*y")));
    CHECK(is_member(gb, pp(r, "x^3")));  // reduces by the generators alone
    // y^3 needs the completed basis: inconclusive, so it throws
    CHECK_THROWS_AS(is_member(gb, pp(r, "y^3")), BudgetError);
}

TEST_CASE("manifold ideal of the order-two quotient") {
    MarkedManifoldSpec spec;
    spec.n = 2;
    spec.group.generator_count = 1;
    spec.markings = 0;
    spec.group.relators.push_back(parse_word("g1*g1"));
    SkeinRing ring = build_ring(spec);
    GroebnerBasis gb = buchberger(ring.layout, manifold_ideal(ring));
    CHECK(gb.complete);
    auto r = ring.layout;
    Poly tr = Poly::entry(r, 0, 1, 1) + Poly::entry(r, 0, 2, 2);
    // Cayley-Hamilton facts: X^2 = I and det X = 1 force tr^2 = 4 and the
    // off-diagonal entries to vanish identically on the variety
    CHECK(is_member(gb, tr * tr - Poly::constant(r, 4)));
    CHECK(is_member(gb, Poly::entry(r, 0, 1, 2)));
    CHECK(is_member(gb, Poly::entry(r, 0, 2, 1)));
    CHECK(is_member(gb, Poly::entry(r, 0, 1, 1) - Poly::entry(r, 0, 2, 2)));
    // X = -I lies on the variety, so x11 - 1 is not in the ideal
    CHECK_FALSE(is_member(gb, Poly::entry(r, 0, 1, 1) - Poly::constant(r, 1)));
    CHECK_FALSE(is_member(gb, tr - Poly::constant(r, 2)));
    // but (x11 - 1)(x11 + 1) = x11^2 - 1 vanishes on it
    Poly x11 = Poly::entry(r, 0, 1, 1);
    CHECK(is_member(gb, x11 * x11 - Poly::constant(r, 1)));
}

TEST_CASE("manifold ideal with a circle constraint") {
    MarkedManifoldSpec spec;
    spec.n = 2;
    spec.group.generator_count = 1;
    spec.markings = 1;
    spec.circles.push_back({parse_word("g1"), 0});
    SkeinRing ring = build_ring(spec);
    GroebnerBasis gb = buchberger(ring.layout, manifold_ideal(ring));
    CHECK(gb.complete);
    auto r = ring.layout;
    CHECK(is_member(gb, Poly::entry(r, 0, 1, 1) - Poly::constant(r, 1)));
    CHECK(is_member(gb, Poly::entry(r, 0, 1, 2)));
    // with a spin-1 circle the holonomy is forced to d_2 * I = -I instead
    spec.circles[0].spin = 1;
    SkeinRing ring2 = build_ring(spec);
    GroebnerBasis gb2 = buchberger(ring2.layout, manifold_ideal(ring2));
    CHECK(is_member(gb2, Poly::entry(ring2.layout, 0, 1, 1) + Poly::constant(ring2.layout, 1)));
}
