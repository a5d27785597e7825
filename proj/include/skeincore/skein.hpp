#pragma once

#include "skeincore/groups.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace skeincore {

// Arc component with states at both endpoints and a framing spin bit.
// state_end is the state at the arrival endpoint (marking path.dst),
// state_start the one at the departure endpoint (marking path.src).
struct StatedArc {
    GroupoidPath path;
    int state_end = 1;
    int state_start = 1;
    int spin = 0;
};

// Framed knot component: conjugacy word plus spin bit.
struct FramedKnot {
    Word word;
    int spin = 0;
};

// One edge of an n-valent vertex.  The far endpoint is either a marking
// endpoint carrying a state, or an edge slot of another vertex (matched by
// order of appearance on both sides).  `word` is this side's contribution to
// the edge's core word.
struct VertexEdge {
    enum class Target { Marking, Vertex };
    Target target = Target::Marking;
    Word word;
    int marking = 0;    // Target::Marking
    int state = 1;      // Target::Marking
    int peer = -1;      // Target::Vertex: index of the other vertex
};

// An n-valent sink (all edges oriented in) or source (all edges out),
// anchored at the base marking.  `drag` re-anchors the vertex: every edge
// word is composed with it on the vertex side.
struct WebVertex {
    bool sink = true;
    std::vector<VertexEdge> edges;
    Word drag;
};

// A stated web: disjoint union of stated arcs, framed knots, and vertices.
struct Web {
    std::vector<StatedArc> arcs;
    std::vector<FramedKnot> knots;
    std::vector<WebVertex> vertices;
};

struct SkeinRing {
    MarkedManifoldSpec spec;
    RingPtr layout;
};

// Validates the spec and web data and builds the coordinate ring layout.
SkeinRing build_ring(const MarkedManifoldSpec& spec);
void validate_web(const SkeinRing& ring, const Web& web);

// Normal form of a single stated arc: d_n^spin * S_{i,j} with
// S = d_n * A * morphism_matrix(path), reduced modulo the det ideal.
Poly arc_element(const SkeinRing& ring, const StatedArc& arc);

// Normal form of a framed knot: d_n^spin * trace(holonomy(word)).
Poly knot_element(const SkeinRing& ring, const FramedKnot& knot);

// One determinant-expansion step: replaces vertex `vid` by the signed sum
// over permutations sigma of S_n of webs where edge t receives state
// sigma(t+1) at the cut point, with coefficient (-1)^{inv(sigma)}.
std::vector<std::pair<Rational, Web>> expand_vertex(const SkeinRing& ring, const Web& web, int vid);

// Full normal form: expands vertices in the given order (indices into the
// original vertex list; default 0,1,2,...), multiplies the component
// elements, reduces modulo the det ideal.
Poly normalize(const SkeinRing& ring, const Web& web);
Poly normalize_with_order(const SkeinRing& ring, const Web& web, const std::vector<int>& order);

// Rewrites a web without changing its normal form: re-anchors vertex `vid`
// by composing `gamma` into its drag word.
Web reanchor_vertex(const Web& web, int vid, const Word& gamma);

struct RelationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Checks the defining local relations at the classical specialization:
// kink removal, trivial knot value, turnback arcs, arc splitting along a
// marking, and the parallel sink-source pairing.  All comparisons are exact
// polynomial identities modulo the det ideal.
std::vector<RelationCheck> relation_suite(const SkeinRing& ring);

// Bar involution on coefficients: block variable x[i][j] -> x[n+1-i][n+1-j].
Poly bar_involution(const Poly& p);

// Relates the ring of a manifold with k markings to the one with k+1: the
// k+1 ring has one extra connector block.  include_marking transports a
// polynomial along the canonical inclusion (identity on shared variables).
Poly include_marking(const SkeinRing& from, const SkeinRing& to, const Poly& p);

// Inverse direction on arc generators: the image under the splitting
// isomorphism of a stated arc with exactly one endpoint on the last marking
// of `ring` (the marking being removed), expressed inside ring itself.
// For such arcs this is a left inverse of the inclusion.
Poly jmath_arc(const SkeinRing& ring, const StatedArc& arc);

} // namespace skeincore
