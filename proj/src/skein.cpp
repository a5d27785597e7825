#include "skeincore/skein.hpp"

#include <algorithm>
#include <numeric>

namespace skeincore {

SkeinRing build_ring(const MarkedManifoldSpec& spec) {
    validate_manifold(spec);
    return SkeinRing{spec, manifold_layout(spec)};
}

namespace {

void check_state(const SkeinRing& ring, int s, const char* what) {
    if (s < 1 || s > ring.spec.n)
        throw ValidationError(std::string(what) + " state " + std::to_string(s) +
                              " outside 1.." + std::to_string(ring.spec.n));
}

void check_spin(int h) {
    if (h != 0 && h != 1) throw ValidationError("spin bit must be 0 or 1");
}

void check_word_gens(const SkeinRing& ring, const Word& w) {
    for (auto& [g, e] : w.letters)
        if (g < 1 || g > ring.spec.group.generator_count)
            throw ValidationError("word uses unknown generator g" + std::to_string(g));
}

// Position of edge `slot` of vertex `vid` among its edges pointing at
// vertex `peer`; used to pair cross-vertex edges by order of appearance.
int vertex_edge_rank(const WebVertex& v, int slot, int peer) {
    int rank = 0;
    for (int t = 0; t < slot; ++t)
        if (v.edges[t].target == VertexEdge::Target::Vertex && v.edges[t].peer == peer) ++rank;
    return rank;
}

int find_peer_slot(const WebVertex& peer_vertex, int self_id, int rank) {
    int seen = 0;
    for (int t = 0; t < (int)peer_vertex.edges.size(); ++t) {
        const VertexEdge& e = peer_vertex.edges[t];
        if (e.target == VertexEdge::Target::Vertex && e.peer == self_id) {
            if (seen == rank) return t;
            ++seen;
        }
    }
    throw ValidationError("cross-vertex edges do not pair up");
}

} // namespace

void validate_web(const SkeinRing& ring, const Web& web) {
    int n = ring.spec.n;
    for (const StatedArc& a : web.arcs) {
        if (ring.spec.markings < 1)
            throw ValidationError("arcs require at least one marking");
        if (a.path.src < 0 || a.path.src >= ring.spec.markings ||
            a.path.dst < 0 || a.path.dst >= ring.spec.markings)
            throw ValidationError("arc endpoint marking out of range");
        check_word_gens(ring, a.path.core);
        check_state(ring, a.state_end, "arc end");
        check_state(ring, a.state_start, "arc start");
        check_spin(a.spin);
    }
    for (const FramedKnot& k : web.knots) {
        check_word_gens(ring, k.word);
        check_spin(k.spin);
    }
    for (int vid = 0; vid < (int)web.vertices.size(); ++vid) {
        const WebVertex& v = web.vertices[vid];
        if ((int)v.edges.size() != n)
            throw ValidationError("vertex must have exactly n = " + std::to_string(n) + " edges");
        check_word_gens(ring, v.drag);
        for (int t = 0; t < n; ++t) {
            const VertexEdge& e = v.edges[t];
            check_word_gens(ring, e.word);
            if (e.target == VertexEdge::Target::Marking) {
                if (ring.spec.markings < 1)
                    throw ValidationError("vertex edges require at least one marking");
                if (e.marking < 0 || e.marking >= ring.spec.markings)
                    throw ValidationError("vertex edge marking out of range");
                check_state(ring, e.state, "vertex edge");
            } else {
                if (e.peer < 0 || e.peer >= (int)web.vertices.size())
                    throw ValidationError("vertex edge peer out of range");
                if (e.peer == vid)
                    throw ValidationError("vertex cannot be joined to itself");
                const WebVertex& p = web.vertices[e.peer];
                if (p.sink == v.sink)
                    throw ValidationError("edges must join a sink to a source");
                // Throws if the order-of-appearance pairing is inconsistent.
                find_peer_slot(p, vid, vertex_edge_rank(v, t, e.peer));
            }
        }
    }
}

Poly arc_element(const SkeinRing& ring, const StatedArc& arc) {
    check_state(ring, arc.state_end, "arc end");
    check_state(ring, arc.state_start, "arc start");
    check_spin(arc.spin);
    int n = ring.spec.n;
    int d = d_constant(n);
    PolyMatrix s = a_matrix(ring.layout).scaled(d) *
                   morphism_matrix(ring.layout, ring.spec, arc.path);
    Poly value = s.at(arc.state_end, arc.state_start);
    if (arc.spin == 1) value = value.scaled(d);
    return reduce_by_dets(value);
}

Poly knot_element(const SkeinRing& ring, const FramedKnot& knot) {
    check_spin(knot.spin);
    Poly value = holonomy(ring.layout, ring.spec, knot.word).trace();
    if (knot.spin == 1) value = value.scaled(d_constant(ring.spec.n));
    return reduce_by_dets(value);
}

std::vector<std::pair<Rational, Web>> expand_vertex(const SkeinRing& ring, const Web& web, int vid) {
    validate_web(ring, web);
    if (vid < 0 || vid >= (int)web.vertices.size())
        throw ValidationError("vertex index out of range");
    int n = ring.spec.n;
    const WebVertex v = web.vertices[vid];

    // Web with vertex vid removed and peer references rewired.
    Web base = web;
    base.vertices.erase(base.vertices.begin() + vid);
    for (WebVertex& other : base.vertices)
        for (VertexEdge& e : other.edges)
            if (e.target == VertexEdge::Target::Vertex && e.peer > vid) --e.peer;

    std::vector<std::pair<Rational, Web>> out;
    for (const Perm& sigma : all_permutations(n)) {
        Rational coeff = inversion_length(sigma) % 2 == 0 ? 1 : -1;
        Web w = base;
        for (int t = 0; t < n; ++t) {
            const VertexEdge& e = v.edges[t];
            int cut_state = sigma[t];
            if (e.target == VertexEdge::Target::Marking) {
                StatedArc arc;
                if (v.sink) {
                    arc.path = GroupoidPath{e.marking, 0, word_concat(v.drag, e.word)};
                    arc.state_end = cut_state;
                    arc.state_start = e.state;
                } else {
                    arc.path = GroupoidPath{0, e.marking, word_concat(e.word, v.drag)};
                    arc.state_end = e.state;
                    arc.state_start = cut_state;
                }
                w.arcs.push_back(arc);
            } else {
                // The peer keeps the edge; our side's word and drag fold into it.
                int peer_new = e.peer > vid ? e.peer - 1 : e.peer;
                int slot = find_peer_slot(web.vertices[e.peer], vid, vertex_edge_rank(v, t, e.peer));
                VertexEdge& pe = w.vertices[peer_new].edges[slot];
                if (v.sink)
                    pe.word = word_concat(word_concat(v.drag, e.word), pe.word);
                else
                    pe.word = word_concat(pe.word, word_concat(e.word, v.drag));
                pe.target = VertexEdge::Target::Marking;
                pe.marking = 0;
                pe.state = cut_state;
                pe.peer = -1;
            }
        }
        out.push_back({coeff, std::move(w)});
    }
    return out;
}

Poly normalize_with_order(const SkeinRing& ring, const Web& web, const std::vector<int>& order) {
    validate_web(ring, web);
    if (order.size() != web.vertices.size())
        throw ValidationError("expansion order must list every vertex exactly once");
    {
        std::vector<int> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < (int)sorted.size(); ++i)
            if (sorted[i] != i)
                throw ValidationError("expansion order must be a permutation of the vertices");
    }

    std::vector<std::pair<Rational, Web>> states = {{Rational(1), web}};
    // Original indices of the vertices still present, in current order.
    std::vector<int> remaining(web.vertices.size());
    std::iota(remaining.begin(), remaining.end(), 0);
    for (int original : order) {
        auto it = std::find(remaining.begin(), remaining.end(), original);
        int cur = (int)(it - remaining.begin());
        remaining.erase(it);
        std::vector<std::pair<Rational, Web>> next;
        for (auto& [c, w] : states)
            for (auto& [c2, w2] : expand_vertex(ring, w, cur))
                next.push_back({c * c2, std::move(w2)});
        states = std::move(next);
    }

    Poly total(ring.layout);
    for (auto& [c, w] : states) {
        Poly prod = Poly::constant(ring.layout, c);
        for (const StatedArc& a : w.arcs) prod = prod * arc_element(ring, a);
        for (const FramedKnot& k : w.knots) prod = prod * knot_element(ring, k);
        total += prod;
    }
    return reduce_by_dets(total);
}

Poly normalize(const SkeinRing& ring, const Web& web) {
    std::vector<int> order(web.vertices.size());
    std::iota(order.begin(), order.end(), 0);
    return normalize_with_order(ring, web, order);
}

Web reanchor_vertex(const Web& web, int vid, const Word& gamma) {
    if (vid < 0 || vid >= (int)web.vertices.size())
        throw ValidationError("vertex index out of range");
    Web w = web;
    WebVertex& v = w.vertices[vid];
    if (v.sink) {
        // New anchor point is reached by gamma; edges now end further along.
        v.drag = word_concat(v.drag, gamma);
    } else {
        v.drag = word_concat(gamma, v.drag);
    }
    return w;
}

namespace {

Poly trivial_arc_value(const SkeinRing& ring, int i, int j) {
    int n = ring.spec.n;
    Rational v = 0;
    if (bar(n, j) == i) v = ((n - i) % 2 == 0) ? 1 : -1;
    return Poly::constant(ring.layout, v);
}

} // namespace

std::vector<RelationCheck> relation_suite(const SkeinRing& ring) {
    std::vector<RelationCheck> out;
    int n = ring.spec.n;
    int d = d_constant(n);
    bool have_marking = ring.spec.markings >= 1;
    bool have_gen = ring.spec.group.generator_count >= 1;

    // Kink removal: a spin flip scales any component by d_n.
    {
        RelationCheck rc{"kink-removal", true, ""};
        Word w;
        if (have_gen) w = parse_word("g1");
        FramedKnot k0{w, 0}, k1{w, 1};
        if (knot_element(ring, k1) != knot_element(ring, k0).scaled(d)) {
            rc.pass = false;
            rc.detail = "knot spin flip is not multiplication by d_n";
        }
        if (have_marking) {
            StatedArc a0{{0, 0, w}, 1, std::min(2, n), 0};
            StatedArc a1 = a0;
            a1.spin = 1;
            if (arc_element(ring, a1) != arc_element(ring, a0).scaled(d)) {
                rc.pass = false;
                rc.detail = "arc spin flip is not multiplication by d_n";
            }
        }
        out.push_back(rc);
    }

    // Trivial knot with one twist evaluates to (-1)^{n-1} * n.
    {
        RelationCheck rc{"unknot-value", true, ""};
        Poly got = knot_element(ring, FramedKnot{Word{}, 1});
        Poly want = Poly::constant(ring.layout, Rational(d) * n);
        if (got != want) {
            rc.pass = false;
            rc.detail = "got " + got.str() + ", expected " + want.str();
        }
        out.push_back(rc);
    }

    // Turnback arcs: the trivial arc with states (i,j) is the constant
    // delta_{bar(j),i} * (-1)^{n-i}.
    if (have_marking) {
        RelationCheck rc{"trivial-arc-values", true, ""};
        for (int i = 1; i <= n && rc.pass; ++i)
            for (int j = 1; j <= n && rc.pass; ++j) {
                Poly got = arc_element(ring, StatedArc{{0, 0, Word{}}, i, j, 0});
                if (got != trivial_arc_value(ring, i, j)) {
                    rc.pass = false;
                    rc.detail = "states (" + std::to_string(i) + "," + std::to_string(j) +
                                "): got " + got.str();
                }
            }
        out.push_back(rc);
    }

    // Splitting a composite arc along a marking:
    // S^{beta*alpha}_{i,j} = sum_k (-1)^{k+1} S^{beta}_{i,k} S^{alpha}_{bar(k),j}.
    if (have_marking) {
        RelationCheck rc{"arc-splitting", true, ""};
        Word wb = have_gen ? parse_word("g1") : Word{};
        Word wa = ring.spec.group.generator_count >= 2 ? parse_word("g2^-1") : wb;
        GroupoidPath beta{0, 0, wb}, alpha{0, 0, wa};
        GroupoidPath whole = compose_paths(beta, alpha);
        for (int i = 1; i <= n && rc.pass; ++i)
            for (int j = 1; j <= n && rc.pass; ++j) {
                Poly lhs = arc_element(ring, StatedArc{whole, i, j, 0});
                Poly rhs(ring.layout);
                for (int k = 1; k <= n; ++k) {
                    Rational sign = (k % 2 == 1) ? 1 : -1;
                    rhs += (arc_element(ring, StatedArc{beta, i, k, 0}) *
                            arc_element(ring, StatedArc{alpha, bar(n, k), j, 0}))
                               .scaled(sign);
                }
                if (reduce_by_dets(lhs - rhs) != Poly(ring.layout)) {
                    rc.pass = false;
                    rc.detail = "states (" + std::to_string(i) + "," + std::to_string(j) + ")";
                }
            }
        out.push_back(rc);
    }

    // A sink and a source joined by n parallel trivial edges collapse to n!.
    if (have_marking) {
        RelationCheck rc{"sink-source-pairing", true, ""};
        Web web;
        WebVertex sink{true, {}, Word{}}, source{false, {}, Word{}};
        for (int t = 0; t < n; ++t) {
            sink.edges.push_back({VertexEdge::Target::Vertex, Word{}, 0, 1, 1});
            source.edges.push_back({VertexEdge::Target::Vertex, Word{}, 0, 1, 0});
        }
        web.vertices = {sink, source};
        Rational nfact = 1;
        for (int i = 2; i <= n; ++i) nfact *= i;
        Poly got = normalize(ring, web);
        Poly want = Poly::constant(ring.layout, nfact);
        if (got != want) {
            rc.pass = false;
            rc.detail = "got " + got.str() + ", expected " + want.str();
        }
        out.push_back(rc);
    }

    return out;
}

Poly bar_involution(const Poly& p) {
    const RingPtr& ring = p.ring();
    int n = ring->n;
    Poly out(ring);
    for (auto& [m, c] : p.terms()) {
        Monomial nm;
        for (auto& [v, e] : m.factors) {
            int b, r, col;
            ring->decode(v, b, r, col);
            int nv = b < 0 ? v : ring->var(b, bar(n, r), bar(n, col));
            Monomial f;
            f.factors.push_back({nv, e});
            nm = nm * f;
        }
        out.add_term(nm, c);
    }
    return out;
}

Poly include_marking(const SkeinRing& from, const SkeinRing& to, const Poly& p) {
    if (from.spec.n != to.spec.n || to.spec.markings != from.spec.markings + 1)
        throw ValidationError("target ring must have exactly one extra marking");
    const RingPtr& src = from.layout;
    const RingPtr& dst = to.layout;
    Poly out(dst);
    for (auto& [m, c] : p.terms()) {
        Monomial nm;
        for (auto& [v, e] : m.factors) {
            int b, r, col;
            src->decode(v, b, r, col);
            if (b < 0) throw ValidationError("cannot include scalar variables");
            auto it = std::find(dst->block_names.begin(), dst->block_names.end(),
                                src->block_names[b]);
            if (it == dst->block_names.end())
                throw ValidationError("target ring misses block " + src->block_names[b]);
            Monomial f;
            f.factors.push_back({dst->var((int)(it - dst->block_names.begin()), r, col), e});
            nm = nm * f;
        }
        out.add_term(nm, c);
    }
    return out;
}

Poly jmath_arc(const SkeinRing& ring, const StatedArc& arc) {
    int n = ring.spec.n;
    int k = ring.spec.markings - 1;  // marking being split off
    if (k < 1)
        throw ValidationError("splitting off a marking requires at least two markings");
    bool end_at_k = arc.path.dst == k;
    bool start_at_k = arc.path.src == k;
    if (end_at_k == start_at_k)
        throw ValidationError("arc must have exactly one endpoint on the last marking");

    int cblock = -1;
    {
        std::string name = "c" + std::to_string(k);
        for (int b = 0; b < ring.layout->block_count(); ++b)
            if (ring.layout->block_names[b] == name) cblock = b;
    }
    Poly out(ring.layout);
    if (end_at_k) {
        int i = arc.state_end;
        for (int s = 1; s <= n; ++s) {
            Rational sign = ((i + s) % 2 == 0) ? 1 : -1;
            StatedArc inner{{arc.path.src, 0, arc.path.core}, s, arc.state_start, arc.spin};
            out += (arc_element(ring, inner) *
                    Poly::entry(ring.layout, cblock, bar(n, i), bar(n, s)))
                       .scaled(sign);
        }
    } else {
        int j = arc.state_start;
        PolyMatrix adj = PolyMatrix::block(ring.layout, cblock).adjugate();
        for (int s = 1; s <= n; ++s) {
            StatedArc inner{{0, arc.path.dst, arc.path.core}, arc.state_end, s, arc.spin};
            out += arc_element(ring, inner) * adj.at(s, j);
        }
    }
    return reduce_by_dets(out);
}

} // namespace skeincore
