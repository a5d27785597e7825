#include "skeincore/eval.hpp"

#include <cmath>
#include <random>

namespace skeincore {

CMatrix cmat_identity(int n) {
    CMatrix m(n, std::vector<Cplx>(n, 0.0));
    for (int i = 0; i < n; ++i) m[i][i] = 1.0;
    return m;
}

CMatrix cmat_mul(const CMatrix& a, const CMatrix& b) {
    int n = (int)a.size();
    CMatrix r(n, std::vector<Cplx>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

Cplx cmat_det(const CMatrix& a) {
    int n = (int)a.size();
    Cplx det = 0.0;
    for (const Perm& p : all_permutations(n)) {
        Cplx term = inversion_length(p) % 2 == 0 ? 1.0 : -1.0;
        for (int i = 0; i < n; ++i) term *= a[i][p[i] - 1];
        det += term;
    }
    return det;
}

CMatrix cmat_inverse(const CMatrix& a) {
    int n = (int)a.size();
    Cplx det = cmat_det(a);
    CMatrix inv(n, std::vector<Cplx>(n, 0.0));
    if (n == 1) {
        inv[0][0] = 1.0 / det;
        return inv;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CMatrix minor(n - 1, std::vector<Cplx>(n - 1, 0.0));
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor[rr][cc++] = a[r][c];
                }
                ++rr;
            }
            Cplx cof = cmat_det(minor);
            inv[i][j] = ((i + j) % 2 == 0 ? cof : -cof) / det;
        }
    return inv;
}

Cplx cmat_trace(const CMatrix& a) {
    Cplx t = 0.0;
    for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

namespace {

double unit_double(std::mt19937_64& rng) {
    return (double)(rng() >> 11) * (1.0 / 9007199254740992.0);
}

CMatrix numeric_a_matrix(int n) {
    CMatrix a(n, std::vector<Cplx>(n, 0.0));
    for (int i = 1; i <= n; ++i) a[i - 1][bar(n, i) - 1] = (i % 2 == 1) ? 1.0 : -1.0;
    return a;
}

CMatrix numeric_holonomy(const Representation& rep, const Word& w) {
    CMatrix m = cmat_identity(rep.n);
    for (auto& [g, e] : free_reduce(w).letters) {
        auto it = rep.blocks.find("g" + std::to_string(g));
        if (it == rep.blocks.end())
            throw ValidationError("representation misses block g" + std::to_string(g));
        m = cmat_mul(m, e == 1 ? it->second : cmat_inverse(it->second));
    }
    return m;
}

CMatrix numeric_path(const Representation& rep, const GroupoidPath& p) {
    CMatrix m = numeric_holonomy(rep, p.core);
    if (p.dst >= 1) {
        auto it = rep.blocks.find("c" + std::to_string(p.dst));
        if (it == rep.blocks.end())
            throw ValidationError("representation misses block c" + std::to_string(p.dst));
        m = cmat_mul(it->second, m);
    }
    if (p.src >= 1) {
        auto it = rep.blocks.find("c" + std::to_string(p.src));
        if (it == rep.blocks.end())
            throw ValidationError("representation misses block c" + std::to_string(p.src));
        m = cmat_mul(m, cmat_inverse(it->second));
    }
    return m;
}

} // namespace

CMatrix sample_sln(int n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        CMatrix m(n, std::vector<Cplx>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double re = 2.0 * unit_double(rng) - 1.0;
                double im = 2.0 * unit_double(rng) - 1.0;
                m[i][j] = Cplx(re, im);
            }
        Cplx det = cmat_det(m);
        if (std::abs(det) < 1e-8) continue;
        Cplx root = std::pow(det, 1.0 / n);
        for (auto& row : m)
            for (auto& x : row) x /= root;
        if (std::abs(cmat_det(m) - 1.0) <= 1e-12) return m;
    }
    throw SkeinError("failed to sample a well-conditioned SL_n matrix");
}

Representation sample_representation(const SkeinRing& ring, uint64_t seed) {
    if (!ring.spec.group.relators.empty())
        throw UnsupportedError("sampling representations is only supported for free groups");
    for (const Circle& c : ring.spec.circles)
        if (free_reduce(c.word).letters.size() > 1)
            throw UnsupportedError("sampling supports only single-letter circle constraints");

    Representation rep;
    rep.n = ring.spec.n;
    uint64_t salt = 0;
    for (const std::string& name : ring.layout->block_names)
        rep.blocks[name] = sample_sln(rep.n, seed * 1000003 + (salt++));

    for (const Circle& c : ring.spec.circles) {
        Word w = free_reduce(c.word);
        if (w.letters.empty()) {
            // Constraint rho(e) = d^h I: holds only for h = 0 at even d_n parity.
            continue;
        }
        double scale = c.spin == 1 ? d_constant(rep.n) : 1.0;
        CMatrix forced = cmat_identity(rep.n);
        for (auto& row : forced)
            for (auto& x : row) x *= scale;
        // rho(g)^e = scale * I; both exponents force the same block value
        // since (scale*I)^{-1} = scale^{-1} I and scale is +-1.
        rep.blocks["g" + std::to_string(w.letters[0].first)] = forced;
    }
    return rep;
}

Cplx evaluate(const Poly& p, const Representation& rep) {
    const RingPtr& ring = p.ring();
    Cplx total = 0.0;
    for (auto& [m, c] : p.terms()) {
        Cplx term = (double)Rational(c).convert_to<double>();
        for (auto& [v, e] : m.factors) {
            int b, r, col;
            ring->decode(v, b, r, col);
            if (b < 0) throw ValidationError("cannot evaluate scalar variables");
            auto it = rep.blocks.find(ring->block_names[b]);
            if (it == rep.blocks.end())
                throw ValidationError("representation misses block " + ring->block_names[b]);
            Cplx x = it->second[r - 1][col - 1];
            for (int i = 0; i < e; ++i) term *= x;
        }
        total += term;
    }
    return total;
}

Cplx phi_direct(const SkeinRing& ring, const Web& web, const Representation& rep) {
    validate_web(ring, web);
    int n = ring.spec.n;
    double d = d_constant(n);
    CMatrix a = numeric_a_matrix(n);

    std::vector<std::pair<Rational, Web>> states = {{Rational(1), web}};
    while (!states.front().second.vertices.empty()) {
        std::vector<std::pair<Rational, Web>> next;
        for (auto& [c, w] : states)
            for (auto& [c2, w2] : expand_vertex(ring, w, 0))
                next.push_back({c * c2, std::move(w2)});
        states = std::move(next);
    }

    Cplx total = 0.0;
    for (auto& [c, w] : states) {
        Cplx prod = (double)c.convert_to<double>();
        for (const StatedArc& arc : w.arcs) {
            CMatrix m = cmat_mul(a, numeric_path(rep, arc.path));
            Cplx v = m[bar(n, arc.state_end) - 1][bar(n, arc.state_start) - 1];
            if (arc.spin == 1) v *= d;
            prod *= v;
        }
        for (const FramedKnot& k : w.knots) {
            Cplx v = cmat_trace(numeric_holonomy(rep, k.word));
            if (k.spin == 1) v *= d;
            prod *= v;
        }
        total += prod;
    }
    return total;
}

double tau_check(const SkeinRing& ring, const Web& web, uint64_t seed, int trials) {
    Poly symbolic = bar_involution(normalize(ring, web));
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        Representation rep = sample_representation(ring, seed + (uint64_t)t);
        Cplx lhs = evaluate(symbolic, rep);
        Cplx rhs = phi_direct(ring, web, rep);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

bool probably_zero(const SkeinRing& ring, const Poly& p, uint64_t seed, int trials, double tol) {
    for (int t = 0; t < trials; ++t) {
        Representation rep = sample_representation(ring, seed + (uint64_t)t);
        if (std::abs(evaluate(p, rep)) > tol) return false;
    }
    return true;
}

// ---- splitting ----

namespace {

struct WordDecomposition {
    // w = v_r g^{e_r} v_{r-1} ... g^{e_1} v_0, the v_t free of generator m.
    std::vector<Word> v;       // v[0] .. v[r]
    std::vector<int> eps;      // eps[0] = e_1 .. eps[r-1] = e_r
};

WordDecomposition decompose(const Word& w, int m) {
    WordDecomposition d;
    d.v.emplace_back();
    // Scan from the rightmost letter, which a path traverses first.
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        if (it->first == m) {
            d.eps.push_back(it->second);
            d.v.emplace_back();
        } else {
            d.v.back().letters.insert(d.v.back().letters.begin(), *it);
        }
    }
    return d;
}

// Marking of the disk copy a strand enters / leaves at a crossing of sign e,
// in the cut manifold whose new markings are k and k+1.
int in_marking(int k, int e) { return e == 1 ? k + 1 : k; }
int out_marking(int k, int e) { return e == 1 ? k : k + 1; }

} // namespace

SplitResult theta_split(const SkeinRing& ring, const Web& web) {
    validate_web(ring, web);
    if (!web.vertices.empty())
        throw UnsupportedError("splitting is defined for webs without vertices");
    int m = ring.spec.group.generator_count;
    if (m < 1) throw ValidationError("splitting requires at least one generator");
    if (ring.spec.markings < 1) throw ValidationError("splitting requires at least one marking");
    for (const Word& r : ring.spec.group.relators)
        for (auto& [g, e] : r.letters)
            if (g == m) throw UnsupportedError("relators may not use the cut generator");
    for (const Circle& c : ring.spec.circles)
        for (auto& [g, e] : c.word.letters)
            if (g == m) throw UnsupportedError("circles may not use the cut generator");

    int k = ring.spec.markings;
    SplitResult result;
    result.cut_spec = ring.spec;
    result.cut_spec.group.generator_count = m - 1;
    result.cut_spec.markings = k + 2;

    int n = ring.spec.n;
    std::vector<Web> partial(1);

    auto extend = [&](const std::vector<std::vector<StatedArc>>& choices) {
        std::vector<Web> next;
        for (const Web& w : partial)
            for (const auto& choice : choices) {
                Web nw = w;
                nw.arcs.insert(nw.arcs.end(), choice.begin(), choice.end());
                next.push_back(std::move(nw));
            }
        partial = std::move(next);
    };

    auto state_tuples = [&](int r) {
        std::vector<std::vector<int>> tuples(1);
        for (int t = 0; t < r; ++t) {
            std::vector<std::vector<int>> next;
            for (auto& tup : tuples)
                for (int s = 1; s <= n; ++s) {
                    auto nt = tup;
                    nt.push_back(s);
                    next.push_back(std::move(nt));
                }
            tuples = std::move(next);
        }
        return tuples;
    };

    for (const StatedArc& arc : web.arcs) {
        WordDecomposition d = decompose(free_reduce(arc.path.core), m);
        int r = (int)d.eps.size();
        if (r == 0) {
            for (Web& w : partial) w.arcs.push_back(arc);
            continue;
        }
        int neg = 0;
        for (int e : d.eps)
            if (e == -1) ++neg;
        std::vector<std::vector<StatedArc>> choices;
        for (const auto& s : state_tuples(r)) {
            std::vector<StatedArc> pieces;
            pieces.push_back({{arc.path.src, in_marking(k, d.eps[0]), d.v[0]},
                              s[0], arc.state_start, 0});
            for (int t = 1; t < r; ++t)
                pieces.push_back({{out_marking(k, d.eps[t - 1]), in_marking(k, d.eps[t]), d.v[t]},
                                  s[t], s[t - 1], 0});
            pieces.push_back({{out_marking(k, d.eps[r - 1]), arc.path.dst, d.v[r]},
                              arc.state_end, s[r - 1], (arc.spin + neg) % 2});
            choices.push_back(std::move(pieces));
        }
        extend(choices);
    }

    for (const FramedKnot& knot : web.knots) {
        WordDecomposition d = decompose(free_reduce(knot.word), m);
        int r = (int)d.eps.size();
        if (r == 0) {
            for (Web& w : partial) w.knots.push_back(knot);
            continue;
        }
        int neg = 0;
        for (int e : d.eps)
            if (e == -1) ++neg;
        std::vector<std::vector<StatedArc>> choices;
        for (const auto& s : state_tuples(r)) {
            std::vector<StatedArc> pieces;
            for (int t = 1; t < r; ++t)
                pieces.push_back({{out_marking(k, d.eps[t - 1]), in_marking(k, d.eps[t]), d.v[t]},
                                  s[t], s[t - 1], 0});
            // Closing piece: leaves the last crossing, runs through v_r, the
            // basepoint, and v_0, and re-enters the first crossing.
            pieces.push_back({{out_marking(k, d.eps[r - 1]), in_marking(k, d.eps[0]),
                               word_concat(d.v[0], d.v[r])},
                              s[0], s[r - 1], (knot.spin + neg) % 2});
            choices.push_back(std::move(pieces));
        }
        extend(choices);
    }

    result.summands = std::move(partial);
    return result;
}

Representation glue_rep(const SkeinRing& original, const SkeinRing& cut,
                        const Representation& cut_rep) {
    int n = original.spec.n;
    int m = original.spec.group.generator_count;
    int k = original.spec.markings;
    if (cut.spec.group.generator_count != m - 1 || cut.spec.markings != k + 2)
        throw ValidationError("cut spec does not match the original");

    Representation rep;
    rep.n = n;
    for (int g = 1; g < m; ++g)
        rep.blocks["g" + std::to_string(g)] = cut_rep.blocks.at("g" + std::to_string(g));
    for (int t = 1; t < k; ++t)
        rep.blocks["c" + std::to_string(t)] = cut_rep.blocks.at("c" + std::to_string(t));
    const CMatrix& ck = cut_rep.blocks.at("c" + std::to_string(k));
    const CMatrix& ck1 = cut_rep.blocks.at("c" + std::to_string(k + 1));
    rep.blocks["g" + std::to_string(m)] =
        cmat_mul(cmat_inverse(ck), cmat_mul(numeric_a_matrix(n), ck1));
    return rep;
}

double split_square_residual(const SkeinRing& ring, const Web& web, uint64_t seed) {
    SplitResult split = theta_split(ring, web);
    SkeinRing cut = build_ring(split.cut_spec);
    Representation cut_rep = sample_representation(cut, seed);
    Cplx lhs = 0.0;
    for (const Web& w : split.summands) lhs += phi_direct(cut, w, cut_rep);
    Representation glued = glue_rep(ring, cut, cut_rep);
    Cplx rhs = phi_direct(ring, web, glued);
    return std::abs(lhs - rhs);
}

} // namespace skeincore
