#include "skeincore/ideals.hpp"

#include <algorithm>
#include <set>

namespace skeincore {

namespace {

Poly s_polynomial(const Poly& f, const Poly& g) {
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Monomial mf = f.leading_monomial().divide_into(l);
    Monomial mg = g.leading_monomial().divide_into(l);
    return f.times_term(Rational(1) / f.leading_coeff(), mf) -
           g.times_term(Rational(1) / g.leading_coeff(), mg);
}

std::vector<Poly> auto_reduce(std::vector<Poly> basis) {
    // Reduce every element by the others until stable, drop zeros, make monic.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            std::vector<Poly> others;
            for (size_t j = 0; j < basis.size(); ++j)
                if (j != i && !basis[j].is_zero()) others.push_back(basis[j]);
            Poly r = normal_form(basis[i], others);
            if (!(r == basis[i])) changed = true;
            basis[i] = r;
        }
        basis.erase(std::remove_if(basis.begin(), basis.end(),
                                   [](const Poly& p) { return p.is_zero(); }),
                    basis.end());
    }
    for (Poly& p : basis) p = p.scaled(Rational(1) / p.leading_coeff());
    std::sort(basis.begin(), basis.end(), [](const Poly& a, const Poly& b) {
        return grevlex_cmp(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return basis;
}

} // namespace

GroebnerBasis buchberger(const RingPtr& ring, std::vector<Poly> generators, long budget) {
    GroebnerBasis gb;
    gb.ring = ring;
    std::vector<Poly> basis;
    for (Poly& p : generators)
        if (!p.is_zero()) basis.push_back(p.scaled(Rational(1) / p.leading_coeff()));
    if (basis.empty()) return gb;

    struct Pair {
        int i, j;
        Monomial lcm;
    };
    auto pair_less = [](const Pair& a, const Pair& b) {
        int da = a.lcm.degree(), db = b.lcm.degree();
        if (da != db) return da < db;
        int c = grevlex_cmp(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<Pair> pairs;
    auto push_pairs_for = [&](int j) {
        for (int i = 0; i < j; ++i) {
            // Coprime leading terms: the S-polynomial reduces to zero.
            if (basis[i].leading_monomial().coprime(basis[j].leading_monomial())) continue;
            pairs.push_back({i, j, Monomial::lcm(basis[i].leading_monomial(),
                                                 basis[j].leading_monomial())});
        }
    };
    for (int j = 1; j < (int)basis.size(); ++j) push_pairs_for(j);

    while (!pairs.empty()) {
        if (gb.pair_reductions >= budget) {
            gb.complete = false;
            gb.polys = auto_reduce(basis);
            return gb;
        }
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
        Pair p = *it;
        pairs.erase(it);
        ++gb.pair_reductions;
        Poly r = normal_form(s_polynomial(basis[p.i], basis[p.j]), basis);
        if (!r.is_zero()) {
            basis.push_back(r.scaled(Rational(1) / r.leading_coeff()));
            push_pairs_for((int)basis.size() - 1);
        }
    }
    gb.polys = auto_reduce(basis);
    return gb;
}

Poly gb_reduce(const GroebnerBasis& gb, const Poly& p) {
    return normal_form(p, gb.polys);
}

bool is_member(const GroebnerBasis& gb, const Poly& p) {
    Poly r = gb_reduce(gb, p);
    if (r.is_zero()) return true;
    if (!gb.complete)
        throw BudgetError("basis incomplete: membership undecided");
    return false;
}

bool is_nilpotent(const RingPtr& ring, const std::vector<Poly>& generators,
                  const Poly& p, long budget) {
    std::vector<std::string> scalars = ring->scalar_names;
    scalars.push_back("_y");
    RingPtr ext = make_layout(ring->n, ring->block_names, scalars);

    // Transport: blocks keep their indices; old scalars keep relative order.
    std::vector<Poly> images;
    for (int v = 0; v < ring->var_count(); ++v) {
        int b, r, c;
        ring->decode(v, b, r, c);
        if (b >= 0)
            images.push_back(Poly::entry(ext, b, r, c));
        else
            images.push_back(Poly::variable(ext, ext->scalar_var(v - ring->block_count() * ring->n * ring->n)));
    }
    std::vector<Poly> gens;
    for (const Poly& g : generators) gens.push_back(g.substitute(ext, images));
    Poly y = Poly::variable(ext, ext->scalar_var((int)scalars.size() - 1));
    gens.push_back(Poly::constant(ext, 1) - y * p.substitute(ext, images));

    GroebnerBasis gb = buchberger(ext, gens, budget);
    return is_member(gb, Poly::constant(ext, 1));
}

std::vector<Poly> manifold_ideal(const SkeinRing& ring) {
    std::vector<Poly> gens = det_relations(ring.layout);
    int n = ring.spec.n;
    PolyMatrix id = PolyMatrix::identity(ring.layout, n);
    for (const Word& r : ring.spec.group.relators) {
        PolyMatrix diff = holonomy(ring.layout, ring.spec, r) - id;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (!diff.at(i, j).is_zero()) gens.push_back(diff.at(i, j));
    }
    for (const Circle& c : ring.spec.circles) {
        Rational scale = c.spin == 1 ? d_constant(n) : 1;
        PolyMatrix diff = holonomy(ring.layout, ring.spec, c.word) - id.scaled(scale);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (!diff.at(i, j).is_zero()) gens.push_back(diff.at(i, j));
    }
    return gens;
}

} // namespace skeincore
