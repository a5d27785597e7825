#pragma once

#include "skeincore/skein.hpp"

#include <vector>

namespace skeincore {

struct GroebnerBasis {
    RingPtr ring;
    std::vector<Poly> polys;  // auto-reduced, monic, sorted by leading monomial
    bool complete = true;     // false when the pair budget ran out
    long pair_reductions = 0;
};

// Buchberger with the normal selection strategy (smallest lcm degree first,
// grevlex on the lcm as tie break) and the coprime-leading-term criterion.
// `budget` caps the number of S-polynomial reductions; on exhaustion the
// partial basis is returned with complete = false.
GroebnerBasis buchberger(const RingPtr& ring, std::vector<Poly> generators,
                         long budget = 100000);

// Normal form modulo the basis.  Canonical (zero iff member) when complete.
Poly gb_reduce(const GroebnerBasis& gb, const Poly& p);

// Membership test; throws BudgetError if the basis is incomplete and the
// reduction did not reach zero (zero remainder is conclusive either way).
bool is_member(const GroebnerBasis& gb, const Poly& p);

// Radical membership via the auxiliary-variable trick: p is nilpotent modulo
// the ideal of `gb` iff 1 lies in the ideal extended by 1 - y*p, with y a
// fresh scalar variable.
bool is_nilpotent(const RingPtr& ring, const std::vector<Poly>& generators,
                  const Poly& p, long budget = 100000);

// Defining ideal of the manifold's coordinate ring: det(X_b) - 1 for every
// block, the entries of holonomy(r) - I for every relator r, and the entries
// of holonomy(w) - d_n^h * I for every boundary circle (w, h).
std::vector<Poly> manifold_ideal(const SkeinRing& ring);

} // namespace skeincore
