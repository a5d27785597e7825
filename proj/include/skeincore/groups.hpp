#pragma once

#include "skeincore/polyring.hpp"

#include <string>
#include <vector>

namespace skeincore {

// Freely reduced word in a free group; letters are (generator 1-based, +-1).
struct Word {
    std::vector<std::pair<int, int>> letters;

    bool empty() const { return letters.empty(); }
    std::string str() const;  // "g1*g2^-1*g1", "e" when empty
    bool operator==(const Word& o) const { return letters == o.letters; }
};

// Free reduction: cancel adjacent g^e g^-e until none remain.
Word free_reduce(const Word& w);
Word word_concat(const Word& a, const Word& b);  // a's letters first
Word word_inverse(const Word& w);
// Parses "g1*g2^-1" (also accepts "e" or "" for the empty word).
Word parse_word(const std::string& text);

// A boundary circle carried by the manifold data: a conjugacy word and a
// framing spin bit.
struct Circle {
    Word word;
    int spin = 0;
};

struct GroupPresentation {
    int generator_count = 0;
    std::vector<Word> relators;
};

// Combinatorial stand-in for a marked 3-manifold: matrix size n, a group
// presentation, a number of boundary markings, and framed boundary circles.
struct MarkedManifoldSpec {
    int n = 2;
    GroupPresentation group;
    int markings = 1;
    std::vector<Circle> circles;
};

// Throws ValidationError on out-of-range data (n < 2, generator indices,
// marking count < 0, non-reduced stored words are re-reduced silently).
void validate_manifold(const MarkedManifoldSpec& spec);

// Path in the marking groupoid: from marking `src` to marking `dst`, with a
// core word in the fundamental group.  Marking 0 is the base; markings
// t >= 1 contribute connector blocks c_t on the appropriate side.
struct GroupoidPath {
    int src = 0;
    int dst = 0;
    Word core;
};

// Defined when a.src == b.dst; the composite traverses b first.
GroupoidPath compose_paths(const GroupoidPath& a, const GroupoidPath& b);
GroupoidPath invert_path(const GroupoidPath& p);

// The constant matrix A: A[i][j] = (-1)^{i+1} when j = n+1-i, else 0.
// Satisfies A*A = d_n * I and det(A) = 1, with d_n = (-1)^{n-1}.
PolyMatrix a_matrix(const RingPtr& ring);
inline int d_constant(int n) { return n % 2 == 1 ? 1 : -1; }
inline int bar(int n, int i) { return n + 1 - i; }

// Ring layout for a manifold: blocks g1..gm then c1..c(k-1).
RingPtr manifold_layout(const MarkedManifoldSpec& spec,
                        std::vector<std::string> extra_scalars = {});

// Product of generator block matrices along the word, leftmost letter first;
// inverse letters contribute the adjugate (the inverse modulo det = 1).
PolyMatrix holonomy(const RingPtr& ring, const MarkedManifoldSpec& spec, const Word& w);

// Matrix of a groupoid morphism: C_dst * holonomy(core) * adj(C_src), where
// C_0 = I and C_t is the connector block of marking t.
PolyMatrix morphism_matrix(const RingPtr& ring, const MarkedManifoldSpec& spec,
                           const GroupoidPath& p);

// left * morphism_matrix(p), multiplied one block factor at a time with a
// det-ideal reduction after each step.  Same normal form as reducing the
// full product, but intermediate adj(C) C patterns collapse early instead
// of inflating the term count.
PolyMatrix morphism_chain(PolyMatrix left, const MarkedManifoldSpec& spec,
                          const GroupoidPath& p);

} // namespace skeincore
