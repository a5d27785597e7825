#pragma once

#include "skeincore/skein.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace skeincore {

using Cplx = std::complex<double>;
using CMatrix = std::vector<std::vector<Cplx>>;  // row-major, 0-based n x n

CMatrix cmat_identity(int n);
CMatrix cmat_mul(const CMatrix& a, const CMatrix& b);
Cplx cmat_det(const CMatrix& a);
CMatrix cmat_inverse(const CMatrix& a);  // via adjugate / det
Cplx cmat_trace(const CMatrix& a);

// Point of the representation variety: one SL_n matrix per ring block.
struct Representation {
    int n = 0;
    std::map<std::string, CMatrix> blocks;
};

// Deterministic pseudo-random SL_n matrix: entries uniform in the complex
// unit square, rescaled by the principal n-th root of the determinant.
// Resamples while |det| < 1e-8; guarantees |det - 1| <= 1e-12 afterwards.
CMatrix sample_sln(int n, uint64_t seed);

// Samples every block of the ring freely, then enforces the circle
// constraints where possible (single-letter circle words force the block to
// d_n^h * I).  Throws UnsupportedError for relators or multi-letter circles.
Representation sample_representation(const SkeinRing& ring, uint64_t seed);

// Naive substitution of block entries for variables.  Scalar variables are
// not allowed.
Cplx evaluate(const Poly& p, const Representation& rep);

// Geometric route: expands vertices by the same determinant rule and takes
// for each arc d_n^spin * [A * rho(path)]_{bar(i), bar(j)} and for each knot
// d_n^spin * trace(rho(word)).
Cplx phi_direct(const SkeinRing& ring, const Web& web, const Representation& rep);

// Compares the symbolic route (evaluate after normalize, composed with the
// bar involution that the commuting diagram requires) against phi_direct.
// Returns the largest residual over `trials` seeded samples.
double tau_check(const SkeinRing& ring, const Web& web, uint64_t seed, int trials);

// Monte Carlo zero test of a normal form over constraint-respecting samples.
bool probably_zero(const SkeinRing& ring, const Poly& p, uint64_t seed, int trials,
                   double tol = 1e-9);

// ---- splitting along a separating disk ----

// Result of cutting along the disk dual to the last generator: the cut
// manifold spec (one generator fewer, two extra markings) and the image of
// the web as a signed sum of webs there.
struct SplitResult {
    MarkedManifoldSpec cut_spec;
    // State sum: each summand is a coefficient (always 1 here; signs live in
    // the arc data) and a web in the cut manifold.
    std::vector<Web> summands;
};

// Splits a web (arcs and knots only) along the disk dual to generator g_m,
// m = generator_count.  Occurrences of g_m in core words become crossings;
// each crossing point receives a summed state shared by the two new
// endpoints.  Requires markings >= 1 and at least one generator.
SplitResult theta_split(const SkeinRing& ring, const Web& web);

// Pushforward of a cut-manifold representation to the original manifold:
// rho(g_i) = rho'(g_i) for i < m, and
// rho(g_m) = adj(rho'(c_k)) * A * rho'(c_{k+1}),
// where c_k, c_{k+1} are the connectors of the two disk-copy markings.
Representation glue_rep(const SkeinRing& original, const SkeinRing& cut,
                        const Representation& cut_rep);

// Residual of the splitting square at one sample: compares
// sum over summands of phi_direct in the cut manifold against
// phi_direct of the original web at the glued representation.
double split_square_residual(const SkeinRing& ring, const Web& web, uint64_t seed);

} // namespace skeincore
