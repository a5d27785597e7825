#pragma once

#include "skeincore/combinatorics.hpp"
#include "skeincore/errors.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace skeincore {

// Variable universe of a polynomial ring: a list of n x n matrix blocks
// (generator matrices first, then connector matrices) and optional trailing
// scalar variables (used by the radical-membership trick).
//
// Global variable order, from smallest to largest:
//   block 0 row-major, block 1 row-major, ..., then scalars in list order.
struct RingLayout {
    int n = 0;
    std::vector<std::string> block_names;
    std::vector<std::string> scalar_names;

    int block_count() const { return (int)block_names.size(); }
    int var_count() const { return block_count() * n * n + (int)scalar_names.size(); }

    // row, col are 1-based.
    int var(int block, int row, int col) const;
    int scalar_var(int index) const { return block_count() * n * n + index; }

    std::string var_name(int v) const;
    // Inverse of var(): block, row, col for a matrix variable (block = -1 for scalars).
    void decode(int v, int& block, int& row, int& col) const;

    bool operator==(const RingLayout& o) const {
        return n == o.n && block_names == o.block_names && scalar_names == o.scalar_names;
    }
};

using RingPtr = std::shared_ptr<const RingLayout>;

RingPtr make_layout(int n, std::vector<std::string> blocks,
                    std::vector<std::string> scalars = {});

// Monomial: sorted (variable, exponent>0) pairs.
struct Monomial {
    std::vector<std::pair<int, int>> factors;

    int degree() const;
    int exponent(int v) const;
    bool is_one() const { return factors.empty(); }
    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // o / *this, caller must ensure divisibility.
    Monomial divide_into(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return factors == o.factors; }
};

// Graded reverse lexicographic order.  Returns <0, 0, >0 like strcmp.
int grevlex_cmp(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_cmp(a, b) > 0; }
};

// Sparse multivariate polynomial with exact rational coefficients over a
// fixed RingLayout.  Terms are kept in descending grevlex order, so the
// leading term is always the first map entry.  A hard cap on the number of
// stored terms guards against blowup; exceeding it throws BudgetError.
class Poly {
public:
    static inline size_t term_cap = 4000000;

    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly constant(RingPtr ring, const Rational& c);
    static Poly variable(RingPtr ring, int v);
    static Poly entry(RingPtr ring, int block, int row, int col);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    size_t term_count() const { return terms_.size(); }
    int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

    const Monomial& leading_monomial() const;
    const Rational& leading_coeff() const;
    const std::map<Monomial, Rational, GrevlexGreater>& terms() const { return terms_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly scaled(const Rational& c) const;
    Poly times_term(const Rational& c, const Monomial& m) const;
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    void add_term(const Monomial& m, const Rational& c);

    // Canonical text form, e.g. "3/2*g1[1][1]^2*c1[2][2] - 1".
    std::string str() const;

    // Substitution of variable -> polynomial in a (possibly different) ring.
    Poly substitute(RingPtr target, const std::vector<Poly>& images) const;

private:
    void check_ring(const Poly& o) const;
    void enforce_cap() const;
    RingPtr ring_;
    std::map<Monomial, Rational, GrevlexGreater> terms_;
};

// Parses the canonical text form back into a polynomial over `ring`.
// Round-trips with Poly::str() bit-exactly.
Poly parse_poly(const RingPtr& ring, const std::string& text);

// Dense matrix of polynomials.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(RingPtr ring, int rows, int cols);
    static PolyMatrix identity(RingPtr ring, int n);
    static PolyMatrix block(RingPtr ring, int block_index);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const RingPtr& ring() const { return ring_; }
    // 1-based access, matching the mathematical indexing used throughout.
    Poly& at(int r, int c) { return data_[(r - 1) * cols_ + (c - 1)]; }
    const Poly& at(int r, int c) const { return data_[(r - 1) * cols_ + (c - 1)]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix scaled(const Rational& c) const;
    bool operator==(const PolyMatrix& o) const;

    Poly trace() const;
    Poly det() const;          // permutation expansion; fine for n <= 5
    PolyMatrix adjugate() const;

private:
    RingPtr ring_;
    int rows_ = 0, cols_ = 0;
    std::vector<Poly> data_;
};

// det(X_b) - 1 for every matrix block of the layout.
std::vector<Poly> det_relations(const RingPtr& ring);

// Remainder of p on division by {det(X_b) - 1 : all blocks}.  Because the
// leading monomials of these generators live in pairwise disjoint variable
// blocks, they are pairwise coprime, so the set is already a Groebner basis
// and the remainder is the canonical normal form modulo the det ideal.
Poly reduce_by_dets(const Poly& p);
PolyMatrix reduce_by_dets(const PolyMatrix& m);

// Multivariate division: remainder of p by the given divisor list.
Poly normal_form(const Poly& p, const std::vector<Poly>& divisors);

} // namespace skeincore
