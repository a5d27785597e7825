#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

namespace skeincore {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Permutations of {1..n} in one-line notation (values are 1-based).
using Perm = std::vector<int>;

// All n! permutations in lexicographic order of their one-line notation.
std::vector<Perm> all_permutations(int n);

// Number of inversions: pairs i < j with p[i] > p[j].
int inversion_length(const Perm& p);

// Laurent polynomials in one variable q with integer coefficients,
// exponent -> coefficient, zero coefficients never stored.
class LaurentQPoly {
public:
    LaurentQPoly() = default;
    static LaurentQPoly monomial(long exp, const Integer& coeff = 1);

    LaurentQPoly& operator+=(const LaurentQPoly& o);
    LaurentQPoly operator*(const LaurentQPoly& o) const;
    bool operator==(const LaurentQPoly& o) const { return terms_ == terms_from(o); }

    bool is_zero() const { return terms_.empty(); }
    std::string str() const;

    const std::map<long, Integer>& terms() const { return terms_; }

private:
    static const std::map<long, Integer>& terms_from(const LaurentQPoly& o) { return o.terms_; }
    std::map<long, Integer> terms_;
};

// Quantum integer [k] = (q^k - q^-k)/(q - q^-1) = q^{k-1} + q^{k-3} + ... + q^{1-k}.
LaurentQPoly quantum_integer(int k);

// [k]! = [1][2]...[k].
LaurentQPoly quantum_factorial(int k);

// Checks sum_{sigma in S_k} (q^2)^{inv(sigma)} == [k]! * q^{k(k-1)/2}.
// Returns the difference of the two sides (zero iff the identity holds).
LaurentQPoly q_factorial_identity_defect(int k);

} // namespace skeincore
