#include "skeincore/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace skeincore {

std::vector<Perm> all_permutations(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int inversion_length(const Perm& p) {
    int count = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++count;
    return count;
}

LaurentQPoly LaurentQPoly::monomial(long exp, const Integer& coeff) {
    LaurentQPoly r;
    if (coeff != 0) r.terms_[exp] = coeff;
    return r;
}

LaurentQPoly& LaurentQPoly::operator+=(const LaurentQPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        Integer& slot = terms_[e];
        slot += c;
        if (slot == 0) terms_.erase(e);
    }
    return *this;
}

LaurentQPoly LaurentQPoly::operator*(const LaurentQPoly& o) const {
    LaurentQPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Integer& slot = r.terms_[e1 + e2];
            slot += c1 * c2;
            if (slot == 0) r.terms_.erase(e1 + e2);
        }
    return r;
}

std::string LaurentQPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest exponent first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Integer c = it->second;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        long e = it->first;
        if (e == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentQPoly quantum_integer(int k) {
    LaurentQPoly r;
    for (int e = k - 1; e >= 1 - k; e -= 2) r += LaurentQPoly::monomial(e);
    return r;
}

LaurentQPoly quantum_factorial(int k) {
    LaurentQPoly r = LaurentQPoly::monomial(0);
    for (int i = 1; i <= k; ++i) r = r * quantum_integer(i);
    return r;
}

LaurentQPoly q_factorial_identity_defect(int k) {
    LaurentQPoly lhs;
    for (const Perm& p : all_permutations(k))
        lhs += LaurentQPoly::monomial(2L * inversion_length(p));
    LaurentQPoly rhs = quantum_factorial(k) * LaurentQPoly::monomial(1L * k * (k - 1) / 2);
    lhs += rhs * LaurentQPoly::monomial(0, -1);
    return lhs;
}

} // namespace skeincore
