#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeincore/combinatorics.hpp"

using namespace skeincore;

TEST_CASE("permutations of small sets") {
    CHECK(all_permutations(1).size() == 1);
    CHECK(all_permutations(3).size() == 6);
    CHECK(all_permutations(4).size() == 24);
    // lexicographic order of one-line notation
    auto p3 = all_permutations(3);
    CHECK(p3.front() == Perm{1, 2, 3});
    CHECK(p3.back() == Perm{3, 2, 1});
}

TEST_CASE("inversion counts") {
    CHECK(inversion_length({1, 2, 3}) == 0);
    CHECK(inversion_length({2, 1, 3}) == 1);
    CHECK(inversion_length({3, 2, 1}) == 3);
    CHECK(inversion_length({4, 3, 2, 1}) == 6);
    // longest element of S_n has n(n-1)/2 inversions
    for (int n = 2; n <= 6; ++n) {
        Perm w;
        for (int i = n; i >= 1; --i) w.push_back(i);
        CHECK(inversion_length(w) == n * (n - 1) / 2);
    }
}

TEST_CASE("quantum integers and factorials") {
    CHECK(quantum_integer(1).str() == "1");
    CHECK(quantum_integer(2).str() == "q + q^-1");
    CHECK(quantum_integer(3).str() == "q^2 + 1 + q^-2");
    // [2]! = [2] = q + q^-1; [3]! = [3][2][1]
    CHECK(quantum_factorial(2).str() == "q + q^-1");
    CHECK((quantum_integer(3) * quantum_integer(2)) == quantum_factorial(3));
    // specialization at q = 1 is k!
    auto sum_coeffs = [](const LaurentQPoly& p) {
        Integer s = 0;
        for (auto& [e, c] : p.terms()) s += c;
        return s;
    };
    CHECK(sum_coeffs(quantum_factorial(4)) == 24);
    CHECK(sum_coeffs(quantum_factorial(6)) == 720);
}

TEST_CASE("inversion generating function equals shifted q-factorial") {
    for (int k = 0; k <= 8; ++k) {
        CAPTURE(k);
        CHECK(q_factorial_identity_defect(k).is_zero());
    }
}
