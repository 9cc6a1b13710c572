#include "sev/combinatorics.hpp"
#include "sev/errors.hpp"

#include <doctest.h>

using namespace sev;
using namespace sev::comb;

namespace {
// Independent binomial by repeated Pascal addition.
Int pascal(long a, long b) {
    if (b < 0 || b > a) return 0;
    std::vector<Int> row{1};
    for (long i = 1; i <= a; ++i) {
        std::vector<Int> next(i + 1, 1);
        for (long j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
        row = next;
    }
    return row[b];
}
}  // namespace

TEST_CASE("binom") {
    CHECK(binom(6, 2) == 15);
    CHECK(binom(4, 3) == 4);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(3, -1) == 0);
    CHECK_THROWS_AS(binom(-1, 0), DomainError);
    for (long a = 0; a <= 20; ++a)
        for (long b = 0; b <= a; ++b) CHECK(binom(a, b) == pascal(a, b));
}

TEST_CASE("rising") {
    CHECK(rising(5, 0) == 1);
    CHECK(rising(5, -2) == 0);
    CHECK(rising(3, 2) == 20);
    // (r)_(z) = z! binom(r+z, z)
    for (long r = 0; r < 8; ++r)
        for (long z = 0; z < 8; ++z) {
            Int f = 1;
            for (long k = 2; k <= z; ++k) f *= k;
            CHECK(rising(r, z) == f * binom(r + z, z));
        }
}

TEST_CASE("phi_hyp") {
    CHECK(phi_hyp(2, 1, 2) == -1);
    CHECK(phi_hyp(4, 2, 3) == -2);
    CHECK(phi_hyp(4, 2, 5) == 5);
    // phi(2,1,n) = n(1-n)/2; phi(4,2,n) = n(n^3-2n^2-13n+14)/24
    for (long n = 2; n <= 12; ++n) {
        CHECK(phi_hyp(2, 1, n) == Int(n * (1 - n) / 2));
        CHECK(phi_hyp(4, 2, n) == Int(n * (n * n * n - 2 * n * n - 13 * n + 14) / 24));
    }
}

TEST_CASE("psi_hyp_alpha1") {
    CHECK(psi_hyp_alpha1(4, 2, 3) == -2);
    CHECK(psi_hyp_alpha1(2, 1, 2) == -1);
    for (long e = 1; e <= 5; ++e)
        for (long n = 2; n <= 8; ++n) CHECK(psi_hyp_alpha1(2 * e, e, n) == phi_hyp(2 * e, e, n));
    const long d = 5, e = 2, n = 3;
    CHECK(psi_hyp_alpha1(d, e, n) == pascal(d + n, n) - pascal(d - e + n, n) - n * pascal(e + n, n) + n);
}

TEST_CASE("A_ratio") {
    CHECK(A_ratio(3, 3) == Rat(1, 5));
    CHECK(A_ratio(1, 3) == Rat(-3, 2));
    CHECK(A_ratio(4, 3) > A_ratio(3, 3));
}

TEST_CASE("phi_product and eta_product") {
    CHECK(phi_product({2, 2}, {1, 1}, {1, 1}) == -1);
    CHECK(phi_product({2, 2, 2}, {1, 1, 1}, {1, 1, 1}) == -2);
    CHECK(phi_product({2, 2, 2, 2}, {1, 1, 1, 1}, {1, 1, 1, 1}) == 5);
    CHECK(eta_product({1, 1}, {1, 1}) == -1);
    CHECK(eta_product({2, 1}, {1, 2}) == -3);
    CHECK(eta_product({1, 1, 1}, {1, 1, 3}) < 0);
}

TEST_CASE("exact helpers") {
    CHECK(isqrt(Int(48)) == 6);
    CHECK(isqrt(Int(49)) == 7);
    CHECK(is_square(Int(49)));
    CHECK_FALSE(is_square(Int(50)));
    CHECK(floor_div(Int(-7), Int(2)) == -4);
    CHECK(ceil_div(Int(-7), Int(2)) == -3);
    CHECK(ceil_div(Int(7), Int(2)) == 4);
    CHECK(floor_of(Rat(-1, 3)) == -1);
}
