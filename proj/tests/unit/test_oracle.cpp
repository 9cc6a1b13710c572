#include "sev/errors.hpp"
#include "sev/oracle.hpp"

#include <doctest.h>

using namespace sev;
using namespace sev::oracle;

namespace {
const OracleConfig kCfg{};

long h0(const LinearSystem& s) { return h0_oracle(s, kCfg).h0; }
}  // namespace

TEST_CASE("prime field") {
    CHECK(is_prime(kDefaultPrime));
    CHECK(is_prime(kSecondPrime));
    CHECK(is_prime(kThirdPrime));
    CHECK_FALSE(is_prime(2147483649ull));
    CHECK_THROWS_AS(PrimeField::make(2147483649ull), DomainError);
    CHECK_THROWS_AS(PrimeField::make(1ull << 33), DomainError);
    const auto f = PrimeField::make(101);
    for (std::uint32_t a = 1; a < 101; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.pow(3, 100) == 1);
    CHECK(f.sub(0, 1) == 100);
}

TEST_CASE("sample_points") {
    CHECK(sample_points(Space{{3}}, 0, kCfg).empty());
    const auto coord = sample_points(Space{{3}}, 4, kCfg, CoordinatePoints{});
    REQUIRE(coord.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(coord[i].coords[0][j] == (i == j ? 1u : 0u));
    CHECK(sample_points(Space{{3}}, 5, kCfg) == sample_points(Space{{3}}, 5, kCfg));
    OracleConfig other = kCfg;
    other.seed = 7;
    CHECK_FALSE(sample_points(Space{{3}}, 5, kCfg) == sample_points(Space{{3}}, 5, other));
}

TEST_CASE("fat_point_rows") {
    const auto pts = sample_points(Space{{3}}, 1, kCfg);
    CHECK(fat_point_rows(make_system(3, 3, {}), pts[0], 1, kCfg.prime).size() == 1);
    CHECK(fat_point_rows(make_system(3, 3, {}), pts[0], 2, kCfg.prime).size() == 4);
    const auto sys = make_product_system({1, 1, 1}, {2, 2, 2}, {});
    const auto pp = sample_points(sys.space, 1, kCfg);
    CHECK(fat_point_rows(sys, pp[0], 2, kCfg.prime).size() == 4);
}

TEST_CASE("line_multiplicity_rows") {
    const auto pts = sample_points(Space{{3}}, 2, kCfg);
    const std::vector<VanishingScheme> one{{Line{0, 1}, 1}};
    const std::vector<VanishingScheme> two{{Line{0, 1}, 2}};
    // planes containing a line form a pencil
    CHECK(h0_oracle(make_system(3, 1, {{0, 2}}), kCfg, one).h0 == 2);
    // quadrics singular along a line: products of the two planes
    const auto r = h0_oracle(make_system(3, 2, {{0, 2}}), kCfg, two);
    CHECK(r.h0 == 3);
    CHECK(r.rank == 7);
    const auto rows = line_multiplicity_rows(make_system(3, 2, {}), pts[0], pts[1], 2, kCfg.prime);
    CHECK(rank_mod_p(rows, 10, kCfg.prime) == 7);
    // three lines of the triangle through the 4-fold points
    const std::vector<VanishingScheme> tri{{Line{0, 1}, 2}, {Line{0, 2}, 2}, {Line{1, 2}, 2}};
    CHECK(h0_oracle(make_system(3, 6, {{4, 3}}), kCfg, tri).h0 == 27);
}

TEST_CASE("h0_oracle frozen values") {
    CHECK(h0(make_system(4, 3, {{2, 7}})) == 1);
    CHECK(h0(make_system(3, 6, {{4, 3}})) == 27);
    CHECK(h0(make_system(3, 9, {{6, 1}, {4, 8}})) == 5);
    CHECK(h0(make_system(3, 4, {{2, 9}})) == 1);
    CHECK(h0(make_system(4, 4, {{2, 14}})) == 1);
    CHECK(h0(make_system(2, 4, {{2, 5}})) == 1);
    const auto r = h0_oracle(make_system(3, 9, {{6, 1}, {4, 8}}), kCfg);
    CHECK(r.cols == 220);
    CHECK(r.rows == 216);
    CHECK(r.rank == 215);
    CHECK(r.prime == kDefaultPrime);
    CHECK(r.seed == kDefaultSeed);
}

TEST_CASE("h1_oracle") {
    CHECK(h1_oracle(make_system(3, 2, {{2, 3}}), kCfg) == 3);
    CHECK(h1_oracle(make_system(3, 4, {{2, 9}}), kCfg) == 2);
    CHECK(h1_oracle(make_system(2, 5, {{2, 6}}), kCfg) == 0);
    CHECK(h1_oracle(make_system(3, 3, {{2, 4}}), kCfg) == 0);
}

TEST_CASE("is_special_oracle") {
    CHECK(is_special_oracle(make_system(2, 4, {{2, 5}}), kCfg).special);
    CHECK_FALSE(is_special_oracle(make_system(2, 5, {{2, 6}}), kCfg).special);
    const auto tet = is_special_oracle(make_system(3, 4, {{3, 4}}), kCfg);
    CHECK(tet.special);
    CHECK(tet.h0 == 1);
    CHECK(is_special_oracle(make_product_system({1, 1}, {2, 2}, {{2, 3}}), kCfg).h0 == 1);
    CHECK(is_special_oracle(make_product_system({1, 1, 1}, {2, 2, 2}, {{2, 7}}), kCfg).h0 == 1);
    CHECK(is_special_oracle(make_product_system({1, 1, 1}, {2, 1, 1}, {{2, 3}}), kCfg).special);
}

TEST_CASE("restrict_to_subspace") {
    CHECK(restrict_to_subspace(make_system(5, 2, {{2, 3}}), 2, 3) == make_system(2, 2, {{2, 3}}));
    CHECK(restrict_to_subspace(make_system(3, 6, {{4, 3}}), 2, 3) == make_system(2, 6, {{4, 3}}));
    const auto s = make_system(3, 6, {{4, 3}});
    CHECK(restrict_to_subspace(s, 3, 3) == s);
    CHECK(is_special_oracle(make_system(2, 6, {{4, 3}}), kCfg).special);
}

TEST_CASE("cross_check and semicontinuity") {
    const auto before = invariant_stats();
    const auto cc = cross_check(make_system(3, 9, {{6, 1}, {4, 8}}), kCfg);
    CHECK(cc.agreed);
    CHECK(cc.h0 == 5);
    CHECK(cc.second.prime == kSecondPrime);
    CHECK(cc.second.seed != cc.first.seed);
    CHECK_FALSE(cc.third.has_value());
    const auto after = invariant_stats();
    CHECK(after.checks > before.checks);
    CHECK(after.violations == 0);
}

TEST_CASE("determinism across calls") {
    const auto a = h0_oracle(make_system(3, 5, {{2, 10}}), kCfg);
    const auto b = h0_oracle(make_system(3, 5, {{2, 10}}), kCfg);
    CHECK(a.h0 == b.h0);
    CHECK(a.rank == b.rank);
}
