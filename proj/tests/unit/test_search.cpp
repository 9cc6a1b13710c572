#include "sev/effect_varieties.hpp"
#include "sev/search.hpp"

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

using namespace sev;
using namespace sev::search;

namespace {
std::string golden(const std::string& name) {
    std::ifstream in(std::string(SEV_GOLDEN_DIR) + "/" + name);
    REQUIRE_MESSAGE(in.good(), "missing golden ", name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const ScanBounds kB{};

bool has(const std::vector<ScanRecord>& rows, std::vector<long> n, std::vector<long> d, std::vector<long> e) {
    return std::any_of(rows.begin(), rows.end(), [&](const ScanRecord& r) {
        return r.factors == n && r.degree == d && r.variety_degree == e;
    });
}
}  // namespace

TEST_CASE("hypersurface scan") {
    const auto rows = scan_hypersurfaces(kB.hyp_n, kB.hyp_e, kB.hyp_d);
    CHECK(render_csv(rows) == golden("hypersurfaces.csv"));
    for (long n = 2; n <= kB.hyp_n; ++n) {
        CHECK(has(rows, {n}, {2}, {1}));
    }
    std::vector<std::pair<long, long>> quad;
    for (const auto& r : rows) {
        if (r.variety_degree[0] == 2) quad.push_back({r.factors[0], r.h_lo});
        const long n = r.factors[0], d = r.degree[0], e = r.variety_degree[0];
        CHECK_FALSE((d >= 2 * e && 2 * e >= 6 && n >= 3));
    }
    CHECK(quad == std::vector<std::pair<long, long>>{{2, 5}, {3, 9}, {4, 14}});
    CHECK(rows == known_hypersurface_table(kB.hyp_n, kB.hyp_e, kB.hyp_d));
}

TEST_CASE("rho") {
    CHECK(rho_linear(4, 4) == 3);
    for (long n = 2; n <= 10; ++n)
        for (long h = 2; h <= n; ++h)
            if (2 * (n + 1) * h <= n * n + 3 * n) CHECK(rho_linear(n, h) == 1);
}

TEST_CASE("rho property grid") {
    for (long n = 2; n <= 8; ++n)
        for (long h = 2; h <= n; ++h) {
            const long exact = rho_linear_exact(n, h);
            CHECK(rho_linear(n, h) <= exact);
            CHECK(exact <= h - 1);
            for (long s = 1; s <= h - 1; ++s) {
                const bool sev = effect::classify_alpha_sev(make_system(n, 2, {{2, h}}), LinearSubspace{s, s + 1}).is_sev;
                CHECK_MESSAGE(sev == (exact <= s), "n=", n, " h=", h, " s=", s);
            }
        }
}

TEST_CASE("rnc scan") {
    const auto rows = scan_rnc(kB.rnc_d, kB.rnc_n);
    CHECK(render_csv(rows) == golden("rnc.csv"));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].factors == std::vector<long>{2});
    CHECK(rows[0].degree == std::vector<long>{4});
    CHECK(rows[1].factors == std::vector<long>{4});
    CHECK(rows[1].degree == std::vector<long>{3});
    CHECK_FALSE(has(rows, {3}, {3}, {3}));
    CHECK_FALSE(has(rows, {2}, {3}, {2}));
    CHECK(rnc_exclusion_violations(kB.rnc_d, kB.rnc_n).empty());
    CHECK(rows == known_rnc_table(kB.rnc_d, kB.rnc_n));
}

TEST_CASE("rational curves in P3") {
    const auto cs = scan_rational_curves_p3(kB.curve_d, kB.curve_e);
    CHECK(render_csv(cs.accepted) == golden("p3_curves.csv"));
    CHECK(has(cs.accepted, {3}, {2}, {1}));
    CHECK(has(cs.accepted, {3}, {2}, {2}));
    for (const auto& r : cs.accepted) CHECK(r.degree[0] < 4);
    CHECK_FALSE(cs.excluded.empty());
    CHECK(cs.accepted == known_p3_curve_table(kB.curve_d, kB.curve_e));
}

TEST_CASE("product scans") {
    const auto t2 = scan_product_divisors(2, kB.t2_n, kB.t2_e, kB.t2_d);
    CHECK(render_csv(t2) == golden("products_t2.csv"));
    for (long e2 = 1; e2 <= 4; ++e2) {
        const auto it = std::find_if(t2.begin(), t2.end(), [&](const ScanRecord& r) {
            return r.factors == std::vector<long>{1, 1} && r.degree == std::vector<long>{2, 2 * e2};
        });
        REQUIRE(it != t2.end());
        CHECK(it->h_lo == 2 * e2 + 1);
        CHECK(it->h_hi == 2 * e2 + 1);
    }
    const auto p12 = std::find_if(t2.begin(), t2.end(), [](const ScanRecord& r) {
        return r.factors == std::vector<long>{1, 2} && r.degree == std::vector<long>{4, 2};
    });
    REQUIRE(p12 != t2.end());
    // strict bound: h > 7.5; the table's floor 7 is kept in the note
    CHECK(p12->h_lo == 8);
    CHECK(p12->h_hi == 8);
    CHECK(p12->note.find("table lower bound 7") != std::string::npos);

    const auto t3 = scan_product_divisors(3, kB.t3_n, kB.t3_e, kB.t3_d);
    CHECK(render_csv(t3) == golden("products_t3.csv"));
    std::vector<long> hs;
    for (const auto& r : t3) hs.push_back(r.h_lo);
    CHECK(hs == std::vector<long>{7, 11, 15});
    CHECK(scan_product_divisors(4, kB.t4_n, kB.t4_e, kB.t4_d).empty());
    CHECK(render_csv({}) == golden("products_t4.csv"));

    CHECK(t2 == known_product_table(2, kB.t2_n, kB.t2_e, kB.t2_d));
    CHECK(t3 == known_product_table(3, kB.t3_n, kB.t3_e, kB.t3_d));
}

TEST_CASE("verify_paper_tables") {
    for (const auto& c : verify_paper_tables()) CHECK_MESSAGE(c.pass, c.name, ": ", c.detail);
}

TEST_CASE("verify_lemmas") {
    for (const auto& c : verify_lemmas()) CHECK_MESSAGE(c.pass, c.name, ": ", c.detail);
}

TEST_CASE("AH list membership") {
    CHECK(ah_listed(2, 4, 5));
    CHECK(ah_listed(3, 4, 9));
    CHECK(ah_listed(4, 4, 14));
    CHECK(ah_listed(4, 3, 7));
    CHECK(ah_listed(5, 2, 3));
    CHECK_FALSE(ah_listed(5, 2, 1));
    CHECK_FALSE(ah_listed(2, 5, 6));
}

TEST_CASE("CGG small cases") {
    CHECK(cgg_listed({2, 2}, 3));
    CHECK(cgg_listed({2, 6}, 7));
    CHECK(cgg_listed({6, 2}, 7));
    CHECK(cgg_listed({2, 2, 2}, 7));
    CHECK(cgg_listed({1, 4, 1}, 5));
    CHECK_FALSE(cgg_listed({2, 2}, 4));
    CHECK_FALSE(cgg_listed({3, 1, 1}, 4));

    const oracle::OracleConfig cfg{};
    const auto rep = verify_cgg({4, 10, 2, 8}, cfg);
    CHECK(rep.ok());
    for (const auto& r : rep.special) {
        CHECK(r.expected);
        CHECK_MESSAGE(r.witness_ok, describe(r.system), ": ", r.witness);
        CHECK(r.h0 >= 1);
    }
    const auto it = std::find_if(rep.special.begin(), rep.special.end(), [](const CggRow& r) {
        return r.system.degree == std::vector<long>{2, 1, 1};
    });
    REQUIRE(it != rep.special.end());
    const auto nu = std::find_if(it->checks.begin(), it->checks.end(),
                                 [](const effect::Check& c) { return c.name == "nu_residual_Y1"; });
    REQUIRE(nu != it->checks.end());
    CHECK(nu->pass);
}

TEST_CASE("formatting") {
    CHECK(format_tuple({4, 2}) == "(4,2)");
    ScanRecord r;
    r.h_lo = 8;
    r.h_hi = 9;
    CHECK(format_h(r) == "8..9");
    r.h_hi = 8;
    CHECK(format_h(r) == "8");
    CHECK(render_md({}).rfind("| space | multidegree | variety degree | h | note |", 0) == 0);
}
