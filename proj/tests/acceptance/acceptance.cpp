// Acceptance runner: one pass/fail line per criterion.
// Usage: acceptance [criterion...]; no arguments runs all seven.

#include "sev/effect_varieties.hpp"
#include "sev/search.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace sev;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> failures;
    std::string summary;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
};

const oracle::OracleConfig kCfg{};

// h0 under two primes; records a failure if they disagree.
long h0_both(const LinearSystem& s, Outcome& o, std::span<const oracle::VanishingScheme> schemes = {}) {
    const auto cc = oracle::cross_check(s, kCfg, schemes);
    o.expect(cc.agreed, "prime disagreement on " + describe(s));
    return cc.h0;
}

bool special_both(const LinearSystem& s, Outcome& o) {
    const auto cc = oracle::cross_check(s, kCfg);
    o.expect(cc.agreed, "prime disagreement on " + describe(s));
    return cc.first.special && cc.second.special;
}

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(SEV_GOLDEN_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome criterion1() {
    Outcome o;
    long rows = 0;
    for (long n = 2; n <= 6; ++n)
        for (long h = 2; h <= n; ++h, ++rows)
            o.expect(special_both(make_system(n, 2, {{2, h}}), o), "L_{n,2}(2^h) not special at n=" + std::to_string(n));
    for (const auto& s : {make_system(2, 4, {{2, 5}}), make_system(3, 4, {{2, 9}}), make_system(4, 4, {{2, 14}}),
                          make_system(4, 3, {{2, 7}})}) {
        ++rows;
        o.expect(special_both(s, o), describe(s) + " not special");
        const long h0 = h0_both(s, o);
        o.expect(h0 == 1, describe(s) + " h0=" + std::to_string(h0));
    }
    const auto rep = search::verify_ah(kCfg, true);
    o.expect(rep.ok(), rep.ok() ? "" : rep.mismatches.front());
    o.expect(rep.disagreements.empty(), "prime disagreements on the grid");
    o.summary = std::to_string(rows) + " listed rows special; grid " + std::to_string(rep.systems) + " systems, " +
                std::to_string(rep.special.size()) + " special, " + std::to_string(rep.mismatches.size()) +
                " mismatches";
    return o;
}

Outcome criterion2() {
    Outcome o;
    oracle::OracleConfig second = kCfg;
    second.prime = oracle::PrimeField::make(oracle::kSecondPrime);
    second.seed = kCfg.seed + 1;
    long n_checked = 0;
    auto check = [&](const LinearSystem& s, long want) {
        const long a = oracle::h1_oracle(s, kCfg), b = oracle::h1_oracle(s, second);
        o.expect(a == b, "prime disagreement on h1 of " + describe(s));
        o.expect(a == want, describe(s) + " h1=" + std::to_string(a) + " want " + std::to_string(want));
        ++n_checked;
    };
    for (long n = 2; n <= 6; ++n)
        for (long h = 2; h <= n; ++h) check(make_system(n, 2, {{2, h}}), h * (h - 1) / 2);
    check(make_system(3, 4, {{2, 9}}), 2);
    o.summary = std::to_string(n_checked) + " h1 values exact under two primes";
    return o;
}

Outcome criterion3() {
    Outcome o;
    const auto lu = make_system(3, 9, {{6, 1}, {4, 8}});
    o.expect(virtual_dim(lu) == 3, "nu(L) != 3");
    const long h0 = h0_both(lu, o);
    o.expect(h0 == 5, "h0=" + std::to_string(h0));
    const Hypersurface q{{2}, {{0, 1}, {1, 1}}};
    const auto c = effect::classify_alpha_sev(lu, q);
    o.expect(c.is_sev && c.alpha_max == 1, "quadric not a 1-SEV");
    const auto h1 = effect::h1_sev_check(lu, q, oracle::Oracle(kCfg));
    o.expect(h1.cond_a && h1.cond_b && h1.cond_c, "h1 conditions do not all hold");
    o.summary = "nu=3, h0=5, quadric alpha=" + std::to_string(c.alpha_max) + " nu_residual=" + c.nu_residual.get_str() +
                ", h1 conditions (a,b,c)=" + std::to_string(h1.cond_a) + std::to_string(h1.cond_b) +
                std::to_string(h1.cond_c);
    return o;
}

Outcome criterion4() {
    Outcome o;
    const auto ex = make_system(3, 6, {{4, 3}});
    const long h0 = h0_both(ex, o);
    o.expect(h0 == 27, "h0=" + std::to_string(h0));
    const auto plane = effect::classify_alpha_sev(ex, LinearSubspace{2, 3});
    const auto nu2 = plane.value("nu_alpha_2");
    o.expect(plane.is_sev && plane.alpha_max == 1 && plane.nu_residual == 25, "plane is not a 1-SEV with residual 25");
    o.expect(nu2 && *nu2 == 22, "nu(L-2Y) != 22");
    const auto restricted = oracle::restrict_to_subspace(ex, 2, 3);
    o.expect(restricted == make_system(2, 6, {{4, 3}}), "restriction is not L_{2,6}(4^3)");
    o.expect(special_both(restricted, o), "L_{2,6}(4^3) not special");
    const std::vector<effect::ConfigStep> lines{{Line{0, 1}, 2}, {Line{0, 2}, 2}, {Line{1, 2}, 2}};
    const auto conf = effect::classify_configuration(ex, lines, oracle::Oracle(kCfg));
    o.expect(conf.is_sev, "three-line configuration rejected");
    const std::vector<oracle::VanishingScheme> schemes{{Line{0, 1}, 2}, {Line{0, 2}, 2}, {Line{1, 2}, 2}};
    o.expect(h0_both(ex, o, schemes) == 27, "three-line scheme h0 != 27");
    o.summary = "dim 26, plane nu 25/22, L_{2,6}(4^3) special, three-line configuration accepted";
    return o;
}

Outcome criterion5() {
    Outcome o;
    const search::ScanBounds b;
    const auto cmp = [&](const std::vector<search::ScanRecord>& rows, const std::string& file) {
        o.expect(search::render_csv(rows) == read_golden(file), file + " differs");
    };
    cmp(search::scan_hypersurfaces(b.hyp_n, b.hyp_e, b.hyp_d), "hypersurfaces.csv");
    cmp(search::scan_rnc(b.rnc_d, b.rnc_n), "rnc.csv");
    cmp(search::scan_rational_curves_p3(b.curve_d, b.curve_e).accepted, "p3_curves.csv");
    cmp(search::scan_product_divisors(2, b.t2_n, b.t2_e, b.t2_d), "products_t2.csv");
    cmp(search::scan_product_divisors(3, b.t3_n, b.t3_e, b.t3_d), "products_t3.csv");
    const auto t4 = search::scan_product_divisors(4, b.t4_n, b.t4_e, b.t4_d);
    o.expect(t4.empty(), "t=4 grid not empty");
    cmp(t4, "products_t4.csv");
    for (const auto& c : search::verify_paper_tables(b)) o.expect(c.pass, c.name + ": " + c.detail);
    o.summary = "six golden tables and formula tables match";
    return o;
}

Outcome criterion6() {
    Outcome o;
    const auto rep = search::verify_cgg({}, kCfg, true);
    o.expect(rep.ok(), rep.ok() ? "" : rep.mismatches.front());
    o.expect(rep.disagreements.empty(), "prime disagreements");
    long witnesses = 0;
    for (const auto& r : rep.special) {
        o.expect(r.expected, describe(r.system) + " unexpected");
        if (r.witness_ok) ++witnesses;
    }
    o.summary = std::to_string(rep.systems) + " systems, " + std::to_string(rep.special.size()) +
                " special, special set equals the list; " + std::to_string(witnesses) + " witnesses confirmed";
    return o;
}

Outcome criterion7() {
    Outcome o;
    long cases = 0;
    for (const auto& c : search::verify_lemmas()) {
        o.expect(c.pass, c.name + ": " + c.detail);
        ++cases;
    }
    // Semicontinuity and prime agreement over the oracle workload of criteria 1-6.
    const auto ah = search::verify_ah(kCfg, true);
    const auto cgg = search::verify_cgg({}, kCfg, true);
    o.expect(ah.disagreements.empty() && cgg.disagreements.empty(), "prime disagreements");
    for (const auto& s : {make_system(3, 9, {{6, 1}, {4, 8}}), make_system(3, 6, {{4, 3}}), make_system(2, 6, {{4, 3}})})
        h0_both(s, o);
    const auto st = oracle::invariant_stats();
    o.expect(st.checks > 0, "no semicontinuity checks ran");
    o.expect(st.violations == 0, std::to_string(st.violations) + " semicontinuity violations");
    o.summary = std::to_string(cases) + " lemma suites pass; " + std::to_string(st.checks) +
                " oracle calls with h0 >= nu+1, " + std::to_string(st.violations) + " violations";
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all{
        {1, "AH reproduction", 60, criterion1},       {2, "h1 values", 5, criterion2},
        {3, "Laface-Ugaglia example", 10, criterion3}, {4, "L_{3,6}(4^3) example", 10, criterion4},
        {5, "table regressions", 30, criterion5},      {6, "CGG verification", 120, criterion6},
        {7, "property suites", 600, criterion7},
    };
    std::vector<int> want;
    for (int i = 1; i < argc; ++i) want.push_back(std::atoi(argv[i]));
    if (want.empty())
        for (const auto& c : all) want.push_back(c.id);

    bool ok = true;
    for (int id : want) {
        if (id < 1 || id > static_cast<int>(all.size())) {
            std::cerr << "unknown criterion " << id << "\n";
            return 2;
        }
        const auto& c = all[static_cast<std::size_t>(id - 1)];
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs >= c.limit_s) o.expect(false, "runtime over " + std::to_string(static_cast<int>(c.limit_s)) + " s");
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "criterion " << c.id << " [" << c.name << "]: " << (o.pass ? "PASS" : "FAIL") << " (" << secs
             << " s) " << o.summary;
        for (const auto& f : o.failures) line << "; " << f;
        std::cout << line.str() << std::endl;
        ok = ok && o.pass;
    }
    return ok ? 0 : 1;
}
