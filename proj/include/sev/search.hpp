#pragma once

#include "sev/effect_varieties.hpp"
#include "sev/oracle.hpp"

#include <string>
#include <vector>

namespace sev::search {

using effect::Check;
using effect::NamedValue;

// One table row: a system family member together with its h-range.
struct ScanRecord {
    std::vector<long> factors;
    std::vector<long> degree;
    std::vector<long> variety_degree;
    long h_lo = 0;
    long h_hi = 0;
    std::string note;
    std::vector<NamedValue> numbers;

    bool operator==(const ScanRecord& o) const {
        return factors == o.factors && degree == o.degree && variety_degree == o.variety_degree &&
               h_lo == o.h_lo && h_hi == o.h_hi && note == o.note;
    }
};

// Divisors of degree e through h >= n double points, alpha = 2.
std::vector<ScanRecord> scan_hypersurfaces(long n_max, long e_max, long d_max);

// Printed floor formula, and the exact least s satisfying the residual inequality.
long rho_linear(long n, long h);
long rho_linear_exact(long n, long h);

// Rational normal curves with h = n+3, alpha = 2.
std::vector<ScanRecord> scan_rnc(long d_max, long n_max);
// The h <= n+2 and h >= n+4 exclusions on the same grid; returns the violating cells.
std::vector<ScanRecord> rnc_exclusion_violations(long d_max, long n_max, long h_extra = 8);

struct CurveScan {
    std::vector<ScanRecord> accepted;
    std::vector<ScanRecord> excluded;  // pass the three inequalities, fail general position
};
CurveScan scan_rational_curves_p3(long d_max, long e_max);

// Rows are sorted factor-wise by (n, d, e); every row carries its table family label.
std::vector<ScanRecord> scan_product_divisors(long t, long n_max, long e_max, long d_max);

// The same tables generated from the printed family formulas (no scanning).
std::vector<ScanRecord> known_hypersurface_table(long n_max, long e_max, long d_max);
std::vector<ScanRecord> known_rnc_table(long d_max, long n_max);
std::vector<ScanRecord> known_p3_curve_table(long d_max, long e_max);
std::vector<ScanRecord> known_product_table(long t, long n_max, long e_max, long d_max);

struct ScanBounds {
    long hyp_n = 8, hyp_e = 4, hyp_d = 10;
    long rnc_d = 8, rnc_n = 8;
    long curve_d = 8, curve_e = 6;
    long t2_n = 6, t2_e = 4, t2_d = 9;
    long t3_n = 4, t3_e = 3, t3_d = 7;
    long t4_n = 3, t4_e = 2, t4_d = 5;
};

// Scan output vs formula tables, row for row.
std::vector<Check> verify_paper_tables(const ScanBounds& b = {});

struct SpecialRow {
    LinearSystem system;
    long h0 = 0;
    Int nu;
    bool listed = false;
};

struct AhReport {
    long systems = 0;
    std::vector<SpecialRow> special;
    std::vector<std::string> mismatches;
    std::vector<std::string> disagreements;  // prime cross-check
    bool ok() const { return mismatches.empty(); }
};

bool ah_listed(long n, long d, long h);
// Grid n <= n_max, d_lo <= d <= d_hi, 1 <= h <= h_max plus the L_{n,2}(2^h) rows up to n_ah.
AhReport verify_ah(const oracle::OracleConfig& cfg, bool cross = false, long n_max = 4, long d_lo = 2,
                   long d_hi = 5, long h_max = 20, long n_ah = 6);

struct CggRow {
    LinearSystem system;
    long h0 = 0;
    bool expected = false;
    std::string witness;
    bool witness_ok = false;
    std::vector<Check> checks;
};

struct CggBounds {
    long a2 = 8, h2 = 20;
    long a3 = 4, h3 = 15;
};

struct CggReport {
    long systems = 0;
    std::vector<CggRow> special;
    std::vector<std::string> mismatches;
    std::vector<std::string> disagreements;
    bool ok() const { return mismatches.empty(); }
};

bool cgg_listed(const std::vector<long>& a, long h);
CggReport verify_cgg(const CggBounds& b, const oracle::OracleConfig& cfg, bool cross = false);

std::vector<Check> verify_lemmas();

std::string format_tuple(const std::vector<long>& v);
std::string format_h(const ScanRecord& r);
std::string render_csv(const std::vector<ScanRecord>& rows);
std::string render_md(const std::vector<ScanRecord>& rows);

}  // namespace sev::search
