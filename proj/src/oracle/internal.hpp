#pragma once

#include "sev/oracle.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

namespace sev::oracle::detail {

class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t attempt);
    // Uniform in [0, p), unbiased.
    std::uint32_t below(std::uint32_t p);

private:
    std::mt19937_64 eng_;
};

Vec random_vector(Rng& rng, std::size_t len, const PrimeField& f);
bool is_zero(const Vec& v);
bool projectively_equal(const Vec& a, const Vec& b, const PrimeField& f);

// Sparse polynomial over F_p in at most 8 variables; exponents packed into
// 8-bit fields of the key.
using Poly = std::map<std::uint64_t, std::uint32_t>;
Poly poly_mul(const Poly& a, const Poly& b, const PrimeField& f);
std::uint64_t pack_var(unsigned var, unsigned power);

// Map from parameter space into P^n: one polynomial per coordinate.
struct Param {
    std::vector<Poly> coords;
};

Param linear_param(std::span<const Vec> basis);
Param curve_param(const std::vector<Vec>& coeffs);  // coeffs[k] multiplies t^k
Vec eval_curve(const std::vector<Vec>& coeffs, std::uint32_t t, const PrimeField& f);

struct Scene {
    std::vector<Point> points;
    std::vector<Param> params;  // aligned with the scheme list
};

Scene build_scene(const LinearSystem& sys, std::span<const VanishingScheme> schemes,
                  const OracleConfig& cfg, long trial);

std::vector<Vec> scheme_rows(const LinearSystem& sys, const Param& param, long alpha,
                             const PrimeField& field);

std::vector<std::uint32_t> binom_table_row(long top, const PrimeField& f);

}  // namespace sev::oracle::detail
