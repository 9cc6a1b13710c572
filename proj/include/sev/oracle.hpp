#pragma once

#include "sev/simd/kernels.hpp"
#include "sev/systems.hpp"
#include "sev/variety.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace sev::oracle {

inline constexpr std::uint32_t kDefaultPrime = 2147483647u;
inline constexpr std::uint32_t kSecondPrime = 2147483629u;
inline constexpr std::uint32_t kThirdPrime = 2147483587u;
inline constexpr std::uint64_t kDefaultSeed = 0x5eedULL;

bool is_prime(std::uint64_t v);

struct PrimeField {
    std::uint32_t p = kDefaultPrime;

    // Validates primality and the word-size bound.
    static PrimeField make(std::uint64_t p);
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t a) const;
};

struct OracleConfig {
    PrimeField prime;
    long trials = 3;
    std::uint64_t seed = kDefaultSeed;
};

struct OracleResult {
    long h0 = 0;
    std::optional<long> h1;  // only for pure fat-point systems
    long rank = 0;
    long rows = 0;
    long cols = 0;
    bool special = false;
    long trials_used = 0;
    std::uint32_t prime = 0;
    std::uint64_t seed = 0;
};

using Vec = std::vector<std::uint32_t>;

// Homogeneous coordinates, one vector per factor.
struct Point {
    std::vector<Vec> coords;
    bool operator==(const Point&) const = default;
};

struct NoConstraint {};
struct InsideSubspace {
    long s = 1;
};
struct CoordinatePoints {};
using Constraint = std::variant<NoConstraint, InsideSubspace, CoordinatePoints>;

std::vector<Point> sample_points(const Space& space, long h, const OracleConfig& cfg,
                                 const Constraint& constraint = NoConstraint{}, long trial = 0);

// Column order of every interpolation matrix: concatenated exponent vectors.
std::vector<std::vector<long>> monomial_exponents(const Space& space,
                                                  const std::vector<long>& degree);

std::vector<Vec> fat_point_rows(const LinearSystem& sys, const Point& point, long m,
                                const PrimeField& field);
std::vector<Vec> line_multiplicity_rows(const LinearSystem& sys, const Point& a, const Point& b,
                                        long alpha, const PrimeField& field);

long rank_mod_p(const std::vector<Vec>& rows, std::size_t cols, const PrimeField& field,
                const simd::KernelSet& k = simd::active());

// A variety the interpolation matrix must vanish on to order alpha.
struct VanishingScheme {
    EffectVariety variety;
    long alpha = 1;
};

OracleResult h0_oracle(const LinearSystem& sys, const OracleConfig& cfg,
                       std::span<const VanishingScheme> schemes = {});
long h1_oracle(const LinearSystem& sys, const OracleConfig& cfg);
OracleResult is_special_oracle(const LinearSystem& sys, const OracleConfig& cfg);
LinearSystem restrict_to_subspace(const LinearSystem& sys, long s, long points_on);

// Same computation under two primes and seeds; a third settles disagreement.
struct CrossCheck {
    OracleResult first;
    OracleResult second;
    std::optional<OracleResult> third;
    bool agreed = true;
    long h0 = 0;
};
CrossCheck cross_check(const LinearSystem& sys, const OracleConfig& cfg,
                       std::span<const VanishingScheme> schemes = {});

struct InvariantStats {
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
};
InvariantStats invariant_stats();

// Thin immutable handle passed to classification code.
class Oracle {
public:
    explicit Oracle(OracleConfig cfg = {}) : cfg_(cfg) {}
    const OracleConfig& config() const { return cfg_; }
    OracleResult h0(const LinearSystem& sys, std::span<const VanishingScheme> schemes = {}) const {
        return h0_oracle(sys, cfg_, schemes);
    }
    long h1(const LinearSystem& sys) const { return h1_oracle(sys, cfg_); }

private:
    OracleConfig cfg_;
};

}  // namespace sev::oracle
