#pragma once

#include "sev/combinatorics.hpp"

#include <string>
#include <vector>

namespace sev {

struct Space {
    std::vector<long> factors;

    std::size_t t() const { return factors.size(); }
    long total_dim() const;
    bool operator==(const Space&) const = default;
};

struct FatPointGroup {
    long multiplicity = 1;
    long count = 1;
    bool operator==(const FatPointGroup&) const = default;
};

struct LinearSystem {
    Space space;
    std::vector<long> degree;
    std::vector<FatPointGroup> points;

    long point_count() const;
    long max_multiplicity() const;
    // One entry per point, groups expanded in order.
    std::vector<long> flat_multiplicities() const;
    bool operator==(const LinearSystem&) const = default;
};

struct DimReport {
    Int monomials;
    Int conditions;
    Int virtual_dim;
    Int expected_dim;
};

void validate(const Space& space);
void validate(const LinearSystem& sys);

LinearSystem make_system(long n, long d, std::vector<FatPointGroup> points);
LinearSystem make_product_system(std::vector<long> factors, std::vector<long> degree,
                                 std::vector<FatPointGroup> points);

Int monomial_count(const Space& space, const std::vector<long>& degree);
Int point_conditions(long m, const Space& space);
Int conditions(const LinearSystem& sys);
Int virtual_dim(const LinearSystem& sys);
Int expected_dim(const LinearSystem& sys);
DimReport dim_report(const LinearSystem& sys);

// Rebuilds point groups from a per-point multiplicity list, merging runs.
std::vector<FatPointGroup> group_runs(const std::vector<long>& mults);

// Short human label, e.g. "L_{3,9}(6,4^8)" or "L_{(2,2)}(2^3) on P1xP1".
std::string describe(const LinearSystem& sys);
std::string space_label(const Space& space);

}  // namespace sev
