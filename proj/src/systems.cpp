#include "sev/systems.hpp"

#include "sev/errors.hpp"

#include <algorithm>
#include <sstream>

namespace sev {

long Space::total_dim() const {
    long s = 0;
    for (long n : factors) s += n;
    return s;
}

long LinearSystem::point_count() const {
    long h = 0;
    for (const auto& g : points) h += g.count;
    return h;
}

long LinearSystem::max_multiplicity() const {
    long m = 0;
    for (const auto& g : points) m = std::max(m, g.multiplicity);
    return m;
}

std::vector<long> LinearSystem::flat_multiplicities() const {
    std::vector<long> out;
    out.reserve(static_cast<std::size_t>(point_count()));
    for (const auto& g : points)
        for (long i = 0; i < g.count; ++i) out.push_back(g.multiplicity);
    return out;
}

void validate(const Space& space) {
    if (space.factors.empty()) throw DomainError("space must have at least one factor");
    for (long n : space.factors)
        if (n < 1) throw DomainError("space factors must be >= 1");
}

void validate(const LinearSystem& sys) {
    validate(sys.space);
    if (sys.degree.size() != sys.space.t())
        throw DomainError("multidegree length must match the number of factors");
    for (long d : sys.degree)
        if (d < 0) throw DomainError("degrees must be >= 0");
    for (const auto& g : sys.points) {
        if (g.multiplicity < 0) throw DomainError("point multiplicity must be >= 0");
        if (g.count < 1) throw DomainError("point count must be >= 1");
    }
}

LinearSystem make_system(long n, long d, std::vector<FatPointGroup> points) {
    LinearSystem sys{Space{{n}}, {d}, std::move(points)};
    validate(sys);
    return sys;
}

LinearSystem make_product_system(std::vector<long> factors, std::vector<long> degree,
                                 std::vector<FatPointGroup> points) {
    LinearSystem sys{Space{std::move(factors)}, std::move(degree), std::move(points)};
    validate(sys);
    return sys;
}

Int monomial_count(const Space& space, const std::vector<long>& degree) {
    validate(space);
    if (degree.size() != space.t()) throw DomainError("multidegree length mismatch");
    Int out = 1;
    for (std::size_t i = 0; i < degree.size(); ++i) {
        if (degree[i] < 0) throw DomainError("degrees must be >= 0");
        out *= comb::binom(degree[i] + space.factors[i], space.factors[i]);
    }
    return out;
}

Int point_conditions(long m, const Space& space) {
    validate(space);
    if (m < 0) throw DomainError("multiplicity must be >= 0");
    if (m == 0) return 0;
    if (space.t() == 1) return comb::binom(m + space.factors[0] - 1, space.factors[0]);
    if (m == 1) return 1;
    if (m == 2) return space.total_dim() + 1;
    throw UnsupportedError("multiplicity >= 3 on a product space has no condition count");
}

Int conditions(const LinearSystem& sys) {
    validate(sys);
    Int c = 0;
    for (const auto& g : sys.points) c += g.count * point_conditions(g.multiplicity, sys.space);
    return c;
}

Int virtual_dim(const LinearSystem& sys) {
    return monomial_count(sys.space, sys.degree) - 1 - conditions(sys);
}

Int expected_dim(const LinearSystem& sys) {
    Int v = virtual_dim(sys);
    return v < -1 ? Int(-1) : v;
}

DimReport dim_report(const LinearSystem& sys) {
    DimReport r;
    r.monomials = monomial_count(sys.space, sys.degree);
    r.conditions = conditions(sys);
    r.virtual_dim = r.monomials - 1 - r.conditions;
    r.expected_dim = r.virtual_dim < -1 ? Int(-1) : r.virtual_dim;
    return r;
}

std::vector<FatPointGroup> group_runs(const std::vector<long>& mults) {
    std::vector<FatPointGroup> out;
    for (long m : mults) {
        if (!out.empty() && out.back().multiplicity == m)
            ++out.back().count;
        else
            out.push_back({m, 1});
    }
    return out;
}

std::string space_label(const Space& space) {
    std::ostringstream os;
    for (std::size_t i = 0; i < space.factors.size(); ++i) {
        if (i) os << 'x';
        os << 'P' << space.factors[i];
    }
    return os.str();
}

std::string describe(const LinearSystem& sys) {
    std::ostringstream os;
    os << "L_{";
    if (sys.space.t() == 1) {
        os << sys.space.factors[0] << ',' << sys.degree[0];
    } else {
        os << '(';
        for (std::size_t i = 0; i < sys.degree.size(); ++i) os << (i ? "," : "") << sys.degree[i];
        os << ')';
    }
    os << "}(";
    for (std::size_t i = 0; i < sys.points.size(); ++i) {
        if (i) os << ',';
        os << sys.points[i].multiplicity;
        if (sys.points[i].count != 1) os << '^' << sys.points[i].count;
    }
    os << ')';
    if (sys.space.t() > 1) os << " on " << space_label(sys.space);
    return os.str();
}

}  // namespace sev
