#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sev {

// Divisor of multidegree `degree` containing the points of group g with
// multiplicity at least c for every (g, c) listed.
struct Hypersurface {
    std::vector<long> degree;
    std::vector<std::pair<std::size_t, long>> point_mults;
};

// P^s spanned by (or containing) the first `through_first` points.
struct LinearSubspace {
    long s = 1;
    long through_first = 2;
};

// Degree-n rational normal curve through the first min(h, n+3) points.
struct RationalNormalCurve {};

// Smooth rational curve of degree e in P^3 through all points.
struct RationalCurveP3 {
    long e = 1;
};

// Line through two points, by flattened point index.
struct Line {
    long p = 0;
    long q = 1;
};

using EffectVariety =
    std::variant<Hypersurface, LinearSubspace, RationalNormalCurve, RationalCurveP3, Line>;

std::string variety_label(const EffectVariety& y);

}  // namespace sev
