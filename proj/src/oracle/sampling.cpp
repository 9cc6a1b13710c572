#include "internal.hpp"
#include "sev/errors.hpp"

#include <set>
#include <string>

namespace sev::oracle {

namespace detail {

namespace {

constexpr int kMaxAttempts = 64;

Point random_point(Rng& rng, const Space& space, const PrimeField& f) {
    Point pt;
    for (long n : space.factors) pt.coords.push_back(random_vector(rng, static_cast<std::size_t>(n) + 1, f));
    return pt;
}

bool points_ok(const std::vector<Point>& pts, const PrimeField& f) {
    for (const auto& p : pts)
        for (const auto& c : p.coords)
            if (is_zero(c)) return false;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            bool same = true;
            for (std::size_t k = 0; k < pts[i].coords.size() && same; ++k)
                same = projectively_equal(pts[i].coords[k], pts[j].coords[k], f);
            if (same) return false;
        }
    return true;
}

// Distinct parameter values for points on a curve.
std::vector<std::uint32_t> distinct_params(Rng& rng, long count, const PrimeField& f) {
    std::set<std::uint32_t> seen;
    std::vector<std::uint32_t> out;
    while (static_cast<long>(out.size()) < count) {
        const std::uint32_t t = rng.below(f.p);
        if (seen.insert(t).second) out.push_back(t);
    }
    return out;
}

}  // namespace

std::uint64_t pack_var(unsigned var, unsigned power) {
    return static_cast<std::uint64_t>(power) << (8 * var);
}

Poly poly_mul(const Poly& a, const Poly& b, const PrimeField& f) {
    Poly out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            auto& slot = out[ka + kb];
            slot = f.add(slot, f.mul(ca, cb));
        }
    for (auto it = out.begin(); it != out.end();) it = it->second ? std::next(it) : out.erase(it);
    return out;
}

Param linear_param(std::span<const Vec> basis) {
    // x = b_0 + sum_j t_j b_j
    Param prm;
    const std::size_t len = basis[0].size();
    prm.coords.resize(len);
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (!basis[j][i]) continue;
            const std::uint64_t key = j == 0 ? 0 : pack_var(static_cast<unsigned>(j - 1), 1);
            prm.coords[i][key] = basis[j][i];
        }
    }
    return prm;
}

Param curve_param(const std::vector<Vec>& coeffs) {
    Param prm;
    const std::size_t len = coeffs[0].size();
    prm.coords.resize(len);
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            if (coeffs[k][i]) prm.coords[i][pack_var(0, static_cast<unsigned>(k))] = coeffs[k][i];
    return prm;
}

Vec eval_curve(const std::vector<Vec>& coeffs, std::uint32_t t, const PrimeField& f) {
    Vec out(coeffs[0].size(), 0);
    for (std::size_t k = coeffs.size(); k-- > 0;)
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(f.mul(out[i], t), coeffs[k][i]);
    return out;
}

Scene build_scene(const LinearSystem& sys, std::span<const VanishingScheme> schemes,
                  const OracleConfig& cfg, long trial) {
    const PrimeField& f = cfg.prime;
    const long h = sys.point_count();
    const long n = sys.space.factors[0];
    const std::size_t len = static_cast<std::size_t>(n) + 1;

    int constraining = -1;
    for (std::size_t i = 0; i < schemes.size(); ++i) {
        const auto& y = schemes[i].variety;
        if (std::holds_alternative<Hypersurface>(y))
            throw UnsupportedError("hypersurfaces enter the oracle through residual systems only");
        if (sys.space.t() != 1) throw UnsupportedError("vanishing schemes need a single projective factor");
        if (std::holds_alternative<Line>(y)) continue;
        if (constraining >= 0) throw UnsupportedError("at most one subspace or curve scheme per oracle call");
        constraining = static_cast<int>(i);
    }

    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Rng rng(cfg.seed, static_cast<std::uint64_t>(trial), static_cast<std::uint64_t>(attempt));
        Scene sc;
        sc.points.resize(static_cast<std::size_t>(h));
        std::vector<bool> placed(static_cast<std::size_t>(h), false);
        Param carrier;

        if (constraining >= 0) {
            const auto& y = schemes[static_cast<std::size_t>(constraining)].variety;
            if (const auto* ls = std::get_if<LinearSubspace>(&y)) {
                if (ls->s < 1 || ls->s > n - 1) throw DomainError("subspace dimension must lie in [1, n-1]");
                if (ls->through_first > ls->s + 1 || ls->through_first > h || ls->through_first < 0)
                    throw DomainError("a P^s contains at most s+1 general points");
                std::vector<Vec> basis;
                for (long j = 0; j <= ls->s; ++j) basis.push_back(random_vector(rng, len, f));
                for (long j = 0; j < ls->through_first; ++j) {
                    sc.points[static_cast<std::size_t>(j)].coords = {basis[static_cast<std::size_t>(j)]};
                    placed[static_cast<std::size_t>(j)] = true;
                }
                carrier = linear_param(basis);
            } else if (std::holds_alternative<RationalNormalCurve>(y)) {
                if (n < 2) throw DomainError("rational normal curve needs n >= 2");
                std::vector<Vec> coeffs;
                for (long k = 0; k <= n; ++k) coeffs.push_back(random_vector(rng, len, f));
                const long on = std::min(h, n + 3);
                const auto ts = distinct_params(rng, on, f);
                for (long j = 0; j < on; ++j) {
                    sc.points[static_cast<std::size_t>(j)].coords = {eval_curve(coeffs, ts[static_cast<std::size_t>(j)], f)};
                    placed[static_cast<std::size_t>(j)] = true;
                }
                carrier = curve_param(coeffs);
            } else if (const auto* rc = std::get_if<RationalCurveP3>(&y)) {
                if (n != 3) throw DomainError("rational curve scheme lives in P^3");
                if (rc->e < 1) throw DomainError("curve degree must be >= 1");
                std::vector<Vec> coeffs;
                for (long k = 0; k <= rc->e; ++k) coeffs.push_back(random_vector(rng, len, f));
                const auto ts = distinct_params(rng, h, f);
                for (long j = 0; j < h; ++j) {
                    sc.points[static_cast<std::size_t>(j)].coords = {eval_curve(coeffs, ts[static_cast<std::size_t>(j)], f)};
                    placed[static_cast<std::size_t>(j)] = true;
                }
                carrier = curve_param(coeffs);
            }
        }
        for (long j = 0; j < h; ++j)
            if (!placed[static_cast<std::size_t>(j)]) sc.points[static_cast<std::size_t>(j)] = random_point(rng, sys.space, f);
        if (!points_ok(sc.points, f)) continue;

        bool lines_ok = true;
        for (std::size_t i = 0; i < schemes.size(); ++i) {
            if (static_cast<int>(i) == constraining) {
                sc.params.push_back(carrier);
                continue;
            }
            const auto& ln = std::get<Line>(schemes[i].variety);
            if (ln.p < 0 || ln.q < 0 || ln.p >= h || ln.q >= h || ln.p == ln.q)
                throw DomainError("line must join two distinct system points");
            const Vec a = sc.points[static_cast<std::size_t>(ln.p)].coords[0];
            const Vec b = sc.points[static_cast<std::size_t>(ln.q)].coords[0];
            if (projectively_equal(a, b, f)) {
                lines_ok = false;
                break;
            }
            const Vec basis[2] = {a, b};
            sc.params.push_back(linear_param(basis));
        }
        if (!lines_ok) continue;
        return sc;
    }
    throw OracleError("could not sample points in general position after " +
                      std::to_string(kMaxAttempts) + " attempts");
}

}  // namespace detail

std::vector<Point> sample_points(const Space& space, long h, const OracleConfig& cfg,
                                 const Constraint& constraint, long trial) {
    validate(space);
    if (h < 0) throw DomainError("number of points must be >= 0");
    const PrimeField& f = cfg.prime;
    if (std::holds_alternative<CoordinatePoints>(constraint)) {
        if (space.t() != 1) throw OracleError("coordinate points are defined on P^n only");
        const long n = space.factors[0];
        if (h > n + 2) throw OracleError("at most n+2 coordinate-type points exist in general position");
        std::vector<Point> pts;
        for (long j = 0; j < h; ++j) {
            Vec v(static_cast<std::size_t>(n) + 1, j == n + 1 ? 1u : 0u);
            if (j <= n) v[static_cast<std::size_t>(j)] = 1;
            pts.push_back(Point{{v}});
        }
        return pts;
    }
    for (int attempt = 0; attempt < 64; ++attempt) {
        detail::Rng rng(cfg.seed, static_cast<std::uint64_t>(trial), static_cast<std::uint64_t>(attempt));
        std::vector<Point> pts;
        if (const auto* sub = std::get_if<InsideSubspace>(&constraint)) {
            if (space.t() != 1) throw OracleError("subspace constraint is defined on P^n only");
            const long n = space.factors[0];
            if (sub->s < 0 || sub->s > n) throw DomainError("subspace dimension out of range");
            std::vector<Vec> basis;
            for (long j = 0; j <= sub->s; ++j) basis.push_back(detail::random_vector(rng, static_cast<std::size_t>(n) + 1, f));
            for (long j = 0; j < h; ++j) {
                const Vec w = detail::random_vector(rng, basis.size(), f);
                Vec v(static_cast<std::size_t>(n) + 1, 0);
                for (std::size_t b = 0; b < basis.size(); ++b)
                    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(v[i], f.mul(w[b], basis[b][i]));
                pts.push_back(Point{{v}});
            }
        } else {
            for (long j = 0; j < h; ++j) pts.push_back(detail::random_point(rng, space, f));
        }
        const bool ok = detail::points_ok(pts, f);
        if (ok) return pts;
    }
    throw OracleError("could not sample distinct points");
}

}  // namespace sev::oracle
