#include "internal.hpp"
#include "sev/errors.hpp"

#include <algorithm>

namespace sev::oracle {

namespace {

void enumerate_exact(std::size_t vars, long total, std::vector<long>& cur, std::size_t pos,
                     std::vector<std::vector<long>>& out) {
    if (pos + 1 == vars) {
        cur[pos] = total;
        out.push_back(cur);
        return;
    }
    for (long e = total; e >= 0; --e) {
        cur[pos] = e;
        enumerate_exact(vars, total - e, cur, pos + 1, out);
    }
}

std::vector<std::vector<long>> exponents_exact(std::size_t vars, long total) {
    std::vector<std::vector<long>> out;
    if (vars == 0) {
        if (total == 0) out.emplace_back();
        return out;
    }
    std::vector<long> cur(vars, 0);
    enumerate_exact(vars, total, cur, 0, out);
    return out;
}

std::vector<std::vector<std::uint32_t>> binom_table(long top, const PrimeField& f) {
    std::vector<std::vector<std::uint32_t>> t;
    for (long a = 0; a <= top; ++a) t.push_back(detail::binom_table_row(a, f));
    return t;
}

long max_degree(const LinearSystem& sys) {
    long d = 0;
    for (long x : sys.degree) d = std::max(d, x);
    return d;
}

}  // namespace

std::vector<std::vector<long>> monomial_exponents(const Space& space, const std::vector<long>& degree) {
    validate(space);
    if (degree.size() != space.t()) throw DomainError("multidegree length mismatch");
    std::vector<std::vector<long>> out{{}};
    for (std::size_t i = 0; i < space.t(); ++i) {
        const auto part = exponents_exact(static_cast<std::size_t>(space.factors[i]) + 1, degree[i]);
        std::vector<std::vector<long>> next;
        next.reserve(out.size() * part.size());
        for (const auto& head : out)
            for (const auto& tail : part) {
                auto v = head;
                v.insert(v.end(), tail.begin(), tail.end());
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<Vec> fat_point_rows(const LinearSystem& sys, const Point& point, long m,
                                const PrimeField& field) {
    validate(sys);
    if (m < 0) throw DomainError("multiplicity must be >= 0");
    if (sys.space.t() >= 2 && m >= 3) throw UnsupportedError("multiplicity >= 3 on a product space");
    if (point.coords.size() != sys.space.t()) throw DomainError("point does not match the space");
    if (m == 0) return {};

    // Normalize each factor so its largest-index nonzero coordinate is 1.
    std::vector<std::uint32_t> coord;
    std::vector<std::size_t> affine;
    for (std::size_t i = 0; i < sys.space.t(); ++i) {
        const Vec& v = point.coords[i];
        if (v.size() != static_cast<std::size_t>(sys.space.factors[i]) + 1)
            throw DomainError("point factor has the wrong length");
        std::size_t chart = v.size();
        for (std::size_t k = v.size(); k-- > 0;)
            if (v[k] % field.p) {
                chart = k;
                break;
            }
        if (chart == v.size()) throw DomainError("point factor is zero");
        const std::uint32_t s = field.inv(v[chart] % field.p);
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (k != chart) affine.push_back(coord.size());
            coord.push_back(field.mul(v[k] % field.p, s));
        }
    }

    const long dmax = max_degree(sys);
    const auto bt = binom_table(dmax, field);
    std::vector<Vec> pw(coord.size(), Vec(static_cast<std::size_t>(dmax) + 1, 1));
    for (std::size_t g = 0; g < coord.size(); ++g)
        for (long k = 1; k <= dmax; ++k) pw[g][static_cast<std::size_t>(k)] = field.mul(pw[g][static_cast<std::size_t>(k) - 1], coord[g]);

    const auto cols = monomial_exponents(sys.space, sys.degree);
    std::vector<Vec> rows;
    for (long order = 0; order < m; ++order) {
        for (const auto& beta : exponents_exact(affine.size(), order)) {
            Vec row(cols.size(), 0);
            for (std::size_t c = 0; c < cols.size(); ++c) {
                std::uint32_t val = 1;
                for (std::size_t a = 0; a < affine.size() && val; ++a) {
                    const std::size_t g = affine[a];
                    const long ge = cols[c][g];
                    const long be = beta[a];
                    if (ge < be) {
                        val = 0;
                        break;
                    }
                    val = field.mul(val, field.mul(bt[static_cast<std::size_t>(ge)][static_cast<std::size_t>(be)],
                                                   pw[g][static_cast<std::size_t>(ge - be)]));
                }
                row[c] = val;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

namespace detail {

std::vector<Vec> scheme_rows(const LinearSystem& sys, const Param& param, long alpha,
                             const PrimeField& field) {
    if (sys.space.t() != 1) throw UnsupportedError("vanishing schemes need a single projective factor");
    if (alpha < 1) throw DomainError("scheme multiplicity must be >= 1");
    const long d = sys.degree[0];
    const std::size_t len = param.coords.size();
    const auto bt = binom_table(d, field);

    std::vector<std::vector<Poly>> pw(len);
    for (std::size_t i = 0; i < len; ++i) {
        pw[i].push_back(Poly{{0, 1}});
        for (long k = 1; k <= d; ++k) pw[i].push_back(poly_mul(pw[i].back(), param.coords[i], field));
    }

    const auto cols = monomial_exponents(sys.space, sys.degree);
    std::vector<Vec> rows;
    for (long k = 0; k < alpha && k <= d; ++k) {
        for (const auto& beta : exponents_exact(len, k)) {
            std::map<std::uint64_t, Vec> by_coeff;
            for (std::size_t c = 0; c < cols.size(); ++c) {
                std::uint32_t scale = 1;
                bool ok = true;
                for (std::size_t i = 0; i < len && ok; ++i) {
                    if (cols[c][i] < beta[i]) ok = false;
                    else scale = field.mul(scale, bt[static_cast<std::size_t>(cols[c][i])][static_cast<std::size_t>(beta[i])]);
                }
                if (!ok || !scale) continue;
                Poly acc{{0, scale}};
                for (std::size_t i = 0; i < len && !acc.empty(); ++i) {
                    const long e = cols[c][i] - beta[i];
                    if (e > 0) acc = poly_mul(acc, pw[i][static_cast<std::size_t>(e)], field);
                }
                for (const auto& [key, coef] : acc) {
                    auto it = by_coeff.find(key);
                    if (it == by_coeff.end()) it = by_coeff.emplace(key, Vec(cols.size(), 0)).first;
                    it->second[c] = field.add(it->second[c], coef);
                }
            }
            for (auto& [key, row] : by_coeff) rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace detail

std::vector<Vec> line_multiplicity_rows(const LinearSystem& sys, const Point& a, const Point& b,
                                        long alpha, const PrimeField& field) {
    validate(sys);
    if (sys.space.t() != 1) throw UnsupportedError("lines are supported on P^n only");
    if (alpha < 1) throw DomainError("line multiplicity must be >= 1");
    if (detail::is_zero(a.coords[0]) || detail::is_zero(b.coords[0]) ||
        detail::projectively_equal(a.coords[0], b.coords[0], field))
        throw DomainError("line needs two distinct points");
    const Vec basis[2] = {a.coords[0], b.coords[0]};
    return detail::scheme_rows(sys, detail::linear_param(basis), alpha, field);
}

}  // namespace sev::oracle
