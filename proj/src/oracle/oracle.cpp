#include "internal.hpp"
#include "sev/errors.hpp"

#include <algorithm>
#include <atomic>
#include <string>

namespace sev::oracle {

namespace {

std::atomic<std::uint64_t> g_checks{0};
std::atomic<std::uint64_t> g_violations{0};

long curve_degree(const EffectVariety& y, long n) {
    if (std::holds_alternative<RationalNormalCurve>(y)) return n;
    if (const auto* rc = std::get_if<RationalCurveP3>(&y)) return rc->e;
    return 1;
}

void check_field(const LinearSystem& sys, const PrimeField& f) {
    long bound = 0;
    for (long d : sys.degree) bound += d;
    bound = std::max(bound, sys.max_multiplicity());
    if (static_cast<long>(f.p) <= bound) throw DomainError("prime must exceed the total degree");
}

long to_long(const Int& v) {
    if (!v.fits_slong_p()) throw UnsupportedError("system too large for the oracle");
    return v.get_si();
}

}  // namespace

OracleResult h0_oracle(const LinearSystem& sys, const OracleConfig& cfg,
                       std::span<const VanishingScheme> schemes) {
    validate(sys);
    if (cfg.trials < 1) throw DomainError("trials must be >= 1");
    check_field(sys, cfg.prime);
    const DimReport dr = dim_report(sys);  // rejects m >= 3 on products
    const long cols = to_long(dr.monomials);
    if (cols > 20000) throw UnsupportedError("interpolation matrix too large for dense elimination");
    for (const auto& sc : schemes) {
        if (sys.space.t() == 1 && curve_degree(sc.variety, sys.space.factors[0]) * sys.degree[0] > 255)
            throw UnsupportedError("scheme restriction degree too large");
    }

    const auto flat = sys.flat_multiplicities();
    long best_rank = -1;
    long rows_used = 0;
    for (long trial = 0; trial < cfg.trials; ++trial) {
        const auto scene = detail::build_scene(sys, schemes, cfg, trial);
        std::vector<Vec> rows;
        for (std::size_t j = 0; j < flat.size(); ++j) {
            auto r = fat_point_rows(sys, scene.points[j], flat[j], cfg.prime);
            std::move(r.begin(), r.end(), std::back_inserter(rows));
        }
        for (std::size_t i = 0; i < schemes.size(); ++i) {
            auto r = detail::scheme_rows(sys, scene.params[i], schemes[i].alpha, cfg.prime);
            std::move(r.begin(), r.end(), std::back_inserter(rows));
        }
        const long rk = rank_mod_p(rows, static_cast<std::size_t>(cols), cfg.prime);
        if (rk > best_rank) {
            best_rank = rk;
            rows_used = static_cast<long>(rows.size());
        }
    }

    OracleResult res;
    res.cols = cols;
    res.rank = best_rank;
    res.rows = rows_used;
    res.h0 = cols - best_rank;
    res.trials_used = cfg.trials;
    res.prime = cfg.prime.p;
    res.seed = cfg.seed;
    res.special = Int(res.h0 - 1) > dr.expected_dim;
    if (schemes.empty()) {
        const long conditions = to_long(dr.conditions);
        if (rows_used != conditions) throw OracleError("fat-point row count differs from the condition count");
        res.h1 = conditions - best_rank;
        // Semicontinuity: h0 >= max(nu + 1, 0); equivalently h1 >= 0.
        ++g_checks;
        Int floor_h0 = dr.virtual_dim + 1;
        if (floor_h0 < 0) floor_h0 = 0;
        if (Int(res.h0) < floor_h0 || *res.h1 < 0) {
            ++g_violations;
            throw OracleError("oracle h0 below the virtual bound for " + describe(sys));
        }
    }
    return res;
}

long h1_oracle(const LinearSystem& sys, const OracleConfig& cfg) {
    return *h0_oracle(sys, cfg).h1;
}

OracleResult is_special_oracle(const LinearSystem& sys, const OracleConfig& cfg) {
    return h0_oracle(sys, cfg);
}

LinearSystem restrict_to_subspace(const LinearSystem& sys, long s, long points_on) {
    validate(sys);
    if (sys.space.t() != 1) throw DomainError("restriction is defined on P^n only");
    const long n = sys.space.factors[0];
    if (s < 1 || s > n) throw DomainError("subspace dimension must lie in [1, n]");
    if (s == n) return sys;
    const long h = sys.point_count();
    if (points_on < 0 || points_on > h) throw DomainError("points_on out of range");
    auto flat = sys.flat_multiplicities();
    flat.resize(static_cast<std::size_t>(points_on));
    return LinearSystem{Space{{s}}, sys.degree, group_runs(flat)};
}

CrossCheck cross_check(const LinearSystem& sys, const OracleConfig& cfg,
                       std::span<const VanishingScheme> schemes) {
    CrossCheck cc;
    cc.first = h0_oracle(sys, cfg, schemes);
    OracleConfig alt = cfg;
    alt.prime = PrimeField::make(cfg.prime.p == kDefaultPrime ? kSecondPrime : kDefaultPrime);
    alt.seed = cfg.seed ^ 0x9e3779b97f4a7c15ULL;
    cc.second = h0_oracle(sys, alt, schemes);
    cc.agreed = cc.first.h0 == cc.second.h0;
    cc.h0 = cc.first.h0;
    if (!cc.agreed) {
        OracleConfig third = cfg;
        third.prime = PrimeField::make(kThirdPrime);
        third.seed = cfg.seed ^ 0xd1b54a32d192ed03ULL;
        cc.third = h0_oracle(sys, third, schemes);
        // Specialization only inflates h0, so the smallest value is the generic one.
        cc.h0 = std::min({cc.first.h0, cc.second.h0, cc.third->h0});
    }
    return cc;
}

InvariantStats invariant_stats() {
    return {g_checks.load(), g_violations.load()};
}

}  // namespace sev::oracle
