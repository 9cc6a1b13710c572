#include "sev/effect_varieties.hpp"

#include "sev/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace sev {

std::string variety_label(const EffectVariety& y) {
    std::ostringstream os;
    if (const auto* h = std::get_if<Hypersurface>(&y)) {
        os << "hypersurface(";
        for (std::size_t i = 0; i < h->degree.size(); ++i) os << (i ? "," : "") << h->degree[i];
        os << ")";
    } else if (const auto* l = std::get_if<LinearSubspace>(&y)) {
        os << "P" << l->s << " through " << l->through_first << " points";
    } else if (std::holds_alternative<RationalNormalCurve>(y)) {
        os << "rational normal curve";
    } else if (const auto* c = std::get_if<RationalCurveP3>(&y)) {
        os << "rational curve of degree " << c->e << " in P3";
    } else if (const auto* ln = std::get_if<Line>(&y)) {
        os << "line P" << ln->p << "P" << ln->q;
    }
    return os.str();
}

}  // namespace sev

namespace sev::effect {

using comb::binom;

const Check* SevReport::check(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::optional<Int> SevReport::value(const std::string& name) const {
    for (const auto& v : values)
        if (v.name == name) return v.value;
    return std::nullopt;
}

std::optional<Int> H1Report::value(const std::string& name) const {
    for (const auto& v : values)
        if (v.name == name) return v.value;
    return std::nullopt;
}

namespace {

std::string str(const Int& v) { return v.get_str(); }

long projective_dim(const LinearSystem& sys) {
    if (sys.space.t() != 1) throw UnsupportedError("this variety class is defined on P^n only");
    return sys.space.factors[0];
}

void validate_hypersurface(const LinearSystem& sys, const Hypersurface& y) {
    if (y.degree.size() != sys.space.t()) throw DomainError("hypersurface multidegree length mismatch");
    bool positive = false;
    for (long e : y.degree) {
        if (e < 0) throw DomainError("hypersurface degrees must be >= 0");
        positive = positive || e > 0;
    }
    if (!positive) throw DomainError("hypersurface needs a positive degree");
    for (const auto& [g, c] : y.point_mults) {
        if (g >= sys.points.size()) throw DomainError("hypersurface refers to a missing point group");
        if (c < 1) throw DomainError("hypersurface point multiplicities must be >= 1");
    }
}

long hypersurface_alpha_bound(const LinearSystem& sys, const Hypersurface& y) {
    long bound = -1;
    auto take = [&](long v) { bound = bound < 0 ? v : std::min(bound, v); };
    for (std::size_t i = 0; i < y.degree.size(); ++i)
        if (y.degree[i] > 0) take(sys.degree[i] / y.degree[i]);
    for (const auto& [g, c] : y.point_mults) {
        const long m = sys.points[g].multiplicity;
        take((m + c - 1) / c);
    }
    return std::max(bound, 0L);
}

// Y's own linear system must be nonempty by count.
Int hypersurface_existence_nu(const LinearSystem& sys, const Hypersurface& y) {
    LinearSystem own{sys.space, y.degree, {}};
    for (const auto& [g, c] : y.point_mults) own.points.push_back({c, sys.points[g].count});
    return virtual_dim(own);
}

std::vector<bool> on_flags(long h, long first) {
    std::vector<bool> on(static_cast<std::size_t>(h), false);
    for (long j = 0; j < std::min(first, h); ++j) on[static_cast<std::size_t>(j)] = true;
    return on;
}

// N - 1 - C_Y(d, alpha) - off-Y conditions - on-Y residual conditions.
Int linear_nu(long n, long d, long s, long alpha, const std::vector<long>& mults,
              const std::vector<bool>& on) {
    const long c = n - s;
    Int nu = binom(d + n, n) - 1;
    for (long i = 0; i < alpha && i <= d; ++i) nu -= binom(d + s - i, d - i) * binom(c - 1 + i, i);
    for (std::size_t j = 0; j < mults.size(); ++j) {
        const long m = mults[j];
        if (m <= 0) continue;
        if (!on[j]) {
            nu -= binom(m + n - 1, n);
            continue;
        }
        for (long k = alpha; k <= m - 1; ++k) nu -= binom(k + c - 1, c - 1) * binom(m - 1 - k + s, s);
    }
    return nu;
}

Int off_conditions(long n, const std::vector<long>& mults, long first_on) {
    Int sum = 0;
    for (std::size_t j = static_cast<std::size_t>(std::max(first_on, 0L)); j < mults.size(); ++j)
        if (mults[j] > 0) sum += binom(mults[j] + n - 1, n);
    return sum;
}

long general_position_bound(long e) {
    if (e == 1) return 2;
    if (e == 2) return 3;
    return 2 * e;
}

struct AlphaScan {
    long bound = 0;
    std::vector<std::optional<Int>> nu;  // index alpha - 1
};

struct Verdict {
    long alpha = 0;
    bool gain = false;
    bool decrease = true;
};

Verdict judge(const AlphaScan& scan, const Int& base) {
    Verdict v;
    for (long a = scan.bound; a >= 1; --a) {
        const auto& val = scan.nu[static_cast<std::size_t>(a - 1)];
        if (val && *val > base) {
            v.alpha = a;
            v.gain = true;
            break;
        }
    }
    if (!v.gain) return v;
    const Int& best = *scan.nu[static_cast<std::size_t>(v.alpha - 1)];
    for (long b = v.alpha + 1; b <= scan.bound; ++b) {
        const auto& val = scan.nu[static_cast<std::size_t>(b - 1)];
        if (val && !(*val < best)) v.decrease = false;
    }
    return v;
}

// Local overlap of alpha-fold coordinate axes at a point of multiplicity m:
// kappa = sum over monomials of (#axes whose ideal misses it - 1)^+,
// ell = monomials of degree < m inside every axis ideal.
std::pair<Int, Int> local_line_terms(long n, const std::vector<std::pair<long, long>>& axes, long m) {
    long top = m;
    for (const auto& [ax, a] : axes) top = std::max(top, 2 * a);
    Int kappa = 0, ell = 0;
    std::vector<long> mu(static_cast<std::size_t>(n), 0);
    // Enumerate exponent vectors with total degree <= top.
    std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long left) {
        if (pos == mu.size()) {
            long deg = 0;
            for (long x : mu) deg += x;
            long outside = 0;
            for (const auto& [ax, a] : axes)
                if (deg - mu[static_cast<std::size_t>(ax)] < a) ++outside;
            if (outside > 1) kappa += outside - 1;
            if (deg < m && outside == 0) ell += 1;
            return;
        }
        for (long e = 0; e <= left; ++e) {
            mu[pos] = e;
            rec(pos + 1, left - e);
        }
        mu[pos] = 0;
    };
    rec(0, top);
    return {kappa, ell};
}

}  // namespace

LinearSystem residual_divisor(const LinearSystem& sys, const Hypersurface& y, long alpha) {
    validate(sys);
    validate_hypersurface(sys, y);
    if (alpha < 1) throw DomainError("alpha must be >= 1");
    LinearSystem out = sys;
    for (std::size_t i = 0; i < sys.degree.size(); ++i) {
        out.degree[i] = sys.degree[i] - alpha * y.degree[i];
        if (out.degree[i] < 0) throw DomainError("residual degree would be negative (alpha e > d)");
    }
    for (const auto& [g, c] : y.point_mults)
        out.points[g].multiplicity = std::max(sys.points[g].multiplicity - alpha * c, 0L);
    return out;
}

Int linear_space_residual_nu(const LinearSystem& sys, long s, long alpha, long through_first) {
    validate(sys);
    const long n = projective_dim(sys);
    if (s < 1 || s > n - 1) throw DomainError("subspace dimension must lie in [1, n-1]");
    if (alpha < 1) throw DomainError("alpha must be >= 1");
    const long h = sys.point_count();
    if (through_first < 0 || through_first > h || through_first > s + 1)
        throw DomainError("through_first must lie in [0, min(h, s+1)]");
    return linear_nu(n, sys.degree[0], s, alpha, sys.flat_multiplicities(), on_flags(h, through_first));
}

Int rnc_double_residual_nu(long d, long n) {
    if (n < 2) throw DomainError("rational normal curve needs n >= 2");
    if (d < 3) throw UnsupportedError("the double-curve count is given only for d >= 3");
    return binom(d + n, n) - 1 - ((d - 1) * Int(n) * n + 2);
}

Int p3_rational_curve_chi(long d, long e) {
    if (d < 1 || e < 1) throw DomainError("requires d >= 1, e >= 1");
    return binom(d + 3, 3) - 3 * Int(d) * e + 4 * e - 5;
}

DegreeRange homogeneous_linear_sev_range(long n, long s, long m) {
    if (m < 1) throw DomainError("m must be >= 1");
    if (n != 3 || (s != 1 && s != 2)) throw UnsupportedError("ranges are available for P1 and P2 in P3 only");
    DegreeRange r;
    r.d_lo = m;
    if (s == 1) {
        // 4m^2 + 3m - 1 - 3d - 3md > 0  <=>  d < (4m-1)/3
        r.d_hi = comb::ceil_div(4 * Int(m) - 1, 3).get_si() - 1;
    } else {
        // d < (3m - 12 + sqrt(84 + 108m + 33m^2)) / 6, strict at exact roots
        const Int disc = 84 + 108 * Int(m) + 33 * Int(m) * m;
        Int top = 3 * Int(m) - 12 + comb::isqrt(disc);
        if (comb::is_square(disc)) top -= 1;
        r.d_hi = comb::floor_div(top, 6).get_si();
    }
    return r;
}

Int line_configuration_chi_nu(long n, long d, const std::vector<long>& mults,
                              const std::vector<LineStep>& lines) {
    if (n < 2) throw DomainError("lines need n >= 2");
    const long h = static_cast<long>(mults.size());
    Int hp = 0;
    for (const auto& ln : lines) {
        if (ln.p < 0 || ln.q < 0 || ln.p >= h || ln.q >= h || ln.p == ln.q)
            throw DomainError("line must join two distinct system points");
        if (ln.alpha < 1) throw DomainError("line multiplicity must be >= 1");
        for (long i = 0; i < ln.alpha && i <= d; ++i) hp += Int(d - i + 1) * binom(n - 2 + i, i);
    }
    for (long j = 0; j < h; ++j) {
        std::vector<std::pair<long, long>> axes;
        std::vector<std::pair<long, long>> seen;  // other endpoint -> position
        for (const auto& ln : lines) {
            if (ln.p != j && ln.q != j) continue;
            const long other = ln.p == j ? ln.q : ln.p;
            auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& s) { return s.first == other; });
            long axis;
            if (it == seen.end()) {
                axis = static_cast<long>(seen.size());
                seen.push_back({other, axis});
            } else {
                axis = it->second;
            }
            if (axis >= n) throw UnsupportedError("more than n distinct lines through one point");
            axes.push_back({axis, ln.alpha});
        }
        const auto [kappa, ell] = local_line_terms(n, axes, mults[static_cast<std::size_t>(j)]);
        hp += ell - kappa;
    }
    return binom(d + n, n) - 1 - hp;
}

std::optional<Int> residual_nu(const LinearSystem& sys, const EffectVariety& y, long alpha) {
    validate(sys);
    if (alpha < 1) throw DomainError("alpha must be >= 1");
    if (const auto* hy = std::get_if<Hypersurface>(&y)) return virtual_dim(residual_divisor(sys, *hy, alpha));
    const long n = projective_dim(sys);
    const long d = sys.degree[0];
    const auto mults = sys.flat_multiplicities();
    const long h = static_cast<long>(mults.size());
    if (const auto* ls = std::get_if<LinearSubspace>(&y)) return linear_space_residual_nu(sys, ls->s, alpha, ls->through_first);
    if (const auto* ln = std::get_if<Line>(&y)) {
        if (ln->p < 0 || ln->q < 0 || ln->p >= h || ln->q >= h || ln->p == ln->q)
            throw DomainError("line must join two distinct system points");
        std::vector<bool> on(static_cast<std::size_t>(h), false);
        on[static_cast<std::size_t>(ln->p)] = on[static_cast<std::size_t>(ln->q)] = true;
        return linear_nu(n, d, 1, alpha, mults, on);
    }
    if (std::holds_alternative<RationalNormalCurve>(y)) {
        if (alpha != 2) return std::nullopt;
        const long on = std::min(h, n + 3);
        for (long j = 0; j < on; ++j)
            if (mults[static_cast<std::size_t>(j)] > 2) return std::nullopt;
        return rnc_double_residual_nu(d, n) - off_conditions(n, mults, on);
    }
    if (const auto* rc = std::get_if<RationalCurveP3>(&y)) {
        if (n != 3) throw DomainError("rational curve class lives in P3");
        if (alpha != 2) return std::nullopt;
        for (long m : mults)
            if (m > 2) return std::nullopt;
        return p3_rational_curve_chi(d, rc->e) - 1;
    }
    throw UnsupportedError("unsupported variety class");
}

SevReport classify_alpha_sev(const LinearSystem& sys, const EffectVariety& y) {
    validate(sys);
    SevReport rep;
    rep.nu_system = virtual_dim(sys);

    AlphaScan scan;
    bool exists = true;
    std::string exists_detail;
    if (const auto* hy = std::get_if<Hypersurface>(&y)) {
        validate_hypersurface(sys, *hy);
        scan.bound = hypersurface_alpha_bound(sys, *hy);
        const Int own = hypersurface_existence_nu(sys, *hy);
        exists = own >= 0;
        exists_detail = "nu of the variety's own system = " + str(own);
        rep.values.push_back({"nu_variety_system", own});
    } else {
        const long n = projective_dim(sys);
        const long h = sys.point_count();
        scan.bound = sys.max_multiplicity();
        if (const auto* ls = std::get_if<LinearSubspace>(&y)) {
            if (ls->s < 1 || ls->s > n - 1) throw DomainError("subspace dimension must lie in [1, n-1]");
            if (ls->through_first < 0 || ls->through_first > std::min(h, ls->s + 1))
                throw DomainError("through_first must lie in [0, min(h, s+1)]");
            exists_detail = "P^s through at most s+1 general points";
        } else if (std::holds_alternative<RationalNormalCurve>(y)) {
            if (sys.degree[0] < 3) throw UnsupportedError("rational normal curve rule needs d >= 3");
            exists_detail = "through the first " + std::to_string(std::min(h, n + 3)) + " points";
        } else if (const auto* rc = std::get_if<RationalCurveP3>(&y)) {
            if (n != 3) throw DomainError("rational curve class lives in P3");
            if (rc->e < 1) throw DomainError("curve degree must be >= 1");
            exists = h <= general_position_bound(rc->e);
            exists_detail = std::to_string(h) + " points, general-position bound " +
                            std::to_string(general_position_bound(rc->e));
            if (rc->e == 1 && h == 2) {
                // Same residual by the linear-space count; chi itself is nu + 1.
                rep.values.push_back({"nu_linear_space_count", linear_space_residual_nu(sys, 1, 2, 2)});
                rep.values.push_back({"chi_blowup", p3_rational_curve_chi(sys.degree[0], 1)});
            }
        } else if (!std::holds_alternative<Line>(y)) {
            throw UnsupportedError("unsupported variety class");
        }
    }

    for (long a = 1; a <= scan.bound; ++a) {
        scan.nu.push_back(residual_nu(sys, y, a));
        const auto& v = scan.nu.back();
        if (v)
            rep.values.push_back({"nu_alpha_" + std::to_string(a), *v});
        else
            rep.checks.push_back({"rule_alpha_" + std::to_string(a), false, "no residual rule for this alpha"});
    }

    const Verdict v = judge(scan, rep.nu_system);
    rep.checks.push_back({"variety_exists", exists, exists_detail});
    rep.checks.push_back({"special_inequality", v.gain,
                          v.gain ? "nu(L - " + std::to_string(v.alpha) + "Y) > nu(L)" : "no admissible alpha raises nu"});
    rep.checks.push_back({"larger_alpha_decrease", v.gain && v.decrease, "nu(L - bY) < nu(L - aY) for b > a"});
    if (v.gain) {
        rep.alpha_max = v.alpha;
        rep.nu_residual = *scan.nu[static_cast<std::size_t>(v.alpha - 1)];
    } else {
        rep.alpha_max = 0;
        rep.nu_residual = rep.nu_system;
        for (const auto& x : scan.nu)
            if (x && *x > rep.nu_residual) rep.nu_residual = *x;
    }
    rep.holds_property = exists && v.gain && v.decrease;
    rep.checks.push_back({"residual_nonnegative", rep.nu_residual >= 0, "nu(L - aY) = " + str(rep.nu_residual)});
    rep.is_sev = rep.holds_property && rep.nu_residual >= 0;
    return rep;
}

SevReport classify_configuration(const LinearSystem& sys, const std::vector<ConfigStep>& steps,
                                 const oracle::Oracle& oracle) {
    validate(sys);
    if (steps.empty()) throw DomainError("configuration needs at least one step");
    bool all_div = true, all_lines = true;
    for (const auto& st : steps) {
        if (st.alpha < 1) throw DomainError("step multiplicity must be >= 1");
        all_div = all_div && std::holds_alternative<Hypersurface>(st.variety);
        all_lines = all_lines && std::holds_alternative<Line>(st.variety);
    }
    if (!all_div && !all_lines) throw UnsupportedError("configurations must be all hypersurfaces or all lines");

    SevReport rep;
    rep.nu_system = virtual_dim(sys);
    bool cond1 = true;

    if (all_div) {
        LinearSystem running = sys;
        for (std::size_t j = 0; j < steps.size(); ++j) {
            const auto& hy = std::get<Hypersurface>(steps[j].variety);
            const long a = steps[j].alpha;
            const std::string tag = "step" + std::to_string(j + 1);
            validate_hypersurface(running, hy);
            const long bound = hypersurface_alpha_bound(running, hy);
            if (a > bound) throw DomainError(tag + ": alpha exceeds the admissible bound");
            AlphaScan scan;
            scan.bound = bound;
            for (long b = 1; b <= bound; ++b) scan.nu.push_back(virtual_dim(residual_divisor(running, hy, b)));
            const Int base = virtual_dim(running);
            const Int at = *scan.nu[static_cast<std::size_t>(a - 1)];
            const Verdict v = judge(scan, base);
            bool decrease = true;
            for (long b = a + 1; b <= bound; ++b)
                if (!(*scan.nu[static_cast<std::size_t>(b - 1)] < at)) decrease = false;
            const Int own = hypersurface_existence_nu(running, hy);
            rep.checks.push_back({tag + "_variety_exists", own >= 0, "nu of the variety's own system = " + str(own)});
            rep.checks.push_back({tag + "_special_inequality", at > base, str(at) + " vs " + str(base)});
            rep.checks.push_back({tag + "_alpha_maximal", v.gain && v.alpha == a,
                                  "largest alpha with a gain = " + std::to_string(v.alpha)});
            rep.checks.push_back({tag + "_larger_alpha_decrease", decrease, ""});
            rep.values.push_back({tag + "_nu", at});
            cond1 = cond1 && own >= 0 && at > base && v.gain && v.alpha == a && decrease;
            running = residual_divisor(running, hy, a);
        }
        rep.nu_residual = virtual_dim(running);
        rep.checks.push_back({"final_nu_nonnegative", rep.nu_residual >= 0, "exact: residual is a fat-point system"});
        rep.holds_property = cond1;
        rep.is_sev = cond1 && rep.nu_residual >= 0;
        rep.alpha_max = steps.back().alpha;
        return rep;
    }

    // Lines: nu_hat = min(chi count, oracle h0 - 1), since nu(L - X) <= dim(L - X).
    const long n = projective_dim(sys);
    if (n < 3) throw UnsupportedError("line configurations need n >= 3");
    const long d = sys.degree[0];
    const auto mults = sys.flat_multiplicities();
    const long bound = sys.max_multiplicity();
    std::vector<LineStep> prev;
    std::vector<oracle::VanishingScheme> prev_schemes;
    Int base = rep.nu_system;
    for (std::size_t j = 0; j < steps.size(); ++j) {
        const auto& ln = std::get<Line>(steps[j].variety);
        const long a = steps[j].alpha;
        const std::string tag = "step" + std::to_string(j + 1);
        if (a > bound) throw DomainError(tag + ": alpha exceeds the maximum point multiplicity");
        AlphaScan scan;
        scan.bound = bound;
        std::vector<Int> chi;
        for (long b = 1; b <= bound; ++b) {
            auto lines = prev;
            lines.push_back({ln.p, ln.q, b});
            const Int c = line_configuration_chi_nu(n, d, mults, lines);
            auto schemes = prev_schemes;
            schemes.push_back({Line{ln.p, ln.q}, b});
            const Int cap = Int(oracle.h0(sys, schemes).h0 - 1);
            chi.push_back(c);
            scan.nu.push_back(c < cap ? c : cap);
        }
        const Int at = *scan.nu[static_cast<std::size_t>(a - 1)];
        const Verdict v = judge(scan, base);
        bool decrease = true;
        for (long b = a + 1; b <= bound; ++b)
            if (!(*scan.nu[static_cast<std::size_t>(b - 1)] < at)) decrease = false;
        rep.checks.push_back({tag + "_special_inequality", at > base, str(at) + " vs " + str(base)});
        rep.checks.push_back({tag + "_alpha_maximal", v.gain && v.alpha == a,
                              "largest alpha with a gain = " + std::to_string(v.alpha)});
        rep.checks.push_back({tag + "_larger_alpha_decrease", decrease, ""});
        rep.values.push_back({tag + "_nu", at});
        rep.values.push_back({tag + "_chi_count", chi[static_cast<std::size_t>(a - 1)]});
        cond1 = cond1 && at > base && v.gain && v.alpha == a && decrease;
        prev.push_back({ln.p, ln.q, a});
        prev_schemes.push_back({Line{ln.p, ln.q}, a});
        base = at;
    }
    const auto final_res = oracle.h0(sys, prev_schemes);
    rep.values.push_back({"final_h0", Int(final_res.h0)});
    rep.values.push_back({"final_chi_count", line_configuration_chi_nu(n, d, mults, prev)});
    rep.nu_residual = base;
    rep.checks.push_back({"final_h0_positive", final_res.h0 >= 1, "sufficient-only: oracle h0(L (x) I_X) >= 1"});
    rep.holds_property = cond1;
    rep.is_sev = cond1 && final_res.h0 >= 1;
    rep.alpha_max = steps.back().alpha;
    return rep;
}

RestrictionCohomology curve_restriction_cohomology(const LinearSystem& sys, long e,
                                                   const std::vector<long>& mults_on_curve) {
    validate(sys);
    projective_dim(sys);
    if (e < 1) throw DomainError("curve degree must be >= 1");
    Int deg = Int(sys.degree[0]) * e;
    for (long m : mults_on_curve) {
        if (m < 0) throw DomainError("multiplicities must be >= 0");
        deg -= m;
    }
    RestrictionCohomology r;
    r.degree = deg;
    r.h0 = deg + 1 > 0 ? Int(deg + 1) : Int(0);
    r.h1 = -deg - 1 > 0 ? Int(-deg - 1) : Int(0);
    return r;
}

H1Report h1_sev_check(const LinearSystem& sys, const EffectVariety& y, const oracle::Oracle& oracle) {
    validate(sys);
    H1Report rep;
    auto put = [&](const std::string& k, const Int& v) { rep.values.push_back({k, v}); };

    if (const auto* hy = std::get_if<Hypersurface>(&y)) {
        validate_hypersurface(sys, *hy);
        if (hy->degree == sys.degree) rep.notes.push_back("O(Y) is isomorphic to L; the definition excludes this");
        const LinearSystem res = residual_divisor(sys, *hy, 1);
        const auto rl = oracle.h0(sys);
        const auto rr = oracle.h0(res);
        const long diff = rl.h0 - rr.h0;
        put("h0_L", rl.h0);
        put("h1_L", *rl.h1);
        put("h0_residual", rr.h0);
        put("h1_residual", *rr.h1);
        put("chi_restriction", virtual_dim(sys) - virtual_dim(res));
        rep.cond_b = rr.h0 > 0;
        rep.h2_handled = rep.cond_b;
        const bool exact = *rr.h1 == 0;
        if (exact) {
            rep.cond_a = diff == 0;
            put("h0_restriction", diff);
        } else {
            rep.cond_a = false;
            put("h0_restriction_lower", diff);
            put("h0_restriction_upper", diff + *rr.h1);
            rep.notes.push_back(diff > 0 ? "restriction has sections" : "h0(L|Y) not established: h1(L-Y) > 0");
        }
        if (rep.h2_handled) {
            put("h2_residual", 0);
            rep.notes.push_back("h2(L-Y) = 0 since L-Y is effective");
        } else {
            rep.notes.push_back("h2(L-Y) not established: L-Y is not effective");
        }
        if (exact && rep.cond_a && rep.h2_handled) {
            const Int h1r = Int(rr.h0) - rl.h0 - *rr.h1 + *rl.h1;
            put("h1_restriction", h1r);
            rep.cond_c = h1r > 0;
        } else {
            rep.notes.push_back("condition (c) not established");
        }
    } else {
        const long n = projective_dim(sys);
        const auto mults = sys.flat_multiplicities();
        const long h = static_cast<long>(mults.size());
        oracle::VanishingScheme scheme{y, 1};
        Int h0r, h1r;
        if (const auto* ls = std::get_if<LinearSubspace>(&y)) {
            if (ls->s < 1 || ls->s > n - 1) throw DomainError("subspace dimension must lie in [1, n-1]");
            if (ls->through_first < 0 || ls->through_first > std::min(h, ls->s + 1))
                throw DomainError("through_first must lie in [0, min(h, s+1)]");
            const auto restricted = oracle::restrict_to_subspace(sys, ls->s, ls->through_first);
            const auto rres = oracle.h0(restricted);
            h0r = rres.h0;
            h1r = *rres.h1;
            rep.notes.push_back("restriction " + describe(restricted) + " computed by the oracle");
        } else {
            long e = 0;
            std::vector<long> on;
            if (const auto* ln = std::get_if<Line>(&y)) {
                if (ln->p < 0 || ln->q < 0 || ln->p >= h || ln->q >= h || ln->p == ln->q)
                    throw DomainError("line must join two distinct system points");
                e = 1;
                on = {mults[static_cast<std::size_t>(ln->p)], mults[static_cast<std::size_t>(ln->q)]};
            } else if (std::holds_alternative<RationalNormalCurve>(y)) {
                e = n;
                on.assign(mults.begin(), mults.begin() + std::min(h, n + 3));
            } else if (const auto* rc = std::get_if<RationalCurveP3>(&y)) {
                if (n != 3) throw DomainError("rational curve class lives in P3");
                e = rc->e;
                on = mults;
            } else {
                throw UnsupportedError("unsupported variety class");
            }
            const auto rc = curve_restriction_cohomology(sys, e, on);
            h0r = rc.h0;
            h1r = rc.h1;
            put("restriction_degree", rc.degree);
        }
        put("h0_restriction", h0r);
        put("h1_restriction", h1r);
        const auto resid = oracle.h0(sys, std::span<const oracle::VanishingScheme>(&scheme, 1));
        put("h0_residual", resid.h0);
        rep.cond_a = h0r == 0;
        rep.cond_b = resid.h0 > 0;
        rep.h2_handled = true;
        put("h2_residual", 0);
        rep.notes.push_back("h2(L-Y) = 0: jets restrict onto the smooth Y surjectively and H1(O_Y(d)) = 0");
        rep.cond_c = h1r > 0;
    }
    rep.cohomologically_special = rep.cond_a && rep.cond_b && rep.cond_c;
    return rep;
}

}  // namespace sev::effect
