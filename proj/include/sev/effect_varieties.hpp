#pragma once

#include "sev/oracle.hpp"
#include "sev/systems.hpp"
#include "sev/variety.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sev::effect {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct NamedValue {
    std::string name;
    Int value;
};

struct SevReport {
    bool holds_property = false;
    bool is_sev = false;
    long alpha_max = 0;
    Int nu_system;
    Int nu_residual;
    std::vector<Check> checks;
    std::vector<NamedValue> values;

    const Check* check(const std::string& name) const;
    std::optional<Int> value(const std::string& name) const;
};

struct ConfigStep {
    EffectVariety variety;
    long alpha = 1;
};

struct H1Report {
    bool cond_a = false;
    bool cond_b = false;
    bool cond_c = false;
    bool h2_handled = false;
    bool cohomologically_special = false;
    std::vector<NamedValue> values;
    std::vector<std::string> notes;

    std::optional<Int> value(const std::string& name) const;
};

LinearSystem residual_divisor(const LinearSystem& sys, const Hypersurface& y, long alpha);

// nu(L - alpha Y) for Y = P^s through the first `through_first` points.
Int linear_space_residual_nu(const LinearSystem& sys, long s, long alpha, long through_first);
Int rnc_double_residual_nu(long d, long n);
Int p3_rational_curve_chi(long d, long e);

struct DegreeRange {
    long d_lo = 0;
    long d_hi = -1;
    bool empty() const { return d_hi < d_lo; }
};
DegreeRange homogeneous_linear_sev_range(long n, long s, long m);

// Chi-based count N - 1 - HP_X(d) for X = fat points plus alpha-fold lines.
struct LineStep {
    long p = 0;
    long q = 1;
    long alpha = 1;
};
Int line_configuration_chi_nu(long n, long d, const std::vector<long>& mults,
                              const std::vector<LineStep>& lines);

// nu(L - alpha Y) by the class rule; nullopt when the class has no rule at alpha.
std::optional<Int> residual_nu(const LinearSystem& sys, const EffectVariety& y, long alpha);

SevReport classify_alpha_sev(const LinearSystem& sys, const EffectVariety& y);
SevReport classify_configuration(const LinearSystem& sys, const std::vector<ConfigStep>& steps,
                                 const oracle::Oracle& oracle);

struct RestrictionCohomology {
    Int degree;
    Int h0;
    Int h1;
};
RestrictionCohomology curve_restriction_cohomology(const LinearSystem& sys, long e,
                                                   const std::vector<long>& mults_on_curve);

H1Report h1_sev_check(const LinearSystem& sys, const EffectVariety& y, const oracle::Oracle& oracle);

}  // namespace sev::effect
