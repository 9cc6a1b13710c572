#pragma once

#include <gmpxx.h>

#include <vector>

namespace sev {

using Int = mpz_class;
using Rat = mpq_class;

namespace comb {

// Rejects a < 0; returns 0 when b < 0 or b > a.
Int binom(const Int& a, const Int& b);

// (r)_(z) = (r+1)(r+2)...(r+z); 1 for z = 0, 0 for z < 0.
Int rising(const Int& r, const Int& z);

Int phi_hyp(long d, long e, long n);
Int psi_hyp_alpha1(long d, long e, long n);
Rat A_ratio(long e, long n);
Int phi_product(const std::vector<long>& d, const std::vector<long>& e,
                const std::vector<long>& n);
Int eta_product(const std::vector<long>& e, const std::vector<long>& n);

// Exact helpers for surd bounds.
Int isqrt(const Int& v);
bool is_square(const Int& v);
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);
Int floor_of(const Rat& q);

}  // namespace comb
}  // namespace sev
