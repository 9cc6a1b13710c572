#include "sev/combinatorics.hpp"

#include "sev/errors.hpp"

#include <string>

namespace sev::comb {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

}  // namespace

Int binom(const Int& a, const Int& b) {
    require(a >= 0, "binom: negative top");
    if (b < 0 || b > a) return 0;
    require(b.fits_ulong_p() && a.fits_ulong_p(), "binom: arguments too large");
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), a.get_ui(), b.get_ui());
    return out;
}

Int rising(const Int& r, const Int& z) {
    require(r >= 0, "rising: negative base");
    if (z < 0) return 0;
    require(z.fits_ulong_p(), "rising: length too large");
    Int out = 1;
    const unsigned long len = z.get_ui();
    for (unsigned long i = 1; i <= len; ++i) out *= r + i;
    return out;
}

Int phi_hyp(long d, long e, long n) {
    require(e >= 1 && d >= 2 * e && n >= 2, "phi_hyp: requires d >= 2e >= 2, n >= 2");
    return binom(d + n, n) - binom(d - 2 * e + n, n) - (n + 1) * binom(e + n, n) + n + 1;
}

Int psi_hyp_alpha1(long d, long e, long n) {
    require(e >= 1 && d >= 2 * e && n >= 2, "psi_hyp_alpha1: requires d >= 2e >= 2, n >= 2");
    return binom(d + n, n) - binom(d - e + n, n) - n * binom(e + n, n) + n;
}

Rat A_ratio(long e, long n) {
    require(e >= 1 && n >= 1, "A_ratio: requires e >= 1, n >= 1");
    Rat q(rising(n + e, e), rising(e, e));
    q.canonicalize();
    return q - (n + 1);
}

Int phi_product(const std::vector<long>& d, const std::vector<long>& e,
                const std::vector<long>& n) {
    const std::size_t t = d.size();
    require(t >= 2 && e.size() == t && n.size() == t, "phi_product: length mismatch or t < 2");
    Int full = 1, residual = 1, variety = 1;
    long nsum = 0;
    for (std::size_t i = 0; i < t; ++i) {
        require(e[i] >= 0 && d[i] >= 2 * e[i] && n[i] >= 1,
                "phi_product: requires d_i >= 2 e_i >= 0, n_i >= 1");
        full *= binom(d[i] + n[i], n[i]);
        residual *= binom(d[i] - 2 * e[i] + n[i], n[i]);
        variety *= binom(e[i] + n[i], n[i]);
        nsum += n[i];
    }
    return full - residual - (variety - 1) * (nsum + 1);
}

Int eta_product(const std::vector<long>& e, const std::vector<long>& n) {
    require(e.size() >= 2 && e.size() == n.size(), "eta_product: length mismatch or t < 2");
    std::vector<long> d(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        require(e[i] >= 1, "eta_product: requires e_i >= 1");
        d[i] = 2 * e[i];
    }
    return phi_product(d, e, n);
}

Int isqrt(const Int& v) {
    require(v >= 0, "isqrt: negative argument");
    Int out;
    mpz_sqrt(out.get_mpz_t(), v.get_mpz_t());
    return out;
}

bool is_square(const Int& v) {
    return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

Int floor_div(const Int& a, const Int& b) {
    require(b != 0, "floor_div: division by zero");
    Int out;
    mpz_fdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

Int ceil_div(const Int& a, const Int& b) {
    require(b != 0, "ceil_div: division by zero");
    Int out;
    mpz_cdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

Int floor_of(const Rat& q) {
    return floor_div(q.get_num(), q.get_den());
}

}  // namespace sev::comb
