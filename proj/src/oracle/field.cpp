#include "internal.hpp"
#include "sev/errors.hpp"

#include <string>

namespace sev::oracle {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (v % q == 0) return v == q;
    }
    std::uint64_t d = v - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod64(a, d, v);
        if (x == 1 || x == v - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod64(x, x, v);
            if (x == v - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField PrimeField::make(std::uint64_t p) {
    if (p >= (1ull << 31) || p < 3) throw DomainError("prime must lie in [3, 2^31)");
    if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
    PrimeField f;
    f.p = static_cast<std::uint32_t>(p);
    return f;
}

std::uint32_t PrimeField::add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}

std::uint32_t PrimeField::sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + (p - b);
}

std::uint32_t PrimeField::mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
    return static_cast<std::uint32_t>(powmod64(a, e, p));
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a % p == 0) throw OracleError("inverse of zero");
    return pow(a, p - 2);
}

namespace detail {

Rng::Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                      static_cast<std::uint32_t>(attempt)};
    eng_.seed(seq);
}

std::uint32_t Rng::below(std::uint32_t p) {
    const std::uint64_t limit = (~std::uint64_t{0} / p) * p;
    std::uint64_t r;
    do {
        r = eng_();
    } while (r >= limit);
    return static_cast<std::uint32_t>(r % p);
}

Vec random_vector(Rng& rng, std::size_t len, const PrimeField& f) {
    Vec v(len);
    for (auto& x : v) x = rng.below(f.p);
    return v;
}

bool is_zero(const Vec& v) {
    for (auto x : v)
        if (x) return false;
    return true;
}

bool projectively_equal(const Vec& a, const Vec& b, const PrimeField& f) {
    // a ~ b iff all 2x2 minors vanish.
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (f.mul(a[i], b[j]) != f.mul(a[j], b[i])) return false;
    return true;
}

std::vector<std::uint32_t> binom_table_row(long top, const PrimeField& f) {
    std::vector<std::uint32_t> row(static_cast<std::size_t>(top) + 1, 0);
    row[0] = 1;
    for (long a = 1; a <= top; ++a)
        for (long b = a; b >= 1; --b) row[b] = f.add(row[b], row[b - 1]);
    return row;
}

}  // namespace detail
}  // namespace sev::oracle
