#include "sev/oracle.hpp"
#include "sev/simd/kernels.hpp"

#include <doctest.h>

#include <random>

using namespace sev;
using namespace sev::simd;

namespace {
std::vector<Backend> backends() {
    std::vector<Backend> out{Backend::Scalar};
    if (available(Backend::Avx2)) out.push_back(Backend::Avx2);
    if (available(Backend::Neon)) out.push_back(Backend::Neon);
    return out;
}

const std::uint32_t kPrimes[] = {3u, 65537u, 1000000007u, 2147483587u, 2147483629u, 2147483647u};
}  // namespace

TEST_CASE("scalar kernel reference") {
    const auto m = Modulus::make(101);
    std::vector<std::uint32_t> dst{0, 5, 100, 50}, src{1, 2, 3, 100};
    detail::submul_scalar(dst.data(), src.data(), 7, 4, m);
    CHECK(dst == std::vector<std::uint32_t>{94, 92, 79, 57});
    detail::scale_scalar(dst.data(), 2, 4, m);
    CHECK(dst == std::vector<std::uint32_t>{87, 83, 57, 13});
}

TEST_CASE("backends agree with scalar") {
    std::mt19937_64 rng(12345);
    for (std::uint32_t p : kPrimes) {
        const auto m = Modulus::make(p);
        for (std::size_t n : {0u, 1u, 3u, 7u, 8u, 9u, 16u, 31u, 250u}) {
            std::vector<std::uint32_t> a(n), b(n);
            for (auto& x : a) x = static_cast<std::uint32_t>(rng() % p);
            for (auto& x : b) x = static_cast<std::uint32_t>(rng() % p);
            for (std::uint32_t f : {0u, 1u, p - 1, static_cast<std::uint32_t>(rng() % p)}) {
                auto ref = a;
                detail::submul_scalar(ref.data(), b.data(), f, n, m);
                auto refs = a;
                detail::scale_scalar(refs.data(), f, n, m);
                for (Backend be : backends()) {
                    const auto& k = kernels(be);
                    auto got = a;
                    k.submul(got.data(), b.data(), f, n, m);
                    CHECK_MESSAGE(got == ref, k.name, " submul p=", p, " n=", n);
                    auto gots = a;
                    k.scale(gots.data(), f, n, m);
                    CHECK_MESSAGE(gots == refs, k.name, " scale p=", p, " n=", n);
                }
            }
        }
    }
}

TEST_CASE("rank identical across backends") {
    const auto sys = make_system(3, 9, {{6, 1}, {4, 8}});
    for (std::uint32_t p : {2147483647u, 2147483629u, 1000000007u}) {
        oracle::OracleConfig cfg;
        cfg.prime = oracle::PrimeField::make(p);
        const auto pts = oracle::sample_points(sys.space, sys.point_count(), cfg);
        std::vector<oracle::Vec> rows;
        const auto mults = sys.flat_multiplicities();
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (auto& r : oracle::fat_point_rows(sys, pts[i], mults[i], cfg.prime)) rows.push_back(r);
        const long ref = oracle::rank_mod_p(rows, 220, cfg.prime, kernels(Backend::Scalar));
        CHECK(ref == 215);
        for (Backend be : backends()) CHECK(oracle::rank_mod_p(rows, 220, cfg.prime, kernels(be)) == ref);
    }
}

TEST_CASE("dispatch") {
    CHECK(available(Backend::Scalar));
    const auto& k = active();
    CHECK(available(k.backend));
    CHECK_FALSE(k.name.empty());
}
