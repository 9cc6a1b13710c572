#include "sev/simd/kernels.hpp"

#include "sev/errors.hpp"

#include <cstdlib>
#include <string>

namespace sev::simd {

Modulus Modulus::make(std::uint32_t p) {
    if (p < 3 || (p & 1u) == 0 || p >= (1u << 31))
        throw DomainError("modulus must be an odd number in [3, 2^31)");
    Modulus m;
    m.p = p;
    std::uint32_t inv = p;  // Newton iteration for p^{-1} mod 2^32
    for (int i = 0; i < 5; ++i) inv *= 2u - p * inv;
    m.pneg_inv = 0u - inv;
    const std::uint64_t r = (std::uint64_t{1} << 32) % p;
    m.r2 = static_cast<std::uint32_t>(r * r % p);
    return m;
}

std::uint32_t Modulus::to_mont(std::uint32_t f) const {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(f) << 32) % p);
}

namespace {

constexpr KernelSet kScalar{Backend::Scalar, "scalar", detail::submul_scalar, detail::scale_scalar};
constexpr KernelSet kAvx2{Backend::Avx2, "avx2", detail::submul_avx2, detail::scale_avx2};
constexpr KernelSet kNeon{Backend::Neon, "neon", detail::submul_neon, detail::scale_neon};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const KernelSet& choose() {
    if (const char* forced = std::getenv("SEV_KERNEL")) {
        const std::string f(forced);
        if (f == "scalar") return kScalar;
        if (f == "avx2" && available(Backend::Avx2)) return kAvx2;
        if (f == "neon" && available(Backend::Neon)) return kNeon;
    }
    if (available(Backend::Avx2)) return kAvx2;
    if (available(Backend::Neon)) return kNeon;
    return kScalar;
}

}  // namespace

bool available(Backend b) {
    switch (b) {
        case Backend::Scalar: return true;
        case Backend::Avx2: return detail::avx2_compiled() && cpu_has_avx2();
        case Backend::Neon: return detail::neon_compiled();
    }
    return false;
}

const KernelSet& kernels(Backend b) {
    switch (b) {
        case Backend::Avx2: return kAvx2;
        case Backend::Neon: return kNeon;
        default: return kScalar;
    }
}

const KernelSet& active() {
    static const KernelSet& chosen = choose();
    return chosen;
}

}  // namespace sev::simd
