#include "sev/simd/kernels.hpp"

namespace sev::simd::detail {

void submul_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::size_t n,
                   const Modulus& m) {
    const std::uint64_t p = m.p;
    const std::uint64_t g = (p - f % p) % p;
    for (std::size_t j = 0; j < n; ++j)
        dst[j] = static_cast<std::uint32_t>((dst[j] + g * src[j]) % p);
}

void scale_scalar(std::uint32_t* dst, std::uint32_t f, std::size_t n, const Modulus& m) {
    const std::uint64_t p = m.p;
    for (std::size_t j = 0; j < n; ++j)
        dst[j] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(dst[j]) * f % p);
}

}  // namespace sev::simd::detail
