#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace sev::simd {

// Odd prime p < 2^31 with Montgomery constants for R = 2^32.
struct Modulus {
    std::uint32_t p = 0;
    std::uint32_t pneg_inv = 0;  // -p^{-1} mod 2^32
    std::uint32_t r2 = 0;        // 2^64 mod p

    static Modulus make(std::uint32_t p);
    // f * 2^32 mod p, the operand form the vector paths expect.
    std::uint32_t to_mont(std::uint32_t f) const;
};

// dst[j] = (dst[j] - f * src[j]) mod p, entries in [0, p).
using SubmulFn = void (*)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f,
                          std::size_t n, const Modulus& m);
// dst[j] = f * dst[j] mod p.
using ScaleFn = void (*)(std::uint32_t* dst, std::uint32_t f, std::size_t n, const Modulus& m);

enum class Backend { Scalar, Avx2, Neon };

struct KernelSet {
    Backend backend;
    std::string_view name;
    SubmulFn submul;
    ScaleFn scale;
};

bool available(Backend b);
const KernelSet& kernels(Backend b);
// Best available backend; SEV_KERNEL=scalar|avx2|neon forces one.
const KernelSet& active();

namespace detail {
void submul_scalar(std::uint32_t*, const std::uint32_t*, std::uint32_t, std::size_t, const Modulus&);
void scale_scalar(std::uint32_t*, std::uint32_t, std::size_t, const Modulus&);
void submul_avx2(std::uint32_t*, const std::uint32_t*, std::uint32_t, std::size_t, const Modulus&);
void scale_avx2(std::uint32_t*, std::uint32_t, std::size_t, const Modulus&);
void submul_neon(std::uint32_t*, const std::uint32_t*, std::uint32_t, std::size_t, const Modulus&);
void scale_neon(std::uint32_t*, std::uint32_t, std::size_t, const Modulus&);
bool avx2_compiled();
bool neon_compiled();
}  // namespace detail

}  // namespace sev::simd
