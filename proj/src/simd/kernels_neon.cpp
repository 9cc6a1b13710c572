#include "sev/simd/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>
#endif

namespace sev::simd::detail {

#if defined(__aarch64__) && defined(__ARM_NEON)

namespace {

// Four-lane Montgomery product, same contract as the AVX2 path.
inline uint32x4_t mont_mul(uint32x4_t a, uint32_t fm, uint32x4_t p, uint32_t pinv, uint32_t pp) {
    const uint64x2_t t_lo = vmull_n_u32(vget_low_u32(a), fm);
    const uint64x2_t t_hi = vmull_high_n_u32(a, fm);
    const uint32x2_t m_lo = vmul_n_u32(vmovn_u64(t_lo), pinv);
    const uint32x2_t m_hi = vmul_n_u32(vmovn_u64(t_hi), pinv);
    const uint64x2_t s_lo = vmlal_n_u32(t_lo, m_lo, pp);
    const uint64x2_t s_hi = vmlal_n_u32(t_hi, m_hi, pp);
    const uint32x4_t r = vcombine_u32(vshrn_n_u64(s_lo, 32), vshrn_n_u64(s_hi, 32));
    return vminq_u32(r, vsubq_u32(r, p));
}

}  // namespace

void submul_neon(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::size_t n,
                 const Modulus& m) {
    const uint32x4_t p = vdupq_n_u32(m.p);
    const uint32_t fm = m.to_mont(f % m.p);
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const uint32x4_t t = mont_mul(vld1q_u32(src + j), fm, p, m.pneg_inv, m.p);
        const uint32x4_t r = vsubq_u32(vld1q_u32(dst + j), t);
        vst1q_u32(dst + j, vminq_u32(r, vaddq_u32(r, p)));
    }
    if (j < n) submul_scalar(dst + j, src + j, f, n - j, m);
}

void scale_neon(std::uint32_t* dst, std::uint32_t f, std::size_t n, const Modulus& m) {
    const uint32x4_t p = vdupq_n_u32(m.p);
    const uint32_t fm = m.to_mont(f % m.p);
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) vst1q_u32(dst + j, mont_mul(vld1q_u32(dst + j), fm, p, m.pneg_inv, m.p));
    if (j < n) scale_scalar(dst + j, f, n - j, m);
}

bool neon_compiled() { return true; }

#else

void submul_neon(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::size_t n,
                 const Modulus& m) {
    submul_scalar(dst, src, f, n, m);
}
void scale_neon(std::uint32_t* dst, std::uint32_t f, std::size_t n, const Modulus& m) {
    scale_scalar(dst, f, n, m);
}
bool neon_compiled() { return false; }

#endif

}  // namespace sev::simd::detail
