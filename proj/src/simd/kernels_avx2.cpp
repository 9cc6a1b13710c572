// Built with -mavx2; only reached after a runtime CPU check.
#include "sev/simd/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace sev::simd::detail {

#if defined(__AVX2__)

namespace {

// Montgomery product of 8 lanes of a (standard form) by fm = f*R mod p.
// Result is f*a mod p in [0, p).
inline __m256i mont_mul(__m256i a, __m256i fm, __m256i p, __m256i pinv) {
    const __m256i a_odd = _mm256_srli_epi64(a, 32);
    const __m256i t_even = _mm256_mul_epu32(a, fm);
    const __m256i t_odd = _mm256_mul_epu32(a_odd, fm);
    const __m256i m_even = _mm256_mul_epu32(t_even, pinv);
    const __m256i m_odd = _mm256_mul_epu32(t_odd, pinv);
    const __m256i s_even = _mm256_add_epi64(t_even, _mm256_mul_epu32(m_even, p));
    const __m256i s_odd = _mm256_add_epi64(t_odd, _mm256_mul_epu32(m_odd, p));
    __m256i r = _mm256_blend_epi32(_mm256_srli_epi64(s_even, 32), s_odd, 0xAA);
    return _mm256_min_epu32(r, _mm256_sub_epi32(r, p));
}

}  // namespace

void submul_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::size_t n,
                 const Modulus& m) {
    const __m256i p = _mm256_set1_epi32(static_cast<int>(m.p));
    const __m256i pinv = _mm256_set1_epi32(static_cast<int>(m.pneg_inv));
    const __m256i fm = _mm256_set1_epi32(static_cast<int>(m.to_mont(f % m.p)));
    std::size_t j = 0;
    for (; j + 8 <= n; j += 8) {
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + j));
        const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + j));
        const __m256i t = mont_mul(s, fm, p, pinv);
        const __m256i r = _mm256_sub_epi32(d, t);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + j),
                            _mm256_min_epu32(r, _mm256_add_epi32(r, p)));
    }
    if (j < n) submul_scalar(dst + j, src + j, f, n - j, m);
}

void scale_avx2(std::uint32_t* dst, std::uint32_t f, std::size_t n, const Modulus& m) {
    const __m256i p = _mm256_set1_epi32(static_cast<int>(m.p));
    const __m256i pinv = _mm256_set1_epi32(static_cast<int>(m.pneg_inv));
    const __m256i fm = _mm256_set1_epi32(static_cast<int>(m.to_mont(f % m.p)));
    std::size_t j = 0;
    for (; j + 8 <= n; j += 8) {
        const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + j));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + j), mont_mul(d, fm, p, pinv));
    }
    if (j < n) scale_scalar(dst + j, f, n - j, m);
}

bool avx2_compiled() { return true; }

#else

void submul_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::size_t n,
                 const Modulus& m) {
    submul_scalar(dst, src, f, n, m);
}
void scale_avx2(std::uint32_t* dst, std::uint32_t f, std::size_t n, const Modulus& m) {
    scale_scalar(dst, f, n, m);
}
bool avx2_compiled() { return false; }

#endif

}  // namespace sev::simd::detail
