// VPCLMULQDQ variant: four field elements per iteration. Elements are
// widened to the even 64-bit lanes of a ymm register; one
// _mm256_clmulepi64_epi128 then yields two 128-bit products (one per lane
// half), so a 4-element product plus Barrett reduction costs six clmul
// instructions. Products never exceed 63 bits for n <= 32, so the odd lanes
// stay zero and the unpacklo trick regroups results without masking.
//
// Compiled with -mpclmul -mavx2 -mvpclmulqdq; referenced only after cpuid.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "kernels_detail.hpp"

namespace permpoly::kernels::detail {

namespace {

inline uint64_t clmul64(uint64_t a, uint64_t b) {
  __m128i r = _mm_clmulepi64_si128(_mm_cvtsi64_si128((long long)a),
                                   _mm_cvtsi64_si128((long long)b), 0x00);
  return (uint64_t)_mm_cvtsi128_si64(r);
}

inline uint32_t reduce1(uint64_t p, const ReduceCtx& ctx) {
  uint64_t q = clmul64(p >> ctx.n, ctx.mu) >> ctx.n;
  return (uint32_t)(p ^ clmul64(q, ctx.modulus)) & ctx.mask();
}

struct Consts {
  __m256i mu, mod, mask;
  __m128i shift;  // runtime n for vpsrlq
};

inline Consts make_consts(const ReduceCtx& ctx) {
  Consts k;
  k.mu = _mm256_set1_epi64x((long long)ctx.mu);
  k.mod = _mm256_set1_epi64x((long long)ctx.modulus);
  k.mask = _mm256_set1_epi64x((long long)(uint64_t)ctx.mask());
  k.shift = _mm_cvtsi32_si128((int)ctx.n);
  return k;
}

// Input: products of 4 elements in the 64-bit lanes of p. Output: reduced
// residues in the same lanes.
inline __m256i barrett4(__m256i p, const Consts& k) {
  __m256i hi = _mm256_srl_epi64(p, k.shift);
  __m256i q02 = _mm256_clmulepi64_epi128(hi, k.mu, 0x00);
  __m256i q13 = _mm256_clmulepi64_epi128(hi, k.mu, 0x01);
  __m256i q = _mm256_srl_epi64(_mm256_unpacklo_epi64(q02, q13), k.shift);
  __m256i r02 = _mm256_clmulepi64_epi128(q, k.mod, 0x00);
  __m256i r13 = _mm256_clmulepi64_epi128(q, k.mod, 0x01);
  __m256i folded = _mm256_xor_si256(p, _mm256_unpacklo_epi64(r02, r13));
  return _mm256_and_si256(folded, k.mask);
}

inline __m256i load4(const uint32_t* p) {
  return _mm256_cvtepu32_epi64(_mm_loadu_si128((const __m128i*)p));
}

inline void store4(uint32_t* p, __m256i r) {
  const __m256i idx = _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0);
  __m256i packed = _mm256_permutevar8x32_epi32(r, idx);
  _mm_storeu_si128((__m128i*)p, _mm256_castsi256_si128(packed));
}

uint32_t mul1(uint32_t a, uint32_t b, const ReduceCtx& ctx) {
  return reduce1(clmul64(a, b), ctx);
}

void mul_const(uint32_t* dst, const uint32_t* src, size_t count, uint32_t c,
               const ReduceCtx& ctx) {
  const Consts k = make_consts(ctx);
  const __m256i cv = _mm256_set1_epi64x((long long)(uint64_t)c);
  size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256i x = load4(src + i);
    __m256i p02 = _mm256_clmulepi64_epi128(x, cv, 0x00);
    __m256i p13 = _mm256_clmulepi64_epi128(x, cv, 0x01);
    store4(dst + i, barrett4(_mm256_unpacklo_epi64(p02, p13), k));
  }
  for (; i < count; ++i) dst[i] = reduce1(clmul64(src[i], c), ctx);
}

void mul_elems(uint32_t* dst, const uint32_t* a, const uint32_t* b,
               size_t count, const ReduceCtx& ctx) {
  const Consts k = make_consts(ctx);
  size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256i x = load4(a + i);
    __m256i y = load4(b + i);
    __m256i p02 = _mm256_clmulepi64_epi128(x, y, 0x00);
    __m256i p13 = _mm256_clmulepi64_epi128(x, y, 0x11);
    store4(dst + i, barrett4(_mm256_unpacklo_epi64(p02, p13), k));
  }
  for (; i < count; ++i) dst[i] = reduce1(clmul64(a[i], b[i]), ctx);
}

void square(uint32_t* dst, const uint32_t* src, size_t count,
            const ReduceCtx& ctx) {
  const Consts k = make_consts(ctx);
  size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256i x = load4(src + i);
    __m256i p02 = _mm256_clmulepi64_epi128(x, x, 0x00);
    __m256i p13 = _mm256_clmulepi64_epi128(x, x, 0x11);
    store4(dst + i, barrett4(_mm256_unpacklo_epi64(p02, p13), k));
  }
  for (; i < count; ++i) dst[i] = reduce1(clmul64(src[i], src[i]), ctx);
}

}  // namespace

const VTable vclmul_vtable = {Impl::vclmul, mul1, mul_const, mul_elems,
                              square};

}  // namespace permpoly::kernels::detail

#endif  // x86-64
