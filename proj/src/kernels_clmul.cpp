// PCLMULQDQ variant. Compiled with -mpclmul (see src/CMakeLists.txt); only
// referenced after a cpuid check, so bare use of the intrinsics is safe.

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

// Exact Barrett reduction of a product of degree <= 2n-2.
inline uint32_t reduce(uint64_t p, const ReduceCtx& ctx) {
  uint64_t q = clmul64(p >> ctx.n, ctx.mu) >> ctx.n;
  return (uint32_t)(p ^ clmul64(q, ctx.modulus)) & ctx.mask();
}

uint32_t mul1(uint32_t a, uint32_t b, const ReduceCtx& ctx) {
  return reduce(clmul64(a, b), ctx);
}

void mul_const(uint32_t* dst, const uint32_t* src, size_t count, uint32_t c,
               const ReduceCtx& ctx) {
  for (size_t i = 0; i < count; ++i) dst[i] = reduce(clmul64(src[i], c), ctx);
}

void mul_elems(uint32_t* dst, const uint32_t* a, const uint32_t* b,
               size_t count, const ReduceCtx& ctx) {
  for (size_t i = 0; i < count; ++i)
    dst[i] = reduce(clmul64(a[i], b[i]), ctx);
}

void square(uint32_t* dst, const uint32_t* src, size_t count,
            const ReduceCtx& ctx) {
  for (size_t i = 0; i < count; ++i)
    dst[i] = reduce(clmul64(src[i], src[i]), ctx);
}

}  // namespace

const VTable clmul_vtable = {Impl::clmul, mul1, mul_const, mul_elems, square};

}  // namespace permpoly::kernels::detail

#endif  // x86-64
