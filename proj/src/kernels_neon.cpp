// AArch64 PMULL variant. Same Barrett scheme as the x86 paths; PMULL gives
// the full 64x64 carry-less product in one instruction. Compiled with
// -march=armv8-a+crypto and gated behind an HWCAP_PMULL check at dispatch.

#if defined(__aarch64__)

#include <arm_neon.h>

#include "kernels_detail.hpp"

namespace permpoly::kernels::detail {

namespace {

inline uint64_t clmul64(uint64_t a, uint64_t b) {
  poly128_t p = vmull_p64((poly64_t)a, (poly64_t)b);
  return vgetq_lane_u64(vreinterpretq_u64_p128(p), 0);
}

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

const VTable neon_vtable = {Impl::neon, mul1, mul_const, mul_elems, square};

}  // namespace permpoly::kernels::detail

#endif  // __aarch64__
