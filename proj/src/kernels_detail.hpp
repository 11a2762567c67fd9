#pragma once
// Internal: the per-variant function table. Each variant lives in its own
// translation unit so it can be compiled with the matching -m flags; only the
// dispatcher in kernels.cpp touches these directly.

#include "permpoly/kernels.hpp"

namespace permpoly::kernels::detail {

struct VTable {
  Impl id;
  uint32_t (*mul1)(uint32_t, uint32_t, const ReduceCtx&);
  void (*mul_const)(uint32_t*, const uint32_t*, size_t, uint32_t,
                    const ReduceCtx&);
  void (*mul_elems)(uint32_t*, const uint32_t*, const uint32_t*, size_t,
                    const ReduceCtx&);
  void (*square)(uint32_t*, const uint32_t*, size_t, const ReduceCtx&);
};

extern const VTable scalar_vtable;
#if defined(__x86_64__) || defined(_M_X64)
extern const VTable clmul_vtable;
extern const VTable vclmul_vtable;
#endif
#if defined(__aarch64__)
extern const VTable neon_vtable;
#endif

}  // namespace permpoly::kernels::detail
