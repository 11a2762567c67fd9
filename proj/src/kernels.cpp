#include "permpoly/kernels.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "kernels_detail.hpp"

#if defined(__aarch64__) && defined(__linux__)
#include <sys/auxv.h>
#ifndef HWCAP_PMULL
#define HWCAP_PMULL (1 << 4)
#endif
#endif

namespace permpoly::kernels {

ReduceCtx make_ctx(uint32_t n, uint64_t modulus) {
  if (n < 1 || n > 32)
    throw std::invalid_argument("extension degree must be in 1..32");
  if (modulus >> n != 1)
    throw std::invalid_argument("modulus must have degree exactly n");
  // mu = floor(x^(2n) / modulus), plain long division over GF(2). The
  // dividend x^(2n) needs bit 64 when n = 32, hence the 128-bit scratch.
  unsigned __int128 rem = (unsigned __int128)1 << (2 * n);
  uint64_t mu = 0;
  for (int i = (int)n; i >= 0; --i) {
    if ((rem >> (i + (int)n)) & 1) {
      rem ^= (unsigned __int128)modulus << i;
      mu |= 1ull << i;
    }
  }
  return ReduceCtx{n, modulus, mu};
}

uint32_t mul_ref(uint32_t a, uint32_t b, const ReduceCtx& ctx) {
  uint64_t acc = 0;
  uint64_t aw = a;
  while (b) {
    if (b & 1) acc ^= aw;
    aw <<= 1;
    b >>= 1;
  }
  const int n = (int)ctx.n;
  for (int d = 2 * n - 2; d >= n; --d)
    if ((acc >> d) & 1) acc ^= ctx.modulus << (d - n);
  return (uint32_t)acc & ctx.mask();
}

namespace {

using detail::VTable;

uint32_t mul1_scalar(uint32_t a, uint32_t b, const ReduceCtx& ctx) {
  return mul_ref(a, b, ctx);
}

void mul_const_scalar(uint32_t* dst, const uint32_t* src, size_t count,
                      uint32_t c, const ReduceCtx& ctx) {
  for (size_t i = 0; i < count; ++i) dst[i] = mul_ref(src[i], c, ctx);
}

void mul_elems_scalar(uint32_t* dst, const uint32_t* a, const uint32_t* b,
                      size_t count, const ReduceCtx& ctx) {
  for (size_t i = 0; i < count; ++i) dst[i] = mul_ref(a[i], b[i], ctx);
}

void square_scalar(uint32_t* dst, const uint32_t* src, size_t count,
                   const ReduceCtx& ctx) {
  for (size_t i = 0; i < count; ++i) dst[i] = mul_ref(src[i], src[i], ctx);
}

const VTable* vtable_for(Impl impl) {
  switch (impl) {
    case Impl::scalar:
      return &detail::scalar_vtable;
#if defined(__x86_64__) || defined(_M_X64)
    case Impl::clmul:
      return &detail::clmul_vtable;
    case Impl::vclmul:
      return &detail::vclmul_vtable;
#endif
#if defined(__aarch64__)
    case Impl::neon:
      return &detail::neon_vtable;
#endif
    default:
      return nullptr;
  }
}

bool cpu_has(Impl impl) {
  switch (impl) {
    case Impl::scalar:
      return true;
#if defined(__x86_64__) || defined(_M_X64)
    case Impl::clmul:
      return __builtin_cpu_supports("pclmul") != 0;
    case Impl::vclmul:
      return __builtin_cpu_supports("pclmul") != 0 &&
             __builtin_cpu_supports("avx2") != 0 &&
             __builtin_cpu_supports("vpclmulqdq") != 0;
#endif
#if defined(__aarch64__) && defined(__linux__)
    case Impl::neon:
      return (getauxval(AT_HWCAP) & HWCAP_PMULL) != 0;
#endif
    default:
      return false;
  }
}

const VTable* pick_best() {
#if defined(__x86_64__) || defined(_M_X64)
  if (cpu_has(Impl::vclmul)) return &detail::vclmul_vtable;
  if (cpu_has(Impl::clmul)) return &detail::clmul_vtable;
#endif
#if defined(__aarch64__)
  if (cpu_has(Impl::neon)) return &detail::neon_vtable;
#endif
  return &detail::scalar_vtable;
}

bool parse_impl_name(const char* s, Impl* out) {
  if (std::strcmp(s, "scalar") == 0) *out = Impl::scalar;
  else if (std::strcmp(s, "clmul") == 0) *out = Impl::clmul;
  else if (std::strcmp(s, "vclmul") == 0) *out = Impl::vclmul;
  else if (std::strcmp(s, "neon") == 0) *out = Impl::neon;
  else return false;
  return true;
}

const VTable* pick_startup() {
  if (const char* env = std::getenv("PERMPOLY_KERNEL")) {
    if (std::strcmp(env, "auto") != 0) {
      Impl want;
      if (parse_impl_name(env, &want) && cpu_has(want)) {
        if (const VTable* vt = vtable_for(want)) return vt;
      }
      std::fprintf(stderr,
                   "permpoly: PERMPOLY_KERNEL=%s not usable here, "
                   "falling back to auto\n",
                   env);
    }
  }
  return pick_best();
}

std::atomic<const VTable*> g_forced{nullptr};

const VTable& active() {
  if (const VTable* f = g_forced.load(std::memory_order_acquire)) return *f;
  static const VTable* chosen = pick_startup();
  return *chosen;
}

}  // namespace

namespace detail {
const VTable scalar_vtable = {Impl::scalar, mul1_scalar, mul_const_scalar,
                              mul_elems_scalar, square_scalar};
}  // namespace detail

const char* impl_name(Impl impl) {
  switch (impl) {
    case Impl::scalar: return "scalar";
    case Impl::clmul: return "clmul";
    case Impl::vclmul: return "vclmul";
    case Impl::neon: return "neon";
  }
  return "?";
}

bool impl_available(Impl impl) {
  return cpu_has(impl) && vtable_for(impl) != nullptr;
}

Impl active_impl() { return active().id; }

void force_impl(Impl impl) {
  if (!impl_available(impl))
    throw std::invalid_argument(std::string("kernel variant unavailable: ") +
                                impl_name(impl));
  g_forced.store(vtable_for(impl), std::memory_order_release);
}

void reset_impl() { g_forced.store(nullptr, std::memory_order_release); }

uint32_t mul(uint32_t a, uint32_t b, const ReduceCtx& ctx) {
  return active().mul1(a, b, ctx);
}

void mul_const_batch(uint32_t* dst, const uint32_t* src, size_t count,
                     uint32_t c, const ReduceCtx& ctx) {
  active().mul_const(dst, src, count, c, ctx);
}

void mul_batch(uint32_t* dst, const uint32_t* a, const uint32_t* b,
               size_t count, const ReduceCtx& ctx) {
  active().mul_elems(dst, a, b, count, ctx);
}

void square_batch(uint32_t* dst, const uint32_t* src, size_t count,
                  const ReduceCtx& ctx) {
  active().square(dst, src, count, ctx);
}

}  // namespace permpoly::kernels
