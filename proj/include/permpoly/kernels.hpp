#pragma once
// Carry-less multiplication kernels for GF(2^n), n <= 32.
//
// A field representation is a ReduceCtx: the modulus (monic irreducible of
// degree exactly n, bit n set) plus a precomputed Barrett constant
// mu = floor(x^(2n) / m). A product is then three carry-less multiplies:
//
//   p = clmul(a, b)                 deg p <= 2n-2
//   q = clmul(p >> n, mu) >> n      exact Euclidean quotient floor(p / m)
//   r = p ^ clmul(q, m)             deg r < n
//
// The quotient step is exact (not an approximation) whenever deg p <= 2n-2:
// writing p = A*x^n + B and x^(2n) = mu*m + rho, one gets
// A*mu = floor(p/m)*x^n + S with deg(S*m) = deg((r+B)*x^n + A*rho) <= 2n-1,
// hence deg S < n and the shift recovers the quotient bit-exactly.
//
// Batch entry points are bound at startup to the widest variant the CPU
// offers: plain shift-and-xor, PCLMULQDQ, VPCLMULQDQ (4 lanes per iteration),
// or PMULL on AArch64. PERMPOLY_KERNEL=scalar|clmul|vclmul|neon overrides the
// choice, and force_impl() does the same programmatically for tests.

#include <cstddef>
#include <cstdint>

namespace permpoly::kernels {

struct ReduceCtx {
  uint32_t n = 0;        // extension degree, 1..32
  uint64_t modulus = 0;  // bit n always set
  uint64_t mu = 0;       // floor(x^(2n) / modulus), degree exactly n
  uint32_t mask() const {
    return n >= 32 ? ~0u : ((1u << n) - 1u);
  }
};

// Computes the Barrett constant by GF(2)[x] long division. The modulus must
// have degree exactly n with 1 <= n <= 32.
ReduceCtx make_ctx(uint32_t n, uint64_t modulus);

enum class Impl : uint8_t { scalar, clmul, vclmul, neon };

const char* impl_name(Impl impl);
bool impl_available(Impl impl);
Impl active_impl();
// Throws std::invalid_argument if the variant is not available on this CPU.
void force_impl(Impl impl);
void reset_impl();  // back to automatic selection

// Reference multiply: shift-and-xor, no intrinsics, no dispatch. Every other
// variant is equivalence-tested against this one.
uint32_t mul_ref(uint32_t a, uint32_t b, const ReduceCtx& ctx);

// Dispatched single multiply.
uint32_t mul(uint32_t a, uint32_t b, const ReduceCtx& ctx);

// dst[i] = src[i] * c for i < count. dst may alias src.
void mul_const_batch(uint32_t* dst, const uint32_t* src, size_t count,
                     uint32_t c, const ReduceCtx& ctx);

// dst[i] = a[i] * b[i]. dst may alias either input.
void mul_batch(uint32_t* dst, const uint32_t* a, const uint32_t* b,
               size_t count, const ReduceCtx& ctx);

// dst[i] = src[i]^2. Squaring spends one clmul less than a general product.
void square_batch(uint32_t* dst, const uint32_t* src, size_t count,
                  const ReduceCtx& ctx);

}  // namespace permpoly::kernels
