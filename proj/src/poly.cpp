#include "permpoly/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace permpoly {

namespace {

constexpr uint64_t kDenseLimit = 4096;  // q cap for dense exponentiation

void require_dense_ok(const FieldSpec& f) {
  if (f.order > kDenseLimit)
    throw std::invalid_argument("dense polynomial ops limited to q <= 4096");
}

// tmp-buffered dst[i] ^= src[i] * cf
void xor_mul_const(FieldElement* dst, const FieldElement* src, size_t len,
                   FieldElement cf, const FieldSpec& f) {
  FieldElement tmp[512];
  while (len > 0) {
    size_t chunk = len < 512 ? len : 512;
    kernels::mul_const_batch(tmp, src, chunk, cf, f.ctx);
    for (size_t i = 0; i < chunk; ++i) dst[i] ^= tmp[i];
    dst += chunk;
    src += chunk;
    len -= chunk;
  }
}

}  // namespace

SparsePoly canonicalize(
    const std::vector<std::pair<uint64_t, FieldElement>>& raw_terms,
    const FieldSpec& f) {
  std::map<uint64_t, FieldElement> acc;
  for (const auto& [e, c] : raw_terms) {
    if ((uint64_t)c >= f.order)
      throw std::invalid_argument("coefficient outside the field");
    if (c == 0) continue;
    acc[canonical_exponent(e, f)] ^= c;
  }
  SparsePoly p;
  for (const auto& [e, c] : acc)
    if (c != 0) p.terms.emplace_back(e, c);
  return p;
}

FieldElement eval(const SparsePoly& p, FieldElement x, const FieldSpec& f) {
  FieldElement r = 0;
  for (const auto& [e, c] : p.terms) r = add(r, mul(c, pow(x, e, f), f));
  return r;
}

SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b,
                    const FieldSpec& f) {
  std::vector<std::pair<uint64_t, FieldElement>> raw;
  raw.reserve(a.terms.size() * b.terms.size());
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms)
      raw.emplace_back(ea + eb, mul(ca, cb, f));
  return canonicalize(raw, f);
}

FieldElement coeff_top(const SparsePoly& p, const FieldSpec& f) {
  for (const auto& [e, c] : p.terms)
    if (e == f.group_order) return c;
  return 0;
}

DensePoly to_dense(const SparsePoly& p, const FieldSpec& f) {
  require_dense_ok(f);
  DensePoly d;
  d.c.assign(f.order, 0);
  for (const auto& [e, c] : p.terms) d.c[e] ^= c;
  return d;
}

SparsePoly to_sparse(const DensePoly& d, const FieldSpec& f) {
  SparsePoly p;
  for (uint64_t e = 0; e < d.c.size(); ++e)
    if (d.c[e] != 0) p.terms.emplace_back(e, d.c[e]);
  return p;
}

void dense_mul_sparse(DensePoly& out, const DensePoly& g, const SparsePoly& p,
                      const FieldSpec& f) {
  const uint64_t q = f.order;
  out.c.assign(q, 0);
  for (const auto& [e, cf] : p.terms) {
    if (e == 0) {
      xor_mul_const(out.c.data(), g.c.data(), q, cf, f);
      continue;
    }
    // x^i * x^e: exponents i in [0, q-1-e] land on [e, q-1] unwrapped, the
    // rest wrap around the x^q = x identity onto [1, e].
    xor_mul_const(out.c.data() + e, g.c.data(), q - e, cf, f);
    xor_mul_const(out.c.data() + 1, g.c.data() + (q - e), e, cf, f);
  }
}

void dense_square(DensePoly& out, const DensePoly& g, const FieldSpec& f) {
  const uint64_t q = f.order;
  std::vector<FieldElement> sq(q);
  kernels::square_batch(sq.data(), g.c.data(), q, f.ctx);
  out.c.assign(q, 0);
  out.c[0] = sq[0];
  for (uint64_t i = 1; i < q; ++i) {
    uint64_t j = 2 * i;
    if (j > q - 1) j -= q - 1;
    out.c[j] ^= sq[i];
  }
}

SparsePoly poly_pow_mod(const SparsePoly& p, uint64_t k, const FieldSpec& f,
                        PowStrategy strategy) {
  require_dense_ok(f);
  if (k == 0) return canonicalize({{0, 1}}, f);
  DensePoly acc, scratch;
  if (strategy == PowStrategy::incremental) {
    acc = to_dense(p, f);
    for (uint64_t i = 1; i < k; ++i) {
      dense_mul_sparse(scratch, acc, p, f);
      std::swap(acc, scratch);
    }
  } else {
    acc.c.assign(f.order, 0);
    acc.c[0] = 1;
    int top = 63;
    while (top > 0 && !((k >> top) & 1)) --top;
    for (int bit = top; bit >= 0; --bit) {
      dense_square(scratch, acc, f);
      std::swap(acc, scratch);
      if ((k >> bit) & 1) {
        dense_mul_sparse(scratch, acc, p, f);
        std::swap(acc, scratch);
      }
    }
  }
  return to_sparse(acc, f);
}

}  // namespace permpoly
