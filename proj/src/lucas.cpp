#include "permpoly/lucas.hpp"

#include <stdexcept>

namespace permpoly {

namespace {

bool is_small_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void check_sum(uint64_t k, const std::vector<uint64_t>& parts) {
  uint64_t sum = 0;
  for (uint64_t x : parts) {
    if (x > k || sum > k - x) throw std::invalid_argument("parts exceed k");
    sum += x;
  }
  if (sum != k) throw std::invalid_argument("parts must sum to k");
}

}  // namespace

uint32_t multinomial_mod_p(uint64_t k, const std::vector<uint64_t>& parts,
                           uint32_t p) {
  if (p > 64 || !is_small_prime(p))
    throw std::invalid_argument("modulus must be a prime <= 64");
  check_sum(k, parts);

  // Pascal's triangle mod p for digit binomials (all arguments < p).
  uint32_t binom[64][64] = {};
  for (uint32_t i = 0; i < p; ++i) {
    binom[i][0] = 1;
    for (uint32_t j = 1; j <= i; ++j)
      binom[i][j] = (binom[i - 1][j - 1] + binom[i - 1][j]) % p;
  }

  std::vector<uint64_t> rem(parts);
  uint32_t r = 1;
  while (k > 0) {
    uint32_t avail = (uint32_t)(k % p);
    for (uint64_t& pt : rem) {
      uint32_t d = (uint32_t)(pt % p);
      if (d > avail) return 0;  // carry when adding the parts back up
      r = (uint32_t)((uint64_t)r * binom[avail][d] % p);
      avail -= d;
      pt /= p;
    }
    if (avail != 0) return 0;  // part digits undershoot: carry from below
    k /= p;
  }
  return r;
}

bool multinomial_nonzero_mod2(uint64_t k,
                              const std::vector<uint64_t>& parts) {
  check_sum(k, parts);
  uint64_t acc = 0;
  for (uint64_t x : parts) {
    if (acc & x) return false;
    acc |= x;
  }
  return acc == k;
}

std::vector<ExponentTriple> exponent_triples(uint32_t s, uint32_t t,
                                             uint64_t k) {
  if (s < 1 || s > 32) throw std::invalid_argument("s out of range");
  if (t < 1 || t > 12) throw std::invalid_argument("t out of range");
  uint64_t group = (1ull << t) - 1;
  if (k > group) throw std::invalid_argument("k out of range");

  uint64_t e1 = (1ull << s) + 1;
  uint64_t e2 = (1ull << (s - 1)) + 1;
  std::vector<ExponentTriple> out;
  for (uint64_t u = 0; u <= k; ++u) {
    for (uint64_t v = 0; u + v <= k; ++v) {
      uint64_t w = k - u - v;
      uint64_t exp = e1 * u + e2 * v + w;
      if (exp == 0 || exp % group != 0) continue;
      out.push_back({u, v, w, exp / group});
    }
  }
  return out;
}

FieldElement top_coeff_combinatorial(uint32_t s, uint32_t t,
                                     FieldElement alpha, uint64_t k,
                                     const FieldSpec& f) {
  if (f.n != t) throw std::invalid_argument("field degree must equal t");
  FieldElement acc = 0;
  for (const ExponentTriple& tr : exponent_triples(s, t, k))
    if (multinomial_nonzero_mod2(k, {tr.u, tr.v, tr.w}))
      acc = add(acc, pow(alpha, tr.w, f));
  return acc;
}

namespace {

void check_regime(uint32_t s, uint32_t t, const FieldSpec& f) {
  if (s < 3 || s >= t) throw std::invalid_argument("need 3 <= s < t");
  if (f.n != t) throw std::invalid_argument("field degree must equal t");
}

// sum_{i=lo..hi} alpha^(2^i); empty when hi < lo.
FieldElement frob_sum(FieldElement alpha, uint32_t lo, uint32_t hi,
                      const FieldSpec& f) {
  FieldElement acc = 0;
  for (uint32_t i = lo; i <= hi; ++i)
    acc = add(acc, pow(alpha, 1ull << i, f));
  return acc;
}

}  // namespace

FieldElement closed_form_2t3(uint32_t s, uint32_t t, FieldElement alpha,
                             const FieldSpec& f) {
  check_regime(s, t, f);
  uint64_t a3 = (1ull << t) - (1ull << (t - s + 2)) - 3;
  return mul(pow(alpha, a3, f), add(1, frob_sum(alpha, 2, t - s + 1, f)), f);
}

FieldElement closed_form_2t4(uint32_t s, uint32_t t, FieldElement alpha,
                             const FieldSpec& f) {
  check_regime(s, t, f);
  uint64_t lead = (1ull << t) - (1ull << (t - s + 2)) - 4;
  FieldElement sum = frob_sum(alpha, 2, t - s, f);
  FieldElement first =
      mul(pow(alpha, lead - (1ull << (t - s + 1)), f), add(1, sum), f);
  return add(first, mul(pow(alpha, lead, f), sum, f));
}

}  // namespace permpoly
