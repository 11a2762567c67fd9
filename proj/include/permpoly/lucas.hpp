#pragma once
// Multinomial coefficients modulo a prime (digit-by-digit in base p), the
// char-2 disjointness shortcut, and the combinatorics of the leading
// coefficient of powers of f = x^(2^s+1) + x^(2^(s-1)+1) + alpha*x over
// F_{2^t}.
//
// Expanding f^k multinomially, a term lands on exponent
// (2^s+1)u + (2^(s-1)+1)v + w with u+v+w = k, and contributes to the
// coefficient of x^(2^t-1) exactly when that exponent is a positive multiple
// of 2^t-1 (x^q = x folds all such terms together; there is no constant term
// to worry about since x divides f). The coefficient is then the sum of
// alpha^w over the triples whose multinomial (k; u,v,w) is odd.

#include <cstdint>
#include <vector>

#include "permpoly/field.hpp"

namespace permpoly {

// (k; parts) mod p, p prime <= 64. parts must sum to k. Zero iff adding the
// parts in base p carries anywhere (Lucas/Dickson); computed positionally
// without ever forming the full coefficient.
uint32_t multinomial_mod_p(uint64_t k, const std::vector<uint64_t>& parts,
                           uint32_t p);

// Odd multinomial test: (k; parts) is odd iff the parts' bit patterns are
// pairwise disjoint (they then necessarily partition k's bits).
bool multinomial_nonzero_mod2(uint64_t k, const std::vector<uint64_t>& parts);

struct ExponentTriple {
  uint64_t u, v, w;  // u + v + w = k
  uint64_t l;        // (2^s+1)u + (2^(s-1)+1)v + w = l * (2^t - 1), l >= 1
};

// All exponent triples of f^k folding onto x^(2^t-1). Quadratic enumeration;
// guarded to t <= 12 and k <= 2^t - 1.
std::vector<ExponentTriple> exponent_triples(uint32_t s, uint32_t t,
                                             uint64_t k);

// Coefficient of x^(2^t-1) in f^k, synthesized from the triples. f must be
// the field F_{2^t} itself (f.n == t).
FieldElement top_coeff_combinatorial(uint32_t s, uint32_t t,
                                     FieldElement alpha, uint64_t k,
                                     const FieldSpec& f);

// Closed forms of that coefficient in the regime 3 <= s < t (empty sums
// are 0):
//   k = 2^t-3:
//     alpha^(2^t - 2^(t-s+2) - 3) * (1 + sum_{i=2..t-s+1} alpha^(2^i))
//   k = 2^t-4:  with S = sum_{i=2..t-s} alpha^(2^i):
//     alpha^(2^t - 2^(t-s+2) - 2^(t-s+1) - 4) * (1 + S)
//       + alpha^(2^t - 2^(t-s+2) - 4) * S
FieldElement closed_form_2t3(uint32_t s, uint32_t t, FieldElement alpha,
                             const FieldSpec& f);
FieldElement closed_form_2t4(uint32_t s, uint32_t t, FieldElement alpha,
                             const FieldSpec& f);

}  // namespace permpoly
