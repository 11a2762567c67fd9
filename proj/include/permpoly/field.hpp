#pragma once
// GF(2^n) construction and element arithmetic, n <= 32.
//
// Elements are bit-packed polynomial-basis coordinates: bit i is the
// coefficient of x^i modulo the field's irreducible modulus. The modulus
// itself carries its leading bit, so F_16 built on x^4 + x + 1 has
// modulus 0x13 and elements 0x0..0xf.
//
// Everything deterministic: make_field(n) always picks the numerically
// smallest irreducible of degree n, and gamma is the smallest-encoding
// generator of the multiplicative group, so encodings are reproducible
// across runs and platforms.

#include <cstdint>
#include <utility>
#include <vector>

#include "permpoly/kernels.hpp"

namespace permpoly {

using FieldElement = uint32_t;  // bit-packed, degree < n

struct FieldSpec {
  uint32_t n = 0;          // extension degree
  uint64_t modulus = 0;    // irreducible, bit n set
  FieldElement gamma = 0;  // smallest-encoding primitive element
  uint64_t order = 0;      // 2^n
  uint64_t group_order = 0;                // 2^n - 1
  std::vector<uint64_t> group_factors;     // distinct primes of 2^n - 1
  kernels::ReduceCtx ctx;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.n == b.n && a.modulus == b.modulus;
  }
};

// Smallest-encoding monic irreducible of degree n over GF(2). For n = 1 this
// is x itself (0b10).
uint64_t find_irreducible(uint32_t n);

bool is_irreducible(uint64_t poly, uint32_t degree);

FieldSpec make_field(uint32_t n);  // default (smallest) modulus
// Explicit modulus; throws std::invalid_argument unless it is irreducible of
// degree exactly n.
FieldSpec make_field(uint32_t n, uint64_t modulus);

inline FieldElement add(FieldElement a, FieldElement b) { return a ^ b; }

inline FieldElement mul(FieldElement a, FieldElement b, const FieldSpec& f) {
  return kernels::mul(a, b, f.ctx);
}

// Square-and-multiply; pow(0, 0) = 1 by convention (needed so that terms
// (a*x)^w with w = 0 contribute 1 even when a = 0).
FieldElement pow(FieldElement x, uint64_t e, const FieldSpec& f);

// Multiplicative inverse; throws std::domain_error on 0.
FieldElement inv(FieldElement x, const FieldSpec& f);

// Order of x in the multiplicative group; x must be nonzero.
uint64_t multiplicative_order(FieldElement x, const FieldSpec& f);

// Smallest-encoding element of multiplicative order 2^n - 1 (recomputes what
// make_field already stored in gamma).
FieldElement find_primitive(const FieldSpec& f);

// x^(2^k), i.e. k applications of the Frobenius automorphism.
FieldElement frobenius(FieldElement x, uint32_t k, const FieldSpec& f);

// The subfield F_{2^m} sitting inside F_{2^n} (requires m | n): generated by
// beta = gamma^((2^n-1)/(2^m-1)).
struct SubfieldView {
  const FieldSpec* parent = nullptr;
  uint32_t m = 0;
  FieldElement beta = 0;
  uint64_t size = 0;  // 2^m
};

SubfieldView subfield_view(const FieldSpec& f, uint32_t m);

// Frobenius membership test: x^(2^m) == x.
bool contains(const SubfieldView& v, FieldElement x);

// {0} followed by beta^0, beta^1, ..., beta^(2^m - 2).
std::vector<FieldElement> enumerate(const SubfieldView& v);

// The two roots of x^2 + x + 1 in the F_4 subfield (requires n even),
// ordered by bit encoding. Each is the square of the other and both have
// multiplicative order 3.
std::pair<FieldElement, FieldElement> omega_pair(const FieldSpec& f);

// Writes a in the F_{2^(2t)} subfield as a = b + c*zeta with b, c in F_{2^t},
// where zeta satisfies zeta + zeta^(2^t) = 1 and theta = zeta^2 + zeta is a
// nonzero element of F_{2^t}. zeta is pinned to eta / (eta + eta^(2^t)) for
// the smallest-encoding eta in F_{2^(2t)} outside F_{2^t}, so the
// decomposition is deterministic. Requires a outside F_{2^t} (else c = 0 and
// the representation degenerates; throws std::domain_error).
struct Decomposition {
  FieldElement b, c, zeta, theta;
};

Decomposition decompose(FieldElement a, const SubfieldView& tview);

// The canonical (zeta, theta) pair used by decompose, exposed so hot loops
// can compute it once.
std::pair<FieldElement, FieldElement> quadratic_splitter(
    const FieldSpec& f, const SubfieldView& tview);

// Field embedding F_{2^m} -> F_{2^n} (m | n), realized by mapping the small
// field's x-class to the smallest-encoding root of its modulus in the big
// field. Degenerates to the identity when the two specs coincide.
struct Embedding {
  const FieldSpec* from = nullptr;
  const FieldSpec* to = nullptr;
  std::vector<FieldElement> basis_image;  // images of x^0, x^1, ..., x^(m-1)
};

Embedding make_embedding(const FieldSpec& small, const FieldSpec& big);
FieldElement embed(const Embedding& e, FieldElement a);

}  // namespace permpoly
