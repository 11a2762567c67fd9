#pragma once
// Polynomials over GF(2^n), reduced as *functions* on the field: x^q = x, so
// any positive exponent e is canonically ((e - 1) mod (q - 1)) + 1 and the
// exponent 0 stays 0. Two canonical polynomials induce the same map iff they
// are identical.
//
// Sparse form is the external representation. Dense form (a coefficient per
// canonical exponent) backs the repeated-multiplication paths; those are
// guarded to q <= 4096 since anything bigger has no business exponentiating
// densely.

#include <cstdint>
#include <utility>
#include <vector>

#include "permpoly/field.hpp"

namespace permpoly {

struct SparsePoly {
  // (exponent, coefficient): coefficients nonzero, exponents canonical and
  // strictly ascending. Produced by canonicalize(); treat as immutable.
  std::vector<std::pair<uint64_t, FieldElement>> terms;

  bool operator==(const SparsePoly&) const = default;
};

// Canonical exponent of e modulo the function identity x^q = x.
inline uint64_t canonical_exponent(uint64_t e, const FieldSpec& f) {
  return e == 0 ? 0 : (e - 1) % f.group_order + 1;
}

// Collapses arbitrary (exponent, coefficient) pairs: wraps exponents, xors
// duplicate terms together, drops zero coefficients, sorts. Coefficients must
// be valid field elements.
SparsePoly canonicalize(
    const std::vector<std::pair<uint64_t, FieldElement>>& raw_terms,
    const FieldSpec& f);

FieldElement eval(const SparsePoly& p, FieldElement x, const FieldSpec& f);

// Product of canonical polynomials, canonicalized.
SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b,
                    const FieldSpec& f);

// Coefficient of x^(q-1), the exponent Hermite's criterion cares about.
FieldElement coeff_top(const SparsePoly& p, const FieldSpec& f);

enum class PowStrategy { square_multiply, incremental };

// p^k as a canonical polynomial. Both strategies must agree; the square-and-
// multiply default does popcount(k) sparse multiplies plus bit-length
// squarings, the incremental one does k-1 sparse multiplies (and is what the
// Hermite scan uses, since it wants every intermediate power anyway).
// Guarded to q <= 4096.
SparsePoly poly_pow_mod(const SparsePoly& p, uint64_t k, const FieldSpec& f,
                        PowStrategy strategy = PowStrategy::square_multiply);

// --- dense form ---

struct DensePoly {
  std::vector<FieldElement> c;  // size q, index = canonical exponent
};

DensePoly to_dense(const SparsePoly& p, const FieldSpec& f);
SparsePoly to_sparse(const DensePoly& d, const FieldSpec& f);

// out = g * p (p sparse). out must not alias g; it is resized and
// overwritten.
void dense_mul_sparse(DensePoly& out, const DensePoly& g, const SparsePoly& p,
                      const FieldSpec& f);

// out = g^2, using the Frobenius scatter (char 2: cross terms vanish).
void dense_square(DensePoly& out, const DensePoly& g, const FieldSpec& f);

}  // namespace permpoly
