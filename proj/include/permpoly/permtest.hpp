#pragma once
// Permutation-polynomial tests over GF(2^n).
//
// Three independent testers plus a roots-of-unity variant:
//  * is_pp_brute     — evaluate everywhere, mark images, exhaustive and dumb.
//  * is_pp_hermite   — Hermite's criterion: exactly one root, and the
//                      coefficient of x^(q-1) in p^k vanishes for every
//                      1 <= k <= q-2. Every k is checked; char-2 exponents
//                      are *not* skipped.
//  * wan_lidl        — for g(x) = x^r f(x^((q-1)/d)) with d | q-1: g permutes
//                      iff (a) gcd(r, (q-1)/d) = 1, (b) f has no root among
//                      the d-th roots of unity, and (c) the d values
//                      g(gamma^i)^((q-1)/d) are pairwise distinct.
//  * roots_of_unity_check — same instance, directly tests whether
//                      x^r f(x)^((q-1)/d) permutes the d-th roots of unity;
//                      equivalent to (b) and (c).
//
// Negative verdicts carry a witness that re-verifies from scratch.

#include <optional>
#include <variant>

#include "permpoly/duptable.hpp"
#include "permpoly/poly.hpp"

namespace permpoly {

enum class Method { brute, hermite, wanlidl, roots_of_unity };
const char* method_name(Method m);

// p(x1) == p(x2), x1 < x2; x2 is the first repeat in ascending evaluation
// order and x1 the smallest preimage of its value, independent of worker
// count.
struct CollisionWitness {
  FieldElement x1, x2;
};
struct RootCountWitness {
  uint64_t roots;  // != 1
};
struct HermiteExponentWitness {
  uint64_t k;         // 1 <= k <= q-2
  FieldElement coeff;  // nonzero coefficient of x^(q-1) in p^k
};
// condition 'a': i = gcd(r, (q-1)/d).
// condition 'b': i = index with f(beta^i) = 0.
// condition 'c': indices i < j with g(gamma^i) and g(gamma^j) mapping to the
// same d-th power; j minimal, then i.
struct WanLidlWitness {
  char condition;
  uint64_t i, j;
};
using Witness = std::variant<CollisionWitness, RootCountWitness,
                             HermiteExponentWitness, WanLidlWitness>;

struct PermVerdict {
  bool is_pp = false;
  Method method = Method::brute;
  std::optional<Witness> witness;
};

struct BruteOptions {
  unsigned workers = 1;
};

// Exhaustive scan; guarded to q <= 2^28.
PermVerdict is_pp_brute(const SparsePoly& p, const FieldSpec& f,
                        const BruteOptions& opts = {});

// Hermite's criterion; dense intermediates, guarded to q <= 4096.
PermVerdict is_pp_hermite(const SparsePoly& p, const FieldSpec& f);

struct WanLidlInstance {
  uint64_t r = 1;
  uint64_t d = 1;       // must divide q - 1
  SparsePoly f_inner;   // the f in x^r f(x^((q-1)/d))
};

// The polynomial g(x) = x^r * f(x^((q-1)/d)), canonicalized.
SparsePoly wan_lidl_poly(const WanLidlInstance& inst, const FieldSpec& f);

// scratch (optional) is a reusable value table for condition (c); callers
// probing many instances over one field should pass one to skip per-call
// allocation. One-off calls sort instead when d is small.
PermVerdict wan_lidl(const WanLidlInstance& inst, const FieldSpec& f,
                     DupTable* scratch = nullptr);

bool roots_of_unity_check(const WanLidlInstance& inst, const FieldSpec& f);

// Recheck a negative verdict's witness independently of the code path that
// produced it. True iff the witness genuinely proves non-bijectivity.
bool verify_witness(const SparsePoly& p, const FieldSpec& f,
                    const PermVerdict& v);
bool verify_witness(const WanLidlInstance& inst, const FieldSpec& f,
                    const PermVerdict& v);

}  // namespace permpoly
