#pragma once
// Family classifiers.
//
// Trinomial family: f(x) = x^(2^s+1) + x^(2^(s-1)+1) + alpha*x over F_{2^t}.
// Binomial family:  g(x) = x^(E+1) + a*x over F_{2^n} with n = 2^s * t,
//                   E = (2^n-1)/(2^t-1), and a drawn from F_{2^(2t)}^*.
//
// Both classifiers come in two modes. `literal` applies the stated rule for
// the parameter range it was formulated in, verbatim. `canonical` first
// folds s by the Frobenius period of the relevant subfield (x^(2^s) depends
// only on s mod t over F_{2^t}) and handles the degenerate wrap cases, so it
// is meaningful for every s >= 1. A decision carries the first failed
// condition, in the order the conditions are checked.
//
// The binomial side never materializes F_{2^n} (n = 2^s*t overflows quickly);
// it works with (s, t, a) inside any field containing F_{2^(2t)}. The
// reduction reduce_binomial() maps g to an equivalent trinomial instance over
// the F_{2^t} subfield: with zeta a root of z^2 + z = theta splitting
// F_{2^(2t)} = F_{2^t}(zeta), write a = b + c*zeta (c = a + a^(2^t) != 0 iff
// a is outside F_{2^t}), then g permutes F_{2^n} iff the trinomial with
//   alpha = ((b^2 + b*c + c^2*theta) / c^2) ^ (2^(s-1))
// permutes F_{2^t}.

#include <cstdint>

#include "permpoly/field.hpp"
#include "permpoly/permtest.hpp"

namespace permpoly {

enum class Mode : uint8_t { literal, canonical };

enum class FailTag : uint8_t {
  none,
  t_parity,      // t even
  s_range,       // s (or s mod t) outside the permitted set
  alpha_value,   // trinomial coefficient != 1
  a_membership,  // a^(2^t-1) not a primitive cube root of unity
};
const char* fail_tag_name(FailTag tag);

struct ClassifierDecision {
  bool is_pp = false;
  FailTag failed = FailTag::none;
};

struct TrinomialParams {
  uint32_t s = 1;
  uint32_t t = 1;
  FieldElement alpha = 1;  // encoded in F_{2^t}
};

ClassifierDecision classify_trinomial(const TrinomialParams& p, Mode mode);

// The trinomial as a polynomial over F_{2^t} (ft.n must equal t); exponents
// are reduced mod 2^t-1 so large s is fine.
SparsePoly trinomial_poly(const TrinomialParams& p, const FieldSpec& ft);

struct BinomialParams {
  uint32_t s = 1;
  uint32_t t = 1;
  FieldElement a = 0;  // encoded in `field` (must lie in its 2t-subfield)
};

// `field` is any field with 2t | field.n whose encoding holds a.
ClassifierDecision classify_binomial(const BinomialParams& p,
                                     const FieldSpec& field, Mode mode);

// a^(2^t-1) in {omega, omega^2} (the primitive cube roots of unity)?
bool binomial_membership(FieldElement a, uint32_t t, const FieldSpec& field);

struct ReducedTrinomial {
  TrinomialParams tri;  // tri.alpha encoded in `field` (value in F_{2^t})
  FieldElement c;       // a + a^(2^t), nonzero by construction
};

// Requires a in F_{2^(2t)} \ F_{2^t} (throws domain_error on the inside
// part, where the reduction degenerates; that range is exactly where the
// binomial's roots-of-unity condition fails anyway).
ReducedTrinomial reduce_binomial(const BinomialParams& p,
                                 const FieldSpec& field);

// Brute-force PP verdict for the trinomial restricted to the F_{2^t}
// subfield of `field`; tri.alpha is given in `field` encoding. Scan order is
// the subfield enumeration (0, beta^0, beta^1, ...), and the witness, if
// any, is reported in that order.
PermVerdict trinomial_pp_on_subfield(const TrinomialParams& tri,
                                     const FieldSpec& field);

// Exhaustively tests whether x -> x * (x+a)^((2^n-1)/(2^t-1)) permutes the
// F_{2^t} subfield of the ambient field (ambient.n must equal 2^s * t).
// This map is the restriction the binomial's permutation behaviour hinges
// on; its verdict must match Wan-Lidl conditions (b) and (c) for g.
PermVerdict subfield_map_verdict(const BinomialParams& p,
                                 const FieldSpec& ambient);

// Four independent computations of the membership condition on a (nonzero,
// in the 2t-subfield):
//   alpha_form: b^2 + b*c + c^2*theta == c^2 (i.e. reduced alpha == 1);
//               false when a is in F_{2^t} (reduction degenerate)
//   poly_form:  a^(2^(t+1)) + a^2 + a^(2^t+1) == 0
//   root_form:  a^(2^t-1) in {omega, omega^2}
//   coset_form: a in omega*F_{2^t}^* union omega^2*F_{2^t}^*
struct MembershipAgreement {
  bool agree = false;      // all four forms computed the same boolean
  bool satisfied = false;  // the common verdict (root_form's value)
  bool alpha_form = false, poly_form = false, root_form = false,
       coset_form = false;
};
MembershipAgreement membership_conditions_agree(FieldElement a, uint32_t t,
                                                const FieldSpec& field);

}  // namespace permpoly
