#include "permpoly/classify.hpp"

#include <stdexcept>
#include <unordered_map>

#include "permpoly/poly.hpp"

namespace permpoly {

const char* fail_tag_name(FailTag tag) {
  switch (tag) {
    case FailTag::none: return "none";
    case FailTag::t_parity: return "t-parity";
    case FailTag::s_range: return "s-range";
    case FailTag::alpha_value: return "alpha-value";
    case FailTag::a_membership: return "a-membership";
  }
  return "?";
}

namespace {

void validate_trinomial(const TrinomialParams& p) {
  if (p.s < 1 || p.s > 62) throw std::invalid_argument("s out of range");
  if (p.t < 1 || p.t > 32) throw std::invalid_argument("t out of range");
  if (p.t < 32 && p.alpha >= (1u << p.t))
    throw std::invalid_argument("alpha outside F_{2^t}");
}

void validate_binomial(const BinomialParams& p, const FieldSpec& field) {
  if (p.s < 1 || p.s > 62) throw std::invalid_argument("s out of range");
  uint32_t tt = 2 * p.t;
  if (p.t < 1 || tt > field.n || field.n % tt != 0)
    throw std::invalid_argument("field must contain F_{2^(2t)}");
  if ((uint64_t)p.a >= field.order)
    throw std::invalid_argument("a outside field");
  if (frobenius(p.a, tt, field) != p.a)
    throw std::invalid_argument("a outside F_{2^(2t)}");
}

}  // namespace

ClassifierDecision classify_trinomial(const TrinomialParams& p, Mode mode) {
  validate_trinomial(p);
  if (mode == Mode::literal) {
    if (p.t % 2 == 0) return {false, FailTag::t_parity};
    if (p.alpha != 1) return {false, FailTag::alpha_value};
    if (p.s != 1 && p.s != 2) return {false, FailTag::s_range};
    return {true, FailTag::none};
  }
  uint32_t r = p.s % p.t;
  if (r == 0) {
    // s a multiple of t: x^(2^s) is the identity on F_{2^t}, so the map is
    // x^2 + x^(2^(t-1)+1) + alpha*x; a bijection only in the t = 1 collapse.
    if (p.t != 1) return {false, FailTag::s_range};
    return p.alpha == 1 ? ClassifierDecision{true, FailTag::none}
                        : ClassifierDecision{false, FailTag::alpha_value};
  }
  if (p.t % 2 == 0) return {false, FailTag::t_parity};
  if (p.alpha != 1) return {false, FailTag::alpha_value};
  if (r != 1 && r != 2) return {false, FailTag::s_range};
  return {true, FailTag::none};
}

SparsePoly trinomial_poly(const TrinomialParams& p, const FieldSpec& ft) {
  validate_trinomial(p);
  if (ft.n != p.t) throw std::invalid_argument("field degree must equal t");
  return canonicalize({{(1ull << p.s) + 1, 1},
                       {(1ull << (p.s - 1)) + 1, 1},
                       {1, p.alpha}},
                      ft);
}

ClassifierDecision classify_binomial(const BinomialParams& p,
                                     const FieldSpec& field, Mode mode) {
  validate_binomial(p, field);
  if (p.a == 0) throw std::invalid_argument("a must be nonzero");
  if (p.t % 2 == 0) return {false, FailTag::t_parity};
  bool s_ok = mode == Mode::literal
                  ? (p.s == 1 || p.s == 2)
                  : (p.t == 1 || p.s % p.t == 1 || p.s % p.t == 2);
  if (!s_ok) return {false, FailTag::s_range};
  if (!binomial_membership(p.a, p.t, field))
    return {false, FailTag::a_membership};
  return {true, FailTag::none};
}

bool binomial_membership(FieldElement a, uint32_t t, const FieldSpec& field) {
  uint32_t tt = 2 * t;
  if (t < 1 || tt > field.n || field.n % tt != 0)
    throw std::invalid_argument("field must contain F_{2^(2t)}");
  auto [w1, w2] = omega_pair(field);
  FieldElement m = pow(a, (1ull << t) - 1, field);
  return m == w1 || m == w2;
}

ReducedTrinomial reduce_binomial(const BinomialParams& p,
                                 const FieldSpec& field) {
  validate_binomial(p, field);
  if (p.a == 0) throw std::domain_error("a must be nonzero");
  SubfieldView tv = subfield_view(field, p.t);
  Decomposition d = decompose(p.a, tv);  // rejects a inside F_{2^t}
  FieldElement c2 = mul(d.c, d.c, field);
  FieldElement num = add(add(mul(d.b, d.b, field), mul(d.b, d.c, field)),
                         mul(c2, d.theta, field));
  FieldElement base = mul(num, inv(c2, field), field);
  // num/c^2 is also the relative norm of a scaled by c^2; cross-check.
  if (mul(base, c2, field) != mul(frobenius(p.a, p.t, field), p.a, field))
    throw std::logic_error("norm cross-check failed in reduction");
  FieldElement alpha = frobenius(base, (p.s - 1) % p.t, field);
  return {{p.s, p.t, alpha}, d.c};
}

namespace {

// Scan `images` (paired with their preimages, in scan order) for a repeat.
PermVerdict collision_verdict(
    const std::vector<std::pair<FieldElement, FieldElement>>& pre_img,
    Method method) {
  std::unordered_map<FieldElement, FieldElement> first;
  first.reserve(pre_img.size() * 2);
  for (const auto& [x, y] : pre_img) {
    auto [it, fresh] = first.emplace(y, x);
    if (!fresh)
      return {false, method, Witness{CollisionWitness{it->second, x}}};
  }
  return {true, method, std::nullopt};
}

}  // namespace

PermVerdict trinomial_pp_on_subfield(const TrinomialParams& tri,
                                     const FieldSpec& field) {
  if (tri.s < 1 || tri.s > 62) throw std::invalid_argument("s out of range");
  if (tri.t < 1 || tri.t > field.n || field.n % tri.t != 0)
    throw std::invalid_argument("field lacks the t-subfield");
  if (tri.t > 24) throw std::invalid_argument("subfield too large");
  SubfieldView tv = subfield_view(field, tri.t);
  if (!contains(tv, tri.alpha))
    throw std::invalid_argument("alpha outside the t-subfield");
  uint64_t e1 = (1ull << tri.s) + 1;
  uint64_t e2 = (1ull << (tri.s - 1)) + 1;
  std::vector<std::pair<FieldElement, FieldElement>> pre_img;
  pre_img.reserve((size_t)tv.size);
  for (FieldElement x : enumerate(tv)) {
    FieldElement y = add(add(pow(x, e1, field), pow(x, e2, field)),
                         mul(tri.alpha, x, field));
    pre_img.emplace_back(x, y);
  }
  return collision_verdict(pre_img, Method::brute);
}

PermVerdict subfield_map_verdict(const BinomialParams& p,
                                 const FieldSpec& ambient) {
  validate_binomial(p, ambient);
  if (((uint64_t)p.t << p.s) != ambient.n)
    throw std::invalid_argument("ambient degree must equal 2^s * t");
  if (ambient.n > 28) throw std::invalid_argument("ambient field too large");
  SubfieldView tv = subfield_view(ambient, p.t);
  uint64_t e = ambient.group_order / ((1ull << p.t) - 1);
  std::vector<std::pair<FieldElement, FieldElement>> pre_img;
  pre_img.reserve((size_t)tv.size);
  for (FieldElement x : enumerate(tv)) {
    FieldElement y = mul(x, pow(add(x, p.a), e, ambient), ambient);
    if (!contains(tv, y))
      throw std::logic_error("image left the subfield");
    pre_img.emplace_back(x, y);
  }
  return collision_verdict(pre_img, Method::roots_of_unity);
}

MembershipAgreement membership_conditions_agree(FieldElement a, uint32_t t,
                                                const FieldSpec& field) {
  uint32_t tt = 2 * t;
  if (t < 1 || tt > field.n || field.n % tt != 0)
    throw std::invalid_argument("field must contain F_{2^(2t)}");
  if ((uint64_t)a >= field.order)
    throw std::invalid_argument("a outside field");
  if (frobenius(a, tt, field) != a)
    throw std::invalid_argument("a outside F_{2^(2t)}");
  if (a == 0) throw std::invalid_argument("a must be nonzero");

  SubfieldView tv = subfield_view(field, t);
  auto [w1, w2] = omega_pair(field);
  MembershipAgreement r;

  FieldElement m = pow(a, (1ull << t) - 1, field);
  r.root_form = (m == w1 || m == w2);

  FieldElement at = frobenius(a, t, field);  // a^(2^t)
  FieldElement poly = add(add(mul(at, at, field), mul(a, a, field)),
                          mul(at, a, field));
  r.poly_form = poly == 0;

  if (contains(tv, a)) {
    r.alpha_form = false;  // reduction degenerate: c = a + a^(2^t) = 0
  } else {
    Decomposition d = decompose(a, tv);
    FieldElement c2 = mul(d.c, d.c, field);
    FieldElement num = add(add(mul(d.b, d.b, field), mul(d.b, d.c, field)),
                           mul(c2, d.theta, field));
    r.alpha_form = num == c2;
  }

  // omega inside F_{2^t} (t even) collapses omega*F* onto F_{2^t}* itself;
  // only genuine cosets count.
  r.coset_form = false;
  if (!contains(tv, w1)) {
    for (FieldElement u : enumerate(tv)) {
      if (u == 0) continue;
      if (a == mul(w1, u, field) || a == mul(w2, u, field)) {
        r.coset_form = true;
        break;
      }
    }
  }

  r.agree = r.alpha_form == r.poly_form && r.poly_form == r.root_form &&
            r.root_form == r.coset_form;
  r.satisfied = r.root_form;
  return r;
}

}  // namespace permpoly
