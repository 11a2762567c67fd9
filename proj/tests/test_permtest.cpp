#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "permpoly/field.hpp"
#include "permpoly/permtest.hpp"

using namespace permpoly;

namespace {

SparsePoly parse3(uint64_t e1, uint64_t e2, uint64_t e3, const FieldSpec& f) {
  return canonicalize({{e1, 1}, {e2, 1}, {e3, 1}}, f);
}

}  // namespace

TEST_CASE("brute tester: monomials over F_16") {
  FieldSpec f = make_field(4);
  // x and x^2 permute (2 is a unit mod 15); x^3 does not (gcd(3,15) = 3).
  CHECK(is_pp_brute(canonicalize({{1, 1}}, f), f).is_pp);
  CHECK(is_pp_brute(canonicalize({{2, 1}}, f), f).is_pp);

  SparsePoly cube = canonicalize({{3, 1}}, f);
  PermVerdict v = is_pp_brute(cube, f);
  CHECK(!v.is_pp);
  REQUIRE(v.witness.has_value());
  auto* w = std::get_if<CollisionWitness>(&*v.witness);
  REQUIRE(w != nullptr);
  CHECK(w->x1 < w->x2);
  CHECK(pow(w->x1, 3, f) == pow(w->x2, 3, f));
  CHECK(verify_witness(cube, f, v));
  // Canonical witness: x2 is the first repeat in ascending order, x1 the
  // smallest preimage of that value.
  FieldElement first_repeat = 0;
  std::set<FieldElement> seen;
  for (uint64_t x = 0; x < f.order; ++x)
    if (!seen.insert(pow((FieldElement)x, 3, f)).second) {
      first_repeat = (FieldElement)x;
      break;
    }
  CHECK(w->x2 == first_repeat);
  for (uint64_t x = 0; x < w->x1; ++x)
    CHECK(pow((FieldElement)x, 3, f) != pow(w->x2, 3, f));
}

TEST_CASE("monomial x^k permutes iff gcd(k, q-1) = 1") {
  FieldSpec f = make_field(6);
  for (uint64_t k = 1; k <= f.group_order; ++k) {
    bool expect = std::gcd(k, (uint64_t)f.group_order) == 1;
    CHECK(is_pp_brute(canonicalize({{k, 1}}, f), f).is_pp == expect);
  }
}

TEST_CASE("brute and hermite agree on random trinomials over F_32") {
  FieldSpec f = make_field(5);
  std::mt19937_64 rng(53);
  for (int round = 0; round < 500; ++round) {
    uint64_t e1 = 1 + rng() % f.group_order;
    uint64_t e2 = 1 + rng() % f.group_order;
    uint64_t e3 = 1 + rng() % f.group_order;
    SparsePoly p = parse3(e1, e2, e3, f);
    PermVerdict b = is_pp_brute(p, f);
    PermVerdict h = is_pp_hermite(p, f);
    CHECK(b.is_pp == h.is_pp);
    if (!b.is_pp) {
      CHECK(verify_witness(p, f, b));
      CHECK(verify_witness(p, f, h));
    }
  }
}

TEST_CASE("hermite witnesses: root count and top-coefficient exponent") {
  FieldSpec f = make_field(4);
  // x^2 + x has roots {0, 1}: root-count witness fires.
  SparsePoly two_roots = canonicalize({{2, 1}, {1, 1}}, f);
  PermVerdict v = is_pp_hermite(two_roots, f);
  CHECK(!v.is_pp);
  REQUIRE(v.witness.has_value());
  auto* rw = std::get_if<RootCountWitness>(&*v.witness);
  REQUIRE(rw != nullptr);
  CHECK(rw->roots == 2);
  CHECK(verify_witness(two_roots, f, v));

  // x^3 has one root but fails the coefficient condition at some k.
  SparsePoly cube = canonicalize({{3, 1}}, f);
  PermVerdict hv = is_pp_hermite(cube, f);
  CHECK(!hv.is_pp);
  REQUIRE(hv.witness.has_value());
  auto* hw = std::get_if<HermiteExponentWitness>(&*hv.witness);
  REQUIRE(hw != nullptr);
  CHECK(hw->k >= 1);
  CHECK(hw->k <= f.order - 2);
  CHECK(coeff_top(poly_pow_mod(cube, hw->k, f), f) == hw->coeff);
  CHECK(hw->coeff != 0);
  CHECK(verify_witness(cube, f, hv));
}

TEST_CASE("wan_lidl matches brute for x * f(x^9) over F_64, all binomial f") {
  FieldSpec f = make_field(6);  // q - 1 = 63 = 7 * 9
  SubfieldView sub = subfield_view(f, 3);
  DupTable scratch;
  for (uint64_t a = 1; a < f.order; ++a) {
    WanLidlInstance inst;
    inst.r = 1;
    inst.d = 7;
    inst.f_inner = canonicalize({{1, 1}, {0, (FieldElement)a}}, f);
    PermVerdict wl = wan_lidl(inst, f, &scratch);
    SparsePoly g = wan_lidl_poly(inst, f);
    PermVerdict b = is_pp_brute(g, f);
    CHECK(wl.is_pp == b.is_pp);
    if (!wl.is_pp) {
      CHECK(verify_witness(inst, f, wl));
      REQUIRE(wl.witness.has_value());
      auto* w = std::get_if<WanLidlWitness>(&*wl.witness);
      REQUIRE(w != nullptr);
      // f(x) = x + a has a root among the 7th roots of unity exactly when a
      // is a nonzero cube, i.e. a in F_8*.
      if (contains(sub, (FieldElement)a)) CHECK(w->condition == 'b');
    }
    CHECK(roots_of_unity_check(inst, f) == wl.is_pp);  // r = 1: (a) is free
  }
}

TEST_CASE("wan_lidl condition 'a' fires when gcd(r, (q-1)/d) > 1") {
  FieldSpec f = make_field(6);
  WanLidlInstance inst;
  inst.r = 3;  // gcd(3, 9) = 3
  inst.d = 7;
  inst.f_inner = canonicalize({{0, 1}}, f);
  PermVerdict v = wan_lidl(inst, f);
  CHECK(!v.is_pp);
  REQUIRE(v.witness.has_value());
  auto* w = std::get_if<WanLidlWitness>(&*v.witness);
  REQUIRE(w != nullptr);
  CHECK(w->condition == 'a');
  CHECK(w->i == 3);
  CHECK(verify_witness(inst, f, v));
}

TEST_CASE("tampered witnesses are rejected") {
  FieldSpec f = make_field(4);
  SparsePoly cube = canonicalize({{3, 1}}, f);
  PermVerdict v = is_pp_brute(cube, f);
  REQUIRE(v.witness.has_value());
  PermVerdict bad = v;
  auto& cw = std::get<CollisionWitness>(*bad.witness);
  // Move x1 off the collision fiber (0 maps to 0, never to cw.x2's image).
  cw.x1 = 0;
  REQUIRE(pow(cw.x2, 3, f) != 0);
  CHECK(!verify_witness(cube, f, bad));

  PermVerdict fake_root;
  fake_root.is_pp = false;
  fake_root.method = Method::hermite;
  fake_root.witness = RootCountWitness{1};  // one root disproves nothing
  CHECK(!verify_witness(canonicalize({{1, 1}}, f), f, fake_root));

  WanLidlInstance inst;
  inst.r = 1;
  inst.d = 5;
  inst.f_inner = canonicalize({{0, 1}}, f);  // f = 1: no roots anywhere
  PermVerdict fake_b;
  fake_b.is_pp = false;
  fake_b.method = Method::wanlidl;
  fake_b.witness = WanLidlWitness{'b', 2, 0};
  CHECK(!verify_witness(inst, f, fake_b));
}

TEST_CASE("parallel brute scan returns the serial verdict and witness") {
  FieldSpec f = make_field(8);
  std::mt19937_64 rng(59);
  for (int round = 0; round < 60; ++round) {
    SparsePoly p = parse3(1 + rng() % 255, 1 + rng() % 255, 1 + rng() % 255, f);
    PermVerdict serial = is_pp_brute(p, f);
    PermVerdict par = is_pp_brute(p, f, BruteOptions{4});
    CHECK(serial.is_pp == par.is_pp);
    if (!serial.is_pp) {
      auto& sw = std::get<CollisionWitness>(*serial.witness);
      auto& pw = std::get<CollisionWitness>(*par.witness);
      CHECK(sw.x1 == pw.x1);
      CHECK(sw.x2 == pw.x2);
    }
  }
}

TEST_CASE("guards: brute size cap and hermite dense cap") {
  CHECK_THROWS_AS(
      [] {
        FieldSpec f = make_field(30);
        is_pp_brute(canonicalize({{1, 1}}, f), f);
      }(),
      std::invalid_argument);
  CHECK_THROWS_AS(
      [] {
        FieldSpec f = make_field(13);
        is_pp_hermite(canonicalize({{1, 1}}, f), f);
      }(),
      std::invalid_argument);
  // d must divide q - 1.
  CHECK_THROWS_AS(
      [] {
        FieldSpec f = make_field(4);
        WanLidlInstance inst;
        inst.d = 4;
        inst.f_inner = canonicalize({{0, 1}}, f);
        wan_lidl(inst, f);
      }(),
      std::invalid_argument);
}
