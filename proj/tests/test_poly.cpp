#include <random>
#include <stdexcept>

#include "doctest.h"
#include "permpoly/field.hpp"
#include "permpoly/poly.hpp"

using namespace permpoly;

namespace {

SparsePoly random_poly(std::mt19937_64& rng, const FieldSpec& f, int terms) {
  std::vector<std::pair<uint64_t, FieldElement>> raw;
  for (int i = 0; i < terms; ++i)
    raw.push_back({rng() % (4 * f.group_order + 2),
                   (FieldElement)(rng() & (f.order - 1))});
  return canonicalize(raw, f);
}

}  // namespace

TEST_CASE("canonicalize wraps exponents by the function identity x^q = x") {
  FieldSpec f = make_field(4);  // q = 16, group 15
  CHECK(canonical_exponent(0, f) == 0);
  CHECK(canonical_exponent(1, f) == 1);
  CHECK(canonical_exponent(15, f) == 15);
  CHECK(canonical_exponent(16, f) == 1);   // x^16 = x
  CHECK(canonical_exponent(30, f) == 15);
  CHECK(canonical_exponent(31, f) == 1);
  uint64_t big = (1ull << 40) + 5;
  CHECK(canonical_exponent(big, f) == (big - 1) % 15 + 1);

  CHECK(canonicalize({{16, 1}}, f) == canonicalize({{1, 1}}, f));
  // Folding can merge and cancel terms.
  CHECK(canonicalize({{16, 1}, {1, 1}}, f).terms.empty());
  SparsePoly merged = canonicalize({{16, 0x3}, {1, 0x5}}, f);
  REQUIRE(merged.terms.size() == 1);
  CHECK(merged.terms[0] == std::pair<uint64_t, FieldElement>{1, 0x6});
  // Zero coefficients are dropped; order is ascending.
  SparsePoly p = canonicalize({{7, 0x1}, {2, 0x0}, {3, 0x9}, {1, 0x4}}, f);
  REQUIRE(p.terms.size() == 3);
  CHECK(p.terms[0].first == 1);
  CHECK(p.terms[1].first == 3);
  CHECK(p.terms[2].first == 7);
  // The constant term stays at exponent 0.
  CHECK(canonicalize({{0, 0x7}}, f).terms[0].first == 0);
}

TEST_CASE("canonical polynomials induce the same map as their raw form") {
  std::mt19937_64 rng(31);
  FieldSpec f = make_field(5);
  for (int round = 0; round < 50; ++round) {
    std::vector<std::pair<uint64_t, FieldElement>> raw;
    for (int i = 0; i < 4; ++i)
      raw.push_back({rng() % 4096, (FieldElement)(rng() & 31)});
    SparsePoly p = canonicalize(raw, f);
    for (uint64_t x = 0; x < f.order; ++x) {
      FieldElement direct = 0;
      for (auto& [e, c] : raw)
        direct = add(direct, mul(c, pow((FieldElement)x, e, f), f));
      CHECK(eval(p, (FieldElement)x, f) == direct);
    }
  }
}

TEST_CASE("poly_mul is pointwise multiplication of the induced maps") {
  std::mt19937_64 rng(37);
  FieldSpec f = make_field(6);
  for (int round = 0; round < 40; ++round) {
    SparsePoly a = random_poly(rng, f, 3);
    SparsePoly b = random_poly(rng, f, 4);
    SparsePoly ab = poly_mul(a, b, f);
    for (uint64_t x = 0; x < f.order; ++x)
      CHECK(eval(ab, (FieldElement)x, f) ==
            mul(eval(a, (FieldElement)x, f), eval(b, (FieldElement)x, f), f));
  }
  // Multiplying by the zero polynomial annihilates.
  SparsePoly z;
  CHECK(poly_mul(random_poly(rng, f, 3), z, f).terms.empty());
}

TEST_CASE("poly_pow_mod: strategies agree and match pointwise powers") {
  std::mt19937_64 rng(41);
  for (uint32_t n : {3u, 4u, 6u}) {
    FieldSpec f = make_field(n);
    for (int round = 0; round < 12; ++round) {
      SparsePoly p = random_poly(rng, f, 3);
      const uint64_t ks[] = {1, 2, 3, 7, f.group_order, f.group_order + 2};
      for (uint64_t k : ks) {
        SparsePoly sq = poly_pow_mod(p, k, f, PowStrategy::square_multiply);
        SparsePoly inc = poly_pow_mod(p, k, f, PowStrategy::incremental);
        CHECK(sq == inc);
        for (uint64_t x = 0; x < f.order; ++x)
          CHECK(eval(sq, (FieldElement)x, f) ==
                pow(eval(p, (FieldElement)x, f), k, f));
      }
    }
  }
  FieldSpec f13 = make_field(13);  // q = 8192 > 4096: dense guard trips
  CHECK_THROWS_AS(poly_pow_mod(canonicalize({{1, 1}}, f13), 3, f13),
                  std::invalid_argument);
}

TEST_CASE("coeff_top reads the x^(q-1) coefficient") {
  FieldSpec f = make_field(4);
  CHECK(coeff_top(canonicalize({{15, 0x9}, {3, 0x2}}, f), f) == 0x9);
  CHECK(coeff_top(canonicalize({{3, 0x2}}, f), f) == 0);
  // x^30 folds onto x^15.
  CHECK(coeff_top(canonicalize({{30, 0x5}}, f), f) == 0x5);
}

TEST_CASE("dense conversions round-trip and dense ops match sparse ops") {
  std::mt19937_64 rng(43);
  FieldSpec f = make_field(5);
  for (int round = 0; round < 30; ++round) {
    SparsePoly p = random_poly(rng, f, 4);
    DensePoly d = to_dense(p, f);
    REQUIRE(d.c.size() == f.order);
    CHECK(to_sparse(d, f) == p);

    SparsePoly q = random_poly(rng, f, 3);
    DensePoly out;
    dense_mul_sparse(out, d, q, f);
    CHECK(to_sparse(out, f) == poly_mul(p, q, f));

    DensePoly sq;
    dense_square(sq, d, f);
    CHECK(to_sparse(sq, f) == poly_mul(p, p, f));
  }
}
