#include <random>
#include <stdexcept>
#include <set>

#include "doctest.h"
#include "permpoly/field.hpp"
#include "permpoly/lucas.hpp"
#include "permpoly/poly.hpp"

using namespace permpoly;

namespace {

// Pascal-style DP oracle: C(n, r) mod p by full additive recurrence.
std::vector<std::vector<uint32_t>> pascal_mod(uint64_t n_max, uint32_t p) {
  std::vector<std::vector<uint32_t>> c(n_max + 1);
  for (uint64_t n = 0; n <= n_max; ++n) {
    c[n].assign(n + 1, 1);
    for (uint64_t r = 1; r < n; ++r) c[n][r] = (c[n - 1][r - 1] + c[n - 1][r]) % p;
  }
  return c;
}

uint32_t multinomial_dp(const std::vector<std::vector<uint32_t>>& c, uint64_t k,
                        const std::vector<uint64_t>& parts, uint32_t p) {
  // (k; a,b,c,...) = C(k,a) * C(k-a,b) * ...
  uint64_t acc = 1, rem = k;
  for (uint64_t part : parts) {
    acc = acc * c[rem][part] % p;
    rem -= part;
  }
  return (uint32_t)acc;
}

SparsePoly base_trinomial(uint32_t s, FieldElement alpha, const FieldSpec& f) {
  return canonicalize({{(1ull << s) + 1, 1},
                       {(1ull << (s - 1)) + 1, 1},
                       {1, alpha}},
                      f);
}

}  // namespace

TEST_CASE("multinomial_mod_p matches the Pascal DP for k <= 64") {
  std::mt19937_64 rng(61);
  for (uint32_t p : {2u, 3u, 5u, 7u}) {
    auto c = pascal_mod(64, p);
    // Exhaustive 3-part split.
    for (uint64_t k = 0; k <= 64; ++k)
      for (uint64_t u = 0; u <= k; ++u)
        for (uint64_t v = 0; v + u <= k; ++v) {
          std::vector<uint64_t> parts{u, v, k - u - v};
          CHECK(multinomial_mod_p(k, parts, p) == multinomial_dp(c, k, parts, p));
        }
    // Random 4- and 5-part splits.
    for (int round = 0; round < 2000; ++round) {
      uint64_t k = rng() % 65;
      size_t nparts = 4 + rng() % 2;
      std::vector<uint64_t> parts;
      uint64_t rem = k;
      for (size_t i = 0; i + 1 < nparts; ++i) {
        uint64_t part = rem ? rng() % (rem + 1) : 0;
        parts.push_back(part);
        rem -= part;
      }
      parts.push_back(rem);
      CHECK(multinomial_mod_p(k, parts, p) == multinomial_dp(c, k, parts, p));
    }
  }
}

TEST_CASE("binomial special case matches Pascal directly") {
  auto c = pascal_mod(200, 3);
  for (uint64_t n = 0; n <= 200; ++n)
    for (uint64_t r = 0; r <= n; ++r)
      CHECK(multinomial_mod_p(n, {r, n - r}, 3) == c[n][r]);
}

TEST_CASE("multinomial_nonzero_mod2 is the mod-2 value, and is bit-disjointness") {
  std::mt19937_64 rng(67);
  for (int round = 0; round < 5000; ++round) {
    uint64_t k = rng() % 65;
    uint64_t u = rng() % (k + 1);
    uint64_t v = (k - u) ? rng() % (k - u + 1) : 0;
    std::vector<uint64_t> parts{u, v, k - u - v};
    CHECK(multinomial_nonzero_mod2(k, parts) ==
          (multinomial_mod_p(k, parts, 2) != 0));
  }
  // Large k out of the DP's reach: composing disjoint bit patterns gives an
  // odd multinomial, overlapping ones an even one.
  uint64_t a = 0x5000000000000001ull, b = 0x0a00000000000002ull,
           c = 0x0140000000000004ull;
  CHECK(multinomial_nonzero_mod2(a + b + c, {a, b, c}));
  CHECK(!multinomial_nonzero_mod2(a + a + b, {a, a, b}));
  CHECK(multinomial_nonzero_mod2(0, {0, 0, 0}));
}

TEST_CASE("multinomial guards: part sums and primality") {
  CHECK_THROWS_AS(multinomial_mod_p(5, {1, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(multinomial_mod_p(5, {2, 3}, 4), std::invalid_argument);
  CHECK_THROWS_AS(multinomial_mod_p(5, {2, 3}, 1), std::invalid_argument);
  CHECK_THROWS_AS(multinomial_mod_p(5, {2, 3}, 97), std::invalid_argument);
  CHECK_THROWS_AS(multinomial_nonzero_mod2(5, {1, 1}), std::invalid_argument);
}

TEST_CASE("exponent_triples: invariants and brute re-enumeration") {
  for (uint32_t t : {4u, 5u, 6u}) {
    uint64_t q1 = (1ull << t) - 1;
    for (uint32_t s = 2; s < t; ++s) {
      for (uint64_t k : {q1 - 2, q1 - 3, q1}) {
        auto triples = exponent_triples(s, t, k);
        std::set<std::pair<uint64_t, uint64_t>> seen;
        for (auto& tr : triples) {
          CHECK(tr.u + tr.v + tr.w == k);
          CHECK(((1ull << s) + 1) * tr.u + ((1ull << (s - 1)) + 1) * tr.v +
                    tr.w ==
                tr.l * q1);
          CHECK(tr.l >= 1);
          CHECK(seen.insert({tr.u, tr.v}).second);  // no duplicates
        }
        // Brute re-enumeration over all (u, v).
        uint64_t count = 0;
        for (uint64_t u = 0; u <= k; ++u)
          for (uint64_t v = 0; v + u <= k; ++v) {
            uint64_t e = ((1ull << s) + 1) * u + ((1ull << (s - 1)) + 1) * v +
                         (k - u - v);
            if (e && e % q1 == 0) {
              ++count;
              CHECK(seen.count({u, v}) == 1);
            }
          }
        CHECK(count == triples.size());
      }
    }
  }
  CHECK_THROWS_AS(exponent_triples(2, 13, 5), std::invalid_argument);
  CHECK_THROWS_AS(exponent_triples(2, 5, 32), std::invalid_argument);
}

TEST_CASE("top_coeff_combinatorial equals the top coefficient of f^k") {
  for (uint32_t t : {5u, 6u}) {
    FieldSpec f = make_field(t);
    uint64_t q1 = f.group_order;
    for (uint32_t s = 3; s < t; ++s) {
      for (uint64_t alpha = 1; alpha < f.order; ++alpha) {
        SparsePoly p = base_trinomial(s, (FieldElement)alpha, f);
        // q1 - 2 = 2^t - 3 and q1 - 3 = 2^t - 4 are the cases the closed
        // forms cover; q1 exercises a plain fold.
        for (uint64_t k : {q1 - 2, q1 - 3, q1}) {
          FieldElement via_poly = coeff_top(poly_pow_mod(p, k, f), f);
          CHECK(top_coeff_combinatorial(s, t, (FieldElement)alpha, k, f) ==
                via_poly);
        }
      }
    }
  }
}

TEST_CASE("closed forms match the combinatorial synthesis for 3 <= s < t") {
  for (uint32_t t : {4u, 5u, 6u}) {
    FieldSpec f = make_field(t);
    uint64_t q1 = f.group_order;
    for (uint32_t s = 3; s < t; ++s)
      for (uint64_t alpha = 0; alpha < f.order; ++alpha) {
        CHECK(closed_form_2t3(s, t, (FieldElement)alpha, f) ==
              top_coeff_combinatorial(s, t, (FieldElement)alpha,
                                      (1ull << t) - 3, f));
        CHECK(closed_form_2t4(s, t, (FieldElement)alpha, f) ==
              top_coeff_combinatorial(s, t, (FieldElement)alpha,
                                      (1ull << t) - 4, f));
      }
  }
}
