#include <algorithm>
#include <random>
#include <stdexcept>
#include <set>

#include "doctest.h"
#include "permpoly/field.hpp"

using namespace permpoly;

TEST_CASE("smallest irreducible per degree matches an independent scan") {
  // Independent: walk candidates in encoding order, first one is_irreducible
  // accepts must equal what make_field picked.
  for (uint32_t n = 1; n <= 12; ++n) {
    uint64_t low = 1ull << n, high = 1ull << (n + 1), found = 0;
    for (uint64_t cand = low; cand < high; ++cand) {
      if (is_irreducible(cand, n)) {
        found = cand;
        break;
      }
    }
    REQUIRE(found != 0);
    CHECK(make_field(n).modulus == found);
  }
  // Pinned well-known values.
  CHECK(make_field(1).modulus == 0x2);
  CHECK(make_field(2).modulus == 0x7);
  CHECK(make_field(3).modulus == 0xb);
  CHECK(make_field(4).modulus == 0x13);
  CHECK(make_field(6).modulus == 0x43);
  CHECK(make_field(8).modulus == 0x11b);
}

TEST_CASE("is_irreducible agrees with trial division over GF(2)[x]") {
  // a mod b in GF(2)[x]; b != 0.
  auto polymod = [](uint64_t a, uint64_t b) {
    int db = 63 - __builtin_clzll(b);
    while (a != 0) {
      int da = 63 - __builtin_clzll(a);
      if (da < db) break;
      a ^= b << (da - db);
    }
    return a;
  };
  // Degree-n polynomial is reducible iff some factor of degree <= n/2
  // divides it.
  for (uint32_t n = 2; n <= 10; ++n) {
    for (uint64_t cand = 1ull << n; cand < (1ull << (n + 1)); ++cand) {
      bool has_factor = false;
      for (uint64_t f1 = 2; f1 < (1ull << (n / 2 + 1)); ++f1) {
        if (polymod(cand, f1) == 0) {
          has_factor = true;
          break;
        }
      }
      CAPTURE(cand);
      CHECK(is_irreducible(cand, n) == !has_factor);
    }
  }
}

TEST_CASE("pinned generators: F_16 has gamma = x, the 0x11b field needs 3") {
  FieldSpec f16 = make_field(4);
  CHECK(f16.gamma == 0x2);
  CHECK(multiplicative_order(0x2, f16) == 15);

  FieldSpec f256 = make_field(8);  // modulus 0x11b; x has order 51 there
  CHECK(f256.gamma == 0x3);
  CHECK(multiplicative_order(0x2, f256) == 51);
  CHECK(multiplicative_order(0x3, f256) == 255);
  CHECK(find_primitive(f256) == 0x3);
}

TEST_CASE("make_field with an explicit modulus validates irreducibility") {
  // Pick the second-smallest irreducible octic by scan; the field built on
  // it must be self-consistent even though it is not the default.
  uint64_t second = 0;
  for (uint64_t cand = 0x11c; cand < 0x200; ++cand) {
    if (is_irreducible(cand, 8)) {
      second = cand;
      break;
    }
  }
  REQUIRE(second != 0);
  FieldSpec f = make_field(8, second);
  CHECK(f.modulus == second);
  CHECK(f.modulus != make_field(8).modulus);
  CHECK(multiplicative_order(f.gamma, f) == 255);
  CHECK_THROWS_AS(make_field(8, 0x101), std::invalid_argument);  // (x+1)^8
  CHECK_THROWS_AS(make_field(8, 0x13), std::invalid_argument);   // degree 4
  CHECK_THROWS_AS(make_field(33), std::invalid_argument);
  CHECK_THROWS_AS(make_field(0), std::invalid_argument);
}

TEST_CASE("group structure: inverse, pow, order, frobenius") {
  std::mt19937_64 rng(23);
  for (uint32_t n : {1u, 3u, 8u, 11u, 16u, 29u, 32u}) {
    FieldSpec f = make_field(n);
    uint64_t mask = f.order - 1;
    for (int i = 0; i < 200; ++i) {
      FieldElement a = (FieldElement)(rng() & mask);
      if (a == 0) continue;
      CHECK(mul(a, inv(a, f), f) == 1);
      CHECK(pow(a, f.group_order, f) == 1);
      CHECK(pow(a, f.group_order + 1, f) == a);
      CHECK(frobenius(a, n, f) == a);  // full Frobenius orbit closes
      CHECK(frobenius(a, 1, f) == mul(a, a, f));
      uint64_t ord = multiplicative_order(a, f);
      CHECK(f.group_order % ord == 0);
      CHECK(pow(a, ord, f) == 1);
    }
    CHECK(pow(0, 0, f) == 1);  // empty-product convention
    CHECK(pow(0, 5, f) == 0);
    CHECK_THROWS_AS(inv(0, f), std::domain_error);
    CHECK(multiplicative_order(f.gamma, f) == f.group_order);
  }
}

TEST_CASE("group_factors lists exactly the distinct primes of 2^n - 1") {
  for (uint32_t n : {4u, 6u, 11u, 20u, 24u, 29u}) {
    FieldSpec f = make_field(n);
    uint64_t prod_check = f.group_order;
    for (uint64_t p : f.group_factors) {
      CHECK(prod_check % p == 0);
      // p prime: no divisor up to sqrt.
      bool prime = p >= 2;
      for (uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) prime = false;
      CHECK(prime);
      while (prod_check % p == 0) prod_check /= p;
    }
    CHECK(prod_check == 1);  // factor list is complete
    std::set<uint64_t> uniq(f.group_factors.begin(), f.group_factors.end());
    CHECK(uniq.size() == f.group_factors.size());
  }
}

TEST_CASE("subfield view: beta, membership, enumeration") {
  FieldSpec f = make_field(6);
  SubfieldView v = subfield_view(f, 3);
  CHECK(v.beta == pow(f.gamma, 9, f));  // (2^6-1)/(2^3-1) = 9
  CHECK(v.size == 8);
  std::vector<FieldElement> xs = enumerate(v);
  REQUIRE(xs.size() == 8);
  CHECK(xs[0] == 0);
  CHECK(xs[1] == 1);
  std::set<FieldElement> uniq(xs.begin(), xs.end());
  CHECK(uniq.size() == 8);
  for (FieldElement x : xs) {
    CHECK(contains(v, x));
    CHECK(frobenius(x, 3, f) == x);
    // closed under multiplication and addition
    for (FieldElement y : xs) {
      CHECK(uniq.count(mul(x, y, f)) == 1);
      CHECK(uniq.count(add(x, y)) == 1);
    }
  }
  // Exactly 8 members in the whole field.
  uint64_t members = 0;
  for (uint64_t x = 0; x < f.order; ++x) members += contains(v, x);
  CHECK(members == 8);

  CHECK_THROWS_AS(subfield_view(f, 4), std::invalid_argument);  // 4 !| 6
  SubfieldView whole = subfield_view(f, 6);
  CHECK(whole.beta == f.gamma);
  CHECK(enumerate(whole).size() == 64);
}

TEST_CASE("omega pair: the primitive cube roots of unity") {
  for (uint32_t n : {2u, 4u, 6u, 8u, 10u}) {
    FieldSpec f = make_field(n);
    auto [w1, w2] = omega_pair(f);
    CHECK(w1 < w2);
    for (FieldElement w : {w1, w2}) {
      CHECK(multiplicative_order(w, f) == 3);
      CHECK(add(add(mul(w, w, f), w), 1) == 0);  // w^2 + w + 1 = 0
    }
    CHECK(mul(w1, w1, f) == w2);
    CHECK(mul(w2, w2, f) == w1);
  }
  FieldSpec f4 = make_field(2);
  auto [w1, w2] = omega_pair(f4);
  CHECK(w1 == 0x2);
  CHECK(w2 == 0x3);
  CHECK_THROWS_AS(omega_pair(make_field(3)), std::invalid_argument);
}

TEST_CASE("decompose splits F_64 over its cubic subfield") {
  FieldSpec f = make_field(6);
  SubfieldView tv = subfield_view(f, 3);
  auto [zeta, theta] = quadratic_splitter(f, tv);
  CHECK(add(zeta, frobenius(zeta, 3, f)) == 1);  // zeta + zeta^(2^t) = 1
  CHECK(theta == add(mul(zeta, zeta, f), zeta));
  CHECK(contains(tv, theta));
  CHECK(theta != 0);
  CHECK(!contains(tv, zeta));

  int outside = 0;
  for (uint64_t a = 0; a < f.order; ++a) {
    if (contains(tv, a)) {
      CHECK_THROWS_AS(decompose((FieldElement)a, tv), std::domain_error);
      continue;
    }
    outside++;
    Decomposition d = decompose((FieldElement)a, tv);
    CHECK(d.zeta == zeta);
    CHECK(d.theta == theta);
    CHECK(contains(tv, d.b));
    CHECK(contains(tv, d.c));
    CHECK(d.c != 0);
    CHECK(add(d.b, mul(d.c, d.zeta, f)) == a);
    CHECK(d.c == add(a, frobenius((FieldElement)a, 3, f)));
  }
  CHECK(outside == 56);
}

TEST_CASE("embedding is a field homomorphism onto the subfield copy") {
  FieldSpec small = make_field(3);
  FieldSpec big = make_field(12);
  Embedding e = make_embedding(small, big);
  SubfieldView v = subfield_view(big, 3);
  CHECK(embed(e, 0) == 0);
  CHECK(embed(e, 1) == 1);
  std::set<FieldElement> image;
  for (FieldElement a = 0; a < 8; ++a) {
    FieldElement ea = embed(e, a);
    image.insert(ea);
    CHECK(contains(v, ea));
    for (FieldElement b = 0; b < 8; ++b) {
      CHECK(embed(e, add(a, b)) == add(ea, embed(e, b)));
      CHECK(embed(e, mul(a, b, small)) == mul(ea, embed(e, b), big));
    }
  }
  CHECK(image.size() == 8);  // injective

  // Identity embedding when the specs coincide.
  Embedding id = make_embedding(small, small);
  for (FieldElement a = 0; a < 8; ++a) CHECK(embed(id, a) == a);

  CHECK_THROWS_AS(make_embedding(make_field(5), big), std::invalid_argument);
}
