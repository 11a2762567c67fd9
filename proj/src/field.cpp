#include "permpoly/field.hpp"

#include <bit>
#include <stdexcept>

namespace permpoly {

namespace {

// --- GF(2)[x] arithmetic on bit-packed polynomials (degree <= 32) ---

inline int pol_degree(uint64_t p) {
  return p ? 63 - std::countl_zero(p) : -1;
}

inline uint64_t pol_mod(uint64_t a, uint64_t m) {
  const int dm = pol_degree(m);
  for (int d = pol_degree(a); d >= dm; d = pol_degree(a))
    a ^= m << (d - dm);
  return a;
}

uint64_t pol_gcd(uint64_t a, uint64_t b) {
  while (b) {
    a = pol_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

// Interleaves zeros between the bits of x: squaring in GF(2)[x].
inline uint64_t spread_bits(uint32_t x) {
  uint64_t r = x;
  r = (r | (r << 16)) & 0x0000ffff0000ffffull;
  r = (r | (r << 8)) & 0x00ff00ff00ff00ffull;
  r = (r | (r << 4)) & 0x0f0f0f0f0f0f0f0full;
  r = (r | (r << 2)) & 0x3333333333333333ull;
  r = (r | (r << 1)) & 0x5555555555555555ull;
  return r;
}

// x^(2^k) mod m for a modulus of degree >= 2: k modular squarings of x.
uint64_t pol_x_pow_pow2(uint32_t k, uint64_t m) {
  uint64_t r = pol_mod(0b10, m);
  for (uint32_t i = 0; i < k; ++i)
    r = pol_mod(spread_bits((uint32_t)r), m);
  return r;
}

std::vector<uint32_t> prime_divisors(uint32_t n) {
  std::vector<uint32_t> ps;
  for (uint32_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::vector<uint64_t> prime_factors_u64(uint64_t v) {
  std::vector<uint64_t> ps;
  for (uint64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      ps.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) ps.push_back(v);
  return ps;
}

}  // namespace

bool is_irreducible(uint64_t poly, uint32_t degree) {
  if (degree == 0 || pol_degree(poly) != (int)degree) return false;
  if (degree == 1) return true;  // x and x+1
  if ((poly & 1) == 0) return false;  // divisible by x
  // Rabin: x^(2^n) == x mod poly, and x^(2^(n/p)) - x coprime to poly for
  // every prime p | n.
  if (pol_x_pow_pow2(degree, poly) != 0b10) return false;
  for (uint32_t p : prime_divisors(degree)) {
    uint64_t h = pol_x_pow_pow2(degree / p, poly) ^ 0b10;
    if (pol_gcd(h, poly) != 1) return false;
  }
  return true;
}

uint64_t find_irreducible(uint32_t n) {
  if (n < 1 || n > 32)
    throw std::invalid_argument("extension degree must be in 1..32");
  if (n == 1) return 0b10;  // x
  for (uint64_t c = (1ull << n) | 1;; c += 2)
    if (is_irreducible(c, n)) return c;
}

FieldElement pow(FieldElement x, uint64_t e, const FieldSpec& f) {
  FieldElement r = 1, base = x;
  while (e) {
    if (e & 1) r = mul(r, base, f);
    base = mul(base, base, f);
    e >>= 1;
  }
  return r;
}

FieldElement inv(FieldElement x, const FieldSpec& f) {
  if (x == 0) throw std::domain_error("inverse of zero");
  return pow(x, f.group_order - 1, f);  // x^(2^n - 2)
}

uint64_t multiplicative_order(FieldElement x, const FieldSpec& f) {
  if (x == 0) throw std::domain_error("order of zero");
  uint64_t o = f.group_order;
  for (uint64_t p : f.group_factors)
    while (o % p == 0 && pow(x, o / p, f) == 1) o /= p;
  return o;
}

FieldElement find_primitive(const FieldSpec& f) {
  for (FieldElement x = 1;; ++x)
    if (multiplicative_order(x, f) == f.group_order) return x;
}

FieldElement frobenius(FieldElement x, uint32_t k, const FieldSpec& f) {
  for (uint32_t i = 0; i < k; ++i) x = mul(x, x, f);
  return x;
}

FieldSpec make_field(uint32_t n, uint64_t modulus) {
  if (!is_irreducible(modulus, n))
    throw std::invalid_argument("modulus is not irreducible of degree n");
  FieldSpec f;
  f.n = n;
  f.modulus = modulus;
  f.order = 1ull << n;
  f.group_order = f.order - 1;
  f.group_factors = prime_factors_u64(f.group_order);
  f.ctx = kernels::make_ctx(n, modulus);
  f.gamma = find_primitive(f);
  return f;
}

FieldSpec make_field(uint32_t n) { return make_field(n, find_irreducible(n)); }

SubfieldView subfield_view(const FieldSpec& f, uint32_t m) {
  if (m == 0 || f.n % m != 0)
    throw std::invalid_argument("subfield degree must divide n");
  SubfieldView v;
  v.parent = &f;
  v.m = m;
  v.size = 1ull << m;
  v.beta = pow(f.gamma, f.group_order / (v.size - 1), f);
  return v;
}

bool contains(const SubfieldView& v, FieldElement x) {
  return pow(x, v.size, *v.parent) == x;
}

std::vector<FieldElement> enumerate(const SubfieldView& v) {
  std::vector<FieldElement> out;
  out.reserve(v.size);
  out.push_back(0);
  FieldElement x = 1;
  for (uint64_t k = 0; k + 1 < v.size; ++k) {
    out.push_back(x);
    x = mul(x, v.beta, *v.parent);
  }
  return out;
}

std::pair<FieldElement, FieldElement> omega_pair(const FieldSpec& f) {
  if (f.n % 2 != 0)
    throw std::invalid_argument("omega lives in F_4: need n even");
  FieldElement w = pow(f.gamma, f.group_order / 3, f);
  FieldElement w2 = mul(w, w, f);
  if (add(add(w2, w), 1) != 0)
    throw std::logic_error("gamma^((2^n-1)/3) is not a cube root of unity");
  return w < w2 ? std::make_pair(w, w2) : std::make_pair(w2, w);
}

std::pair<FieldElement, FieldElement> quadratic_splitter(
    const FieldSpec& f, const SubfieldView& tview) {
  const uint32_t t = tview.m;
  if (f.n % (2 * t) != 0)
    throw std::invalid_argument("parent field has no F_{2^(2t)} subfield");
  // Smallest-encoding eta in F_{2^(2t)} with eta^(2^t) != eta.
  FieldElement eta = 0;
  if (f.n == 2 * t) {
    for (FieldElement x = 0;; ++x) {
      if (frobenius(x, t, f) != x) {
        eta = x;
        break;
      }
    }
  } else {
    SubfieldView v2t = subfield_view(f, 2 * t);
    bool found = false;
    FieldElement x = 1;
    for (uint64_t k = 0; k + 1 < v2t.size; ++k) {
      if (frobenius(x, t, f) != x && (!found || x < eta)) {
        eta = x;
        found = true;
      }
      x = mul(x, v2t.beta, f);
    }
  }
  FieldElement trace = add(eta, frobenius(eta, t, f));  // in F_{2^t}, nonzero
  FieldElement zeta = mul(eta, inv(trace, f), f);
  FieldElement theta = add(mul(zeta, zeta, f), zeta);
  return {zeta, theta};
}

Decomposition decompose(FieldElement a, const SubfieldView& tview) {
  const FieldSpec& f = *tview.parent;
  const uint32_t t = tview.m;
  if (f.n % (2 * t) != 0)
    throw std::invalid_argument("parent field has no F_{2^(2t)} subfield");
  if (pow(a, 1ull << (2 * t), f) != a)
    throw std::invalid_argument("element outside F_{2^(2t)}");
  if (contains(tview, a))
    throw std::domain_error("element lies in F_{2^t}: decomposition degenerates");
  auto [zeta, theta] = quadratic_splitter(f, tview);
  FieldElement c = add(a, frobenius(a, t, f));
  FieldElement b = add(a, mul(c, zeta, f));
  return {b, c, zeta, theta};
}

Embedding make_embedding(const FieldSpec& small, const FieldSpec& big) {
  if (big.n % small.n != 0)
    throw std::invalid_argument("small field degree must divide big degree");
  Embedding e;
  e.from = &small;
  e.to = &big;
  e.basis_image.resize(small.n);
  if (small == big) {
    for (uint32_t i = 0; i < small.n; ++i) e.basis_image[i] = 1u << i;
    return e;
  }
  // Smallest-encoding root of small.modulus in the big field. Candidates are
  // the F_{2^m} subfield elements; when m = n (same degree, different
  // modulus) that is the whole field, so cap the scan.
  auto eval_modulus = [&](FieldElement z) {
    FieldElement r = 0;
    for (int i = (int)small.n; i >= 0; --i) {
      r = mul(r, z, big);
      if ((small.modulus >> i) & 1) r = add(r, 1);
    }
    return r;
  };
  FieldElement root = 0;
  bool found = false;
  if (small.n == big.n) {
    if (big.n > 20)
      throw std::invalid_argument(
          "same-degree embedding with distinct moduli needs a full-field "
          "root scan: supported for n <= 20 only");
    for (uint64_t z = 0; z < big.order; ++z) {
      if (eval_modulus((FieldElement)z) == 0) {
        root = (FieldElement)z;
        found = true;
        break;
      }
    }
  } else {
    SubfieldView v = subfield_view(big, small.n);
    FieldElement x = 1;
    for (uint64_t k = 0; k + 1 < v.size; ++k) {
      if (eval_modulus(x) == 0 && (!found || x < root)) {
        root = x;
        found = true;
      }
      x = mul(x, v.beta, big);
    }
  }
  if (!found) throw std::logic_error("modulus has no root in the big field");
  FieldElement zi = 1;
  for (uint32_t i = 0; i < small.n; ++i) {
    e.basis_image[i] = zi;
    zi = mul(zi, root, big);
  }
  return e;
}

FieldElement embed(const Embedding& e, FieldElement a) {
  if ((uint64_t)a >= e.from->order)
    throw std::invalid_argument("element outside the source field");
  FieldElement r = 0;
  for (uint32_t i = 0; a != 0; a >>= 1, ++i)
    if (a & 1) r = add(r, e.basis_image[i]);
  return r;
}

}  // namespace permpoly
