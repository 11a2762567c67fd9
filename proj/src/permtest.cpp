#include "permpoly/permtest.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "permpoly/duptable.hpp"
#include "permpoly/parallel.hpp"

namespace permpoly {

namespace {

constexpr uint64_t kBruteLimit = 1ull << 28;
constexpr uint64_t kHermiteLimit = 4096;
constexpr uint64_t kSortThreshold = 4096;   // below: sort, above: DupTable
constexpr uint64_t kTableLimit = 1ull << 24;  // DupTable memory guard

PermVerdict brute_parallel(const SparsePoly& p, const FieldSpec& f,
                           unsigned workers) {
  const uint64_t q = f.order;
  std::vector<uint64_t> seen((q + 63) / 64, 0);
  std::vector<std::vector<FieldElement>> cands(workers);
  run_chunked(q, workers, [&](unsigned w, uint64_t lo, uint64_t hi) {
    auto& my = cands[w];
    for (uint64_t x = lo; x < hi; ++x) {
      FieldElement v = eval(p, (FieldElement)x, f);
      std::atomic_ref<uint64_t> cell(seen[v >> 6]);
      uint64_t bit = 1ull << (v & 63);
      if (cell.fetch_or(bit, std::memory_order_relaxed) & bit)
        my.push_back(v);  // v provably has >= 2 preimages
    }
  });
  std::unordered_set<FieldElement> collided;
  for (const auto& c : cands) collided.insert(c.begin(), c.end());
  if (collided.empty()) return {true, Method::brute, std::nullopt};
  // Canonical witness pass: the first ascending x that re-hits a collided
  // value, paired with that value's first preimage. Matches the serial scan.
  std::unordered_map<FieldElement, FieldElement> first_seen;
  first_seen.reserve(collided.size());
  for (uint64_t x = 0; x < q; ++x) {
    FieldElement v = eval(p, (FieldElement)x, f);
    if (!collided.count(v)) continue;
    auto [it, fresh] = first_seen.try_emplace(v, (FieldElement)x);
    if (!fresh)
      return {false, Method::brute,
              CollisionWitness{it->second, (FieldElement)x}};
  }
  throw std::logic_error("collision candidates without a collision");
}

// First duplicated value in vals: (i, j) with j = first index whose value
// occurred before, i = that value's first index. Sort-based; used where no
// reusable table is worth it.
std::optional<std::pair<uint64_t, uint64_t>> first_duplicate_sorted(
    const std::vector<FieldElement>& vals) {
  std::vector<std::pair<FieldElement, uint64_t>> vi(vals.size());
  for (uint64_t i = 0; i < vals.size(); ++i) vi[i] = {vals[i], i};
  std::sort(vi.begin(), vi.end());
  std::optional<std::pair<uint64_t, uint64_t>> best;
  for (size_t k = 1; k < vi.size(); ++k) {
    if (vi[k].first != vi[k - 1].first) continue;
    // group start = first occurrence of this value
    size_t g = k - 1;
    while (g > 0 && vi[g - 1].first == vi[k].first) --g;
    uint64_t i = vi[g].second, j = vi[g + 1].second;
    if (!best || j < best->second) best = {{i, j}};
    while (k + 1 < vi.size() && vi[k + 1].first == vi[k].first) ++k;
  }
  return best;
}

std::optional<std::pair<uint64_t, uint64_t>> first_duplicate(
    const std::vector<FieldElement>& vals, uint64_t universe) {
  if (vals.size() <= kSortThreshold || universe > kTableLimit)
    return first_duplicate_sorted(vals);
  DupTable table;
  table.prepare(universe);
  for (uint64_t j = 0; j < vals.size(); ++j)
    if (auto i = table.feed(vals[j], j)) return {{*i, j}};
  return std::nullopt;
}

void validate_instance(const WanLidlInstance& inst, const FieldSpec& f) {
  if (inst.r < 1) throw std::invalid_argument("x-power r must be positive");
  if (inst.d < 1 || f.group_order % inst.d != 0)
    throw std::invalid_argument("d must divide q - 1");
  if (inst.d > kTableLimit)
    throw std::invalid_argument("d too large: limited to d <= 2^24");
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::brute: return "brute";
    case Method::hermite: return "hermite";
    case Method::wanlidl: return "wanlidl";
    case Method::roots_of_unity: return "roots-of-unity";
  }
  return "?";
}

PermVerdict is_pp_brute(const SparsePoly& p, const FieldSpec& f,
                        const BruteOptions& opts) {
  const uint64_t q = f.order;
  if (q > kBruteLimit)
    throw std::invalid_argument("brute-force scan limited to q <= 2^28");
  if (opts.workers > 1) return brute_parallel(p, f, opts.workers);
  std::vector<uint64_t> seen((q + 63) / 64, 0);
  for (uint64_t x = 0; x < q; ++x) {
    FieldElement v = eval(p, (FieldElement)x, f);
    uint64_t bit = 1ull << (v & 63);
    if (seen[v >> 6] & bit) {
      FieldElement x1 = 0;
      while (eval(p, x1, f) != v) ++x1;
      return {false, Method::brute, CollisionWitness{x1, (FieldElement)x}};
    }
    seen[v >> 6] |= bit;
  }
  // q evaluations, q-slot table, no repeat: saturated, hence bijective.
  return {true, Method::brute, std::nullopt};
}

PermVerdict is_pp_hermite(const SparsePoly& p, const FieldSpec& f) {
  const uint64_t q = f.order;
  if (q > kHermiteLimit)
    throw std::invalid_argument("hermite criterion limited to q <= 4096");
  uint64_t roots = 0;
  for (uint64_t x = 0; x < q; ++x)
    if (eval(p, (FieldElement)x, f) == 0) ++roots;
  if (roots != 1)
    return {false, Method::hermite, RootCountWitness{roots}};
  // p^k for every 1 <= k <= q-2, including multiples of the characteristic:
  // the sharp form of the criterion needs them all in char 2.
  DensePoly g = to_dense(p, f), scratch;
  for (uint64_t k = 1; k + 1 <= q - 1; ++k) {
    if (g.c[q - 1] != 0)
      return {false, Method::hermite, HermiteExponentWitness{k, g.c[q - 1]}};
    if (k + 1 <= q - 2) {
      dense_mul_sparse(scratch, g, p, f);
      std::swap(g, scratch);
    }
  }
  return {true, Method::hermite, std::nullopt};
}

SparsePoly wan_lidl_poly(const WanLidlInstance& inst, const FieldSpec& f) {
  validate_instance(inst, f);
  const uint64_t e = f.group_order / inst.d;
  const uint64_t r = canonical_exponent(inst.r, f);
  std::vector<std::pair<uint64_t, FieldElement>> raw;
  raw.reserve(inst.f_inner.terms.size());
  for (const auto& [ei, ci] : inst.f_inner.terms)
    raw.emplace_back(r + ei * e, ci);
  return canonicalize(raw, f);
}

PermVerdict wan_lidl(const WanLidlInstance& inst, const FieldSpec& f,
                     DupTable* scratch) {
  validate_instance(inst, f);
  const uint64_t d = inst.d;
  const uint64_t e = f.group_order / d;

  // (a) x^r permutes each coset bundle iff gcd(r, (q-1)/d) = 1.
  uint64_t g0 = std::gcd(inst.r, e);
  if (g0 != 1)
    return {false, Method::wanlidl, WanLidlWitness{'a', g0, 0}};

  // (b) f must not vanish on the d-th roots of unity.
  const FieldElement beta = pow(f.gamma, e, f);
  FieldElement u = 1;
  for (uint64_t i = 0; i < d; ++i) {
    if (eval(inst.f_inner, u, f) == 0)
      return {false, Method::wanlidl, WanLidlWitness{'b', i, 0}};
    u = mul(u, beta, f);
  }

  // (c) the d values g(gamma^i)^((q-1)/d) must be pairwise distinct.
  FieldElement gi = 1;
  u = 1;
  if (scratch != nullptr || (d > kSortThreshold && f.order <= kTableLimit)) {
    DupTable local;
    DupTable& table = scratch ? *scratch : local;
    table.prepare(f.order);
    for (uint64_t i = 0; i < d; ++i) {
      FieldElement gv = mul(pow(gi, inst.r, f), eval(inst.f_inner, u, f), f);
      if (auto prev = table.feed(pow(gv, e, f), i))
        return {false, Method::wanlidl, WanLidlWitness{'c', *prev, i}};
      gi = mul(gi, f.gamma, f);
      u = mul(u, beta, f);
    }
  } else {
    std::vector<FieldElement> vals(d);
    for (uint64_t i = 0; i < d; ++i) {
      FieldElement gv = mul(pow(gi, inst.r, f), eval(inst.f_inner, u, f), f);
      vals[i] = pow(gv, e, f);
      gi = mul(gi, f.gamma, f);
      u = mul(u, beta, f);
    }
    if (auto dup = first_duplicate_sorted(vals))
      return {false, Method::wanlidl, WanLidlWitness{'c', dup->first, dup->second}};
  }
  return {true, Method::wanlidl, std::nullopt};
}

bool roots_of_unity_check(const WanLidlInstance& inst, const FieldSpec& f) {
  validate_instance(inst, f);
  const uint64_t d = inst.d;
  const uint64_t e = f.group_order / d;
  const FieldElement beta = pow(f.gamma, e, f);
  std::vector<FieldElement> vals(d);
  FieldElement u = 1;
  for (uint64_t i = 0; i < d; ++i) {
    FieldElement w =
        mul(pow(u, inst.r, f), pow(eval(inst.f_inner, u, f), e, f), f);
    if (pow(w, d, f) != 1) return false;  // left the d-th roots of unity
    vals[i] = w;
    u = mul(u, beta, f);
  }
  return !first_duplicate(vals, f.order).has_value();
}

bool verify_witness(const SparsePoly& p, const FieldSpec& f,
                    const PermVerdict& v) {
  if (v.is_pp || !v.witness) return false;
  if (const auto* w = std::get_if<CollisionWitness>(&*v.witness))
    return w->x1 != w->x2 && (uint64_t)w->x1 < f.order &&
           (uint64_t)w->x2 < f.order &&
           eval(p, w->x1, f) == eval(p, w->x2, f);
  if (const auto* w = std::get_if<RootCountWitness>(&*v.witness)) {
    uint64_t roots = 0;
    for (uint64_t x = 0; x < f.order; ++x)
      if (eval(p, (FieldElement)x, f) == 0) ++roots;
    return roots == w->roots && roots != 1;
  }
  if (const auto* w = std::get_if<HermiteExponentWitness>(&*v.witness)) {
    if (w->k < 1 || w->k > f.order - 2 || w->coeff == 0) return false;
    // Recompute via square-and-multiply: independent of the incremental
    // chain that produced the witness.
    SparsePoly pk = poly_pow_mod(p, w->k, f, PowStrategy::square_multiply);
    return coeff_top(pk, f) == w->coeff;
  }
  return false;
}

bool verify_witness(const WanLidlInstance& inst, const FieldSpec& f,
                    const PermVerdict& v) {
  if (v.is_pp || !v.witness) return false;
  const auto* w = std::get_if<WanLidlWitness>(&*v.witness);
  if (!w) return false;
  const uint64_t e = f.group_order / inst.d;
  const FieldElement beta = pow(f.gamma, e, f);
  switch (w->condition) {
    case 'a':
      return std::gcd(inst.r, e) == w->i && w->i != 1;
    case 'b':
      return w->i < inst.d &&
             eval(inst.f_inner, pow(beta, w->i, f), f) == 0;
    case 'c': {
      if (w->i >= w->j || w->j >= inst.d) return false;
      auto img = [&](uint64_t i) {
        FieldElement gi = pow(f.gamma, i, f);
        FieldElement gv =
            mul(pow(gi, inst.r, f), eval(inst.f_inner, pow(beta, i, f), f), f);
        return pow(gv, e, f);
      };
      return img(w->i) == img(w->j);
    }
    default:
      return false;
  }
}

}  // namespace permpoly
