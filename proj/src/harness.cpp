#include "permpoly/harness.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstring>
#include <numeric>
#include <random>
#include <stdexcept>

#include "permpoly/classify.hpp"
#include "permpoly/duptable.hpp"
#include "permpoly/io.hpp"
#include "permpoly/kernels.hpp"
#include "permpoly/lucas.hpp"
#include "permpoly/parallel.hpp"
#include "permpoly/permtest.hpp"
#include "permpoly/poly.hpp"

namespace permpoly {

using json = nlohmann::ordered_json;

const char* oracle_name(Oracle o) {
  switch (o) {
    case Oracle::brute: return "brute";
    case Oracle::wanlidl: return "wanlidl";
    case Oracle::reduction: return "reduction";
  }
  return "?";
}

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  uint64_t ms() const {
    return (uint64_t)std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

const char* emission_name(CaseEmission e) {
  switch (e) {
    case CaseEmission::automatic: return "automatic";
    case CaseEmission::all: return "all";
    case CaseEmission::disagreements: return "disagreements";
    case CaseEmission::none: return "none";
  }
  return "?";
}

CaseEmission decide_emission(CaseEmission requested, uint64_t planned_total) {
  if (requested != CaseEmission::automatic) return requested;
  return planned_total <= 65536 ? CaseEmission::all
                                : CaseEmission::disagreements;
}

bool keep_case(CaseEmission mode, bool agree) {
  return mode == CaseEmission::all ||
         (mode == CaseEmission::disagreements && !agree);
}

std::string csv_scalar(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Fold per-chunk partial reports back into `rep` in chunk order.
struct Partial {
  std::vector<CaseRow> cases;
  uint64_t total = 0, disagreements = 0, pp = 0;
};

void merge_partials(Report& rep, std::vector<Partial>& parts) {
  for (Partial& p : parts) {
    rep.total += p.total;
    rep.disagreements += p.disagreements;
    rep.pp_count += p.pp;
    for (CaseRow& c : p.cases) rep.cases.push_back(std::move(c));
  }
}

std::vector<FieldElement> sorted_nonzero(const SubfieldView& v) {
  std::vector<FieldElement> xs = enumerate(v);
  std::sort(xs.begin(), xs.end());
  xs.erase(xs.begin());  // drop 0
  return xs;
}

}  // namespace

json Report::to_json() const {
  json j;
  j["suite"] = suite;
  j["params"] = params;
  json arr = json::array();
  for (const CaseRow& c : cases) {
    json row;
    row["input"] = c.input;
    for (auto& [k, v] : c.result.items()) row[k] = v;
    row["agree"] = c.agree;
    arr.push_back(std::move(row));
  }
  j["cases"] = std::move(arr);
  j["summary"] = {{"total", total},
                  {"disagreements", disagreements},
                  {"pp_count", pp_count},
                  {"elapsed_ms", elapsed_ms}};
  return j;
}

std::string Report::to_csv() const {
  std::string out = "# suite=" + suite + " params=" + params.dump() + "\n";
  if (!cases.empty()) {
    const CaseRow& head = cases.front();
    std::vector<std::string> in_keys, res_keys;
    for (auto& [k, v] : head.input.items()) in_keys.push_back(k);
    for (auto& [k, v] : head.result.items()) res_keys.push_back(k);
    for (const std::string& k : in_keys) out += k + ",";
    for (const std::string& k : res_keys) out += k + ",";
    out += "agree\n";
    for (const CaseRow& c : cases) {
      for (const std::string& k : in_keys)
        out += csv_scalar(c.input.contains(k) ? c.input.at(k) : json()) + ",";
      for (const std::string& k : res_keys)
        out += csv_scalar(c.result.contains(k) ? c.result.at(k) : json()) + ",";
      out += c.agree ? "true\n" : "false\n";
    }
  }
  out += "# total=" + std::to_string(total) +
         " disagreements=" + std::to_string(disagreements) +
         " pp_count=" + std::to_string(pp_count) +
         " elapsed_ms=" + std::to_string(elapsed_ms) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// binomial enumeration

Report enumerate_binomials(uint32_t s, uint32_t t, Oracle oracle,
                           const RunOptions& opts) {
  Timer timer;
  if (s < 1 || s > 40 || t < 1)
    throw std::invalid_argument("bad (s, t)");
  uint64_t n_true = (uint64_t)t << s;  // degree of the field g acts on
  uint32_t ambient_n = 0;
  switch (oracle) {
    case Oracle::brute:
      if (n_true > 28)
        throw std::invalid_argument("brute oracle needs 2^s*t <= 28");
      ambient_n = (uint32_t)n_true;
      break;
    case Oracle::wanlidl:
      if (n_true > 32)
        throw std::invalid_argument("wan-lidl oracle needs 2^s*t <= 32");
      ambient_n = (uint32_t)n_true;
      break;
    case Oracle::reduction:
      if (2 * t > 32)
        throw std::invalid_argument("reduction oracle needs 2t <= 32");
      ambient_n = 2 * t;
      break;
  }

  FieldSpec field = make_field(ambient_n);
  SubfieldView tv = subfield_view(field, t);
  std::vector<FieldElement> as = sorted_nonzero(subfield_view(field, 2 * t));
  uint64_t d = (1ull << t) - 1;

  Report rep;
  rep.suite = "binomial-enumeration";
  CaseEmission emission = decide_emission(opts.emission, as.size());
  rep.params = {{"s", s},
                {"t", t},
                {"oracle", oracle_name(oracle)},
                {"n", n_true},
                {"field_n", field.n},
                {"modulus", hex_str(field.modulus)},
                {"cases_emitted", emission_name(emission)}};

  unsigned workers = resolve_workers(opts.workers);
  std::vector<Partial> parts(workers);
  run_chunked(as.size(), workers, [&](unsigned ci, uint64_t lo, uint64_t hi) {
    Partial& part = parts[ci];
    DupTable scratch;
    for (uint64_t i = lo; i < hi; ++i) {
      FieldElement a = as[i];
      bool cls =
          classify_binomial({s, t, a}, field, Mode::canonical).is_pp;
      bool orc = false;
      switch (oracle) {
        case Oracle::brute: {
          WanLidlInstance inst{1, d, canonicalize({{1, 1}, {0, a}}, field)};
          orc = is_pp_brute(wan_lidl_poly(inst, field), field).is_pp;
          break;
        }
        case Oracle::wanlidl: {
          WanLidlInstance inst{1, d, canonicalize({{1, 1}, {0, a}}, field)};
          orc = wan_lidl(inst, field, &scratch).is_pp;
          break;
        }
        case Oracle::reduction: {
          if (contains(tv, a)) {
            orc = false;  // c = 0: the cyclotomic condition (b) fails
          } else {
            ReducedTrinomial red = reduce_binomial({s, t, a}, field);
            orc = trinomial_pp_on_subfield(red.tri, field).is_pp;
          }
          break;
        }
      }
      bool agree = cls == orc;
      part.total++;
      if (!agree) part.disagreements++;
      if (orc) part.pp++;
      if (keep_case(emission, agree))
        part.cases.push_back({json{{"s", s}, {"t", t}, {"a", hex_str(a)}},
                              json{{"classifier", cls}, {"oracle", orc}},
                              agree});
    }
  });
  merge_partials(rep, parts);
  rep.elapsed_ms = timer.ms();
  return rep;
}

// ---------------------------------------------------------------------------
// trinomial classifier grid

Report verify_trith(uint32_t s_max, uint32_t t_max, const RunOptions& opts) {
  Timer timer;
  if (s_max < 1 || s_max > 12 || t_max < 1 || t_max > 11)
    throw std::invalid_argument("grid guard: s_max <= 12, t_max <= 11");

  std::vector<FieldSpec> fields(t_max + 1);
  for (uint32_t t = 1; t <= t_max; ++t) fields[t] = make_field(t);

  struct Cell {
    uint32_t s, t;
    FieldElement alpha;
  };
  std::vector<Cell> grid;
  for (uint32_t t = 1; t <= t_max; ++t)
    for (uint32_t s = 1; s <= s_max; ++s)
      for (FieldElement alpha = 0; alpha < (1u << t); ++alpha)
        grid.push_back({s, t, alpha});

  Report rep;
  rep.suite = "trinomial-grid";
  CaseEmission emission = decide_emission(opts.emission, grid.size());
  rep.params = {{"s_max", s_max},
                {"t_max", t_max},
                {"cases_emitted", emission_name(emission)}};

  unsigned workers = resolve_workers(opts.workers);
  std::vector<Partial> parts(workers);
  run_chunked(grid.size(), workers, [&](unsigned ci, uint64_t lo,
                                        uint64_t hi) {
    Partial& part = parts[ci];
    for (uint64_t i = lo; i < hi; ++i) {
      const Cell& c = grid[i];
      const FieldSpec& f = fields[c.t];
      bool cls = classify_trinomial({c.s, c.t, c.alpha}, Mode::canonical).is_pp;
      bool orc = is_pp_brute(trinomial_poly({c.s, c.t, c.alpha}, f), f).is_pp;
      bool agree = cls == orc;
      part.total++;
      if (!agree) part.disagreements++;
      if (orc) part.pp++;
      if (keep_case(emission, agree))
        part.cases.push_back(
            {json{{"s", c.s}, {"t", c.t}, {"alpha", hex_str(c.alpha)}},
             json{{"classifier", cls}, {"oracle", orc}}, agree});
    }
  });
  merge_partials(rep, parts);
  rep.elapsed_ms = timer.ms();
  return rep;
}

// ---------------------------------------------------------------------------
// literal-vs-canonical audit

namespace {

struct TruthCache {
  std::vector<FieldSpec> by_n = std::vector<FieldSpec>(33);
  const FieldSpec& get(uint32_t n) {
    if (by_n[n].n != n) by_n[n] = make_field(n);
    return by_n[n];
  }
};

}  // namespace

Report audit_literal(uint32_t s_max, uint32_t t_max, const RunOptions& opts) {
  Timer timer;
  if (s_max < 1 || s_max > 12 || t_max < 1 || t_max > 11)
    throw std::invalid_argument("grid guard: s_max <= 12, t_max <= 11");

  Report rep;
  rep.suite = "literal-audit";
  rep.params = {{"s_max", s_max}, {"t_max", t_max}, {"cases_emitted", "all"}};
  TruthCache fields;

  auto push = [&](json input, json result, bool agree) {
    rep.disagreements += !agree;
    if (opts.emission != CaseEmission::none &&
        (opts.emission != CaseEmission::disagreements || !agree))
      rep.cases.push_back({std::move(input), std::move(result), agree});
  };

  // Trinomial side: truth is always computable over F_{2^t}.
  for (uint32_t t = 1; t <= t_max; ++t) {
    const FieldSpec& ft = fields.get(t);
    for (uint32_t s = 1; s <= s_max; ++s) {
      for (FieldElement alpha = 0; alpha < (1u << t); ++alpha) {
        rep.total++;
        ClassifierDecision lit =
            classify_trinomial({s, t, alpha}, Mode::literal);
        ClassifierDecision can =
            classify_trinomial({s, t, alpha}, Mode::canonical);
        if (lit.is_pp == can.is_pp) continue;
        bool truth =
            is_pp_brute(trinomial_poly({s, t, alpha}, ft), ft).is_pp;
        if (truth) rep.pp_count++;
        push(json{{"kind", "trinomial"},
                  {"s", s},
                  {"t", t},
                  {"value", hex_str(alpha)},
                  {"field_n", t},
                  {"modulus", hex_str(ft.modulus)}},
             json{{"literal", lit.is_pp},
                  {"canonical", can.is_pp},
                  {"literal_fail", fail_tag_name(lit.failed)},
                  {"canonical_fail", fail_tag_name(can.failed)},
                  {"truth", truth},
                  {"truth_method", "brute"}},
             truth == can.is_pp);
      }
    }
  }

  // Binomial side. Classification needs only F_{2^(2t)}; when the real field
  // F_{2^n} is representable (n <= 32) the whole row is computed inside it so
  // the attached truth needs no cross-field transport.
  for (uint32_t t = 1; t <= t_max; ++t) {
    uint64_t d = (1ull << t) - 1;
    for (uint32_t s = 1; s <= s_max; ++s) {
      uint64_t n_true = (uint64_t)t << s;
      const FieldSpec& field =
          n_true <= 32 ? fields.get((uint32_t)n_true) : fields.get(2 * t);
      std::vector<FieldElement> as =
          sorted_nonzero(subfield_view(field, 2 * t));
      for (FieldElement a : as) {
        rep.total++;
        ClassifierDecision lit =
            classify_binomial({s, t, a}, field, Mode::literal);
        ClassifierDecision can =
            classify_binomial({s, t, a}, field, Mode::canonical);
        if (lit.is_pp == can.is_pp) continue;
        json truth = nullptr, method = nullptr;
        bool agree = true;
        WanLidlInstance inst{1, d, canonicalize({{1, 1}, {0, a}}, field)};
        if (n_true <= 28) {
          bool tr = is_pp_brute(wan_lidl_poly(inst, field), field).is_pp;
          truth = tr;
          method = "brute";
          agree = tr == can.is_pp;
          if (tr) rep.pp_count++;
        } else if (n_true <= 32) {
          bool tr = wan_lidl(inst, field).is_pp;
          truth = tr;
          method = "wanlidl";
          agree = tr == can.is_pp;
          if (tr) rep.pp_count++;
        } else if (can.is_pp) {
          rep.pp_count++;
        }
        push(json{{"kind", "binomial"},
                  {"s", s},
                  {"t", t},
                  {"value", hex_str(a)},
                  {"field_n", field.n},
                  {"modulus", hex_str(field.modulus)}},
             json{{"literal", lit.is_pp},
                  {"canonical", can.is_pp},
                  {"literal_fail", fail_tag_name(lit.failed)},
                  {"canonical_fail", fail_tag_name(can.failed)},
                  {"truth", truth},
                  {"truth_method", method}},
             agree);
      }
    }
  }

  rep.elapsed_ms = timer.ms();
  return rep;
}

// ---------------------------------------------------------------------------
// suite: fieldaxioms

namespace {

Report run_fieldaxioms(const RunOptions& opts) {
  Timer timer;
  const std::vector<uint32_t> ns = {1,  2,  3,  4,  5,  6,  7, 8,
                                    10, 12, 16, 20, 24, 29, 32};
  uint64_t trials = opts.profile == "extended" ? 20000 : 2000;

  Report rep;
  rep.suite = "fieldaxioms";
  rep.params = {{"fields", ns},
                {"trials_per_field", trials},
                {"cases_emitted", "all"}};

  for (uint32_t n : ns) {
    FieldSpec f = make_field(n);
    std::mt19937_64 rng(0xf1e1d5eedULL ^ n);
    uint64_t mask = f.order - 1;
    auto draw = [&]() { return (FieldElement)(rng() & mask); };
    uint64_t violations = 0;
    for (uint64_t i = 0; i < trials; ++i) {
      FieldElement a = draw(), b = draw(), c = draw();
      violations += mul(mul(a, b, f), c, f) != mul(a, mul(b, c, f), f);
      violations += mul(a, b, f) != mul(b, a, f);
      violations += mul(a, add(b, c), f) != add(mul(a, b, f), mul(a, c, f));
      violations += mul(a, 1, f) != a;
      FieldElement ab = add(a, b);
      violations += mul(ab, ab, f) != add(mul(a, a, f), mul(b, b, f));
      violations +=
          pow(a, 5, f) != mul(mul(mul(mul(a, a, f), a, f), a, f), a, f);
      if (a != 0) {
        violations += mul(a, inv(a, f), f) != 1;
        violations += pow(a, f.group_order, f) != 1;
      }
    }
    bool gamma_ok = multiplicative_order(f.gamma, f) == f.group_order;
    bool agree = violations == 0 && gamma_ok;
    rep.total += trials;
    rep.disagreements += !agree;
    if (keep_case(decide_emission(opts.emission, ns.size()), agree))
      rep.cases.push_back({json{{"n", n}, {"modulus", hex_str(f.modulus)}},
                           json{{"trials", trials},
                                {"violations", violations},
                                {"generator_order_ok", gamma_ok}},
                           agree});
  }
  rep.elapsed_ms = timer.ms();
  return rep;
}

// ---------------------------------------------------------------------------
// suite: permtesters

Report run_permtesters(const RunOptions& opts) {
  Timer timer;
  Report rep;
  rep.suite = "permtesters";
  rep.params = {{"fields", {8, 16, 32, 64, 128, 256}},
                {"random_per_field", 1000},
                {"cases_emitted", "all"}};
  CaseEmission emission = decide_emission(opts.emission, 18);

  auto push = [&](json input, json result, bool agree) {
    rep.disagreements += !agree;
    if (keep_case(emission, agree))
      rep.cases.push_back({std::move(input), std::move(result), agree});
  };

  for (uint32_t n = 3; n <= 8; ++n) {
    uint64_t q = 1ull << n;
    FieldSpec f = make_field(n);

    // Random trinomials: exhaustive scan vs Hermite's criterion, and every
    // negative verdict's witness replayed independently.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ q);
    uint64_t mism = 0, ppf = 0, wit_fail = 0;
    for (int rounds = 0; rounds < 1000; ++rounds) {
      uint64_t e[3];
      for (int k = 0; k < 3; ++k) {
        uint64_t v;
        bool dup;
        do {
          v = 1 + rng() % (q - 1);
          dup = (k > 0 && v == e[0]) || (k > 1 && v == e[1]);
        } while (dup);
        e[k] = v;
      }
      FieldElement cf[3];
      for (int k = 0; k < 3; ++k) cf[k] = (FieldElement)(1 + rng() % (q - 1));
      SparsePoly p = canonicalize(
          {{e[0], cf[0]}, {e[1], cf[1]}, {e[2], cf[2]}}, f);
      PermVerdict vb = is_pp_brute(p, f);
      PermVerdict vh = is_pp_hermite(p, f);
      mism += vb.is_pp != vh.is_pp;
      ppf += vb.is_pp;
      if (!vb.is_pp && !verify_witness(p, f, vb)) wit_fail++;
      if (!vh.is_pp && !verify_witness(p, f, vh)) wit_fail++;
    }
    rep.total += 1000;
    rep.pp_count += ppf;
    push(json{{"kind", "random-trinomials"}, {"q", q}},
         json{{"checked", 1000},
              {"mismatches", mism},
              {"pp_found", ppf},
              {"witness_failures", wit_fail}},
         mism == 0 && wit_fail == 0);

    // The studied trinomial shape for every (s, alpha) over this field.
    uint64_t fam_mism = 0, fam_pp = 0, fam_checked = 0, fam_wit = 0;
    for (uint32_t s = 1; s <= n; ++s) {
      for (FieldElement alpha = 0; alpha < (1u << n); ++alpha) {
        SparsePoly p = trinomial_poly({s, n, alpha}, f);
        PermVerdict vb = is_pp_brute(p, f);
        PermVerdict vh = is_pp_hermite(p, f);
        fam_checked++;
        fam_mism += vb.is_pp != vh.is_pp;
        fam_pp += vb.is_pp;
        if (!vb.is_pp && !verify_witness(p, f, vb)) fam_wit++;
        if (!vh.is_pp && !verify_witness(p, f, vh)) fam_wit++;
      }
    }
    rep.total += fam_checked;
    rep.pp_count += fam_pp;
    push(json{{"kind", "family-trinomials"}, {"q", q}},
         json{{"checked", fam_checked},
              {"mismatches", fam_mism},
              {"pp_found", fam_pp},
              {"witness_failures", fam_wit}},
         fam_mism == 0 && fam_wit == 0);

    // Monomials: x^e permutes iff gcd(e, q-1) = 1.
    uint64_t mono_mism = 0, mono_pp = 0;
    for (uint64_t e1 = 1; e1 < q; ++e1) {
      bool pp = is_pp_brute(canonicalize({{e1, 1}}, f), f).is_pp;
      bool law = std::gcd(e1, q - 1) == 1;
      mono_mism += pp != law;
      mono_pp += pp;
    }
    rep.total += q - 1;
    rep.pp_count += mono_pp;
    push(json{{"kind", "monomials"}, {"q", q}},
         json{{"checked", q - 1},
              {"mismatches", mono_mism},
              {"pp_found", mono_pp},
              {"witness_failures", 0}},
         mono_mism == 0);
  }
  rep.elapsed_ms = timer.ms();
  return rep;
}

// ---------------------------------------------------------------------------
// suite: lucas

Report run_lucas(const RunOptions& opts) {
  Timer timer;
  const uint32_t K = 512;
  Report rep;
  rep.suite = "lucas";
  rep.params = {{"max_k", K}, {"primes", {2, 3, 5}}, {"cases_emitted", "all"}};
  CaseEmission emission = decide_emission(opts.emission, 5);

  auto push = [&](json input, json result, bool agree) {
    rep.disagreements += !agree;
    if (keep_case(emission, agree))
      rep.cases.push_back({std::move(input), std::move(result), agree});
  };

  for (uint32_t p : {2u, 3u, 5u}) {
    // Row-by-row Pascal triangle mod p as the independent reference.
    std::vector<std::vector<uint32_t>> C(K + 1);
    for (uint32_t k = 0; k <= K; ++k) {
      C[k].assign(k + 1, 1);
      for (uint32_t j = 1; j < k; ++j)
        C[k][j] = (C[k - 1][j - 1] + C[k - 1][j]) % p;
    }
    uint64_t mism = 0, checked = 0;
    std::vector<uint64_t> parts(3);
    for (uint32_t k = 0; k <= K; ++k) {
      for (uint32_t u = 0; u <= k; ++u) {
        uint32_t rem = k - u;
        for (uint32_t v = 0; v <= rem; ++v) {
          uint32_t want = C[k][u] * C[rem][v] % p;
          parts[0] = u;
          parts[1] = v;
          parts[2] = rem - v;
          uint32_t got = multinomial_mod_p(k, parts, p);
          mism += got != want;
          if (p == 2)
            mism += multinomial_nonzero_mod2(k, parts) != (want != 0);
          checked++;
        }
      }
    }
    rep.total += checked;
    push(json{{"kind", "dp-grid"}, {"p", p}, {"k", K}, {"parts", ""}},
         json{{"checked", checked}, {"mismatches", mism}}, mism == 0);
  }

  // Pinned nonvanishing witnesses for the two coefficient identities.
  auto pinned = [&](uint64_t k, std::vector<uint64_t> parts,
                    const std::string& label) {
    bool nz = multinomial_nonzero_mod2(k, parts);
    bool m2 = multinomial_mod_p(k, parts, 2) == 1;
    bool ok = nz && m2;
    rep.total++;
    push(json{{"kind", "pinned-vector"}, {"p", 2}, {"k", k}, {"parts", label}},
         json{{"checked", 1}, {"mismatches", ok ? 0 : 1}}, ok);
  };
  pinned(509, {16, 224, 269}, "16+224+269");
  pinned(2044, {32, 704, 1308}, "32+704+1308");

  rep.elapsed_ms = timer.ms();
  return rep;
}

// ---------------------------------------------------------------------------
// suite: coeffs

FieldElement frob_interval_sum(FieldElement alpha, uint32_t lo, uint32_t hi,
                               const FieldSpec& f) {
  FieldElement acc = 0;
  for (uint32_t i = lo; i <= hi; ++i)
    acc = add(acc, pow(alpha, 1ull << i, f));
  return acc;
}

Report run_coeffs(const RunOptions& opts) {
  Timer timer;
  uint32_t t_max = opts.max_t ? opts.max_t
                              : (opts.profile == "extended" ? 9u : 8u);
  if (t_max < 4 || t_max > 10)
    throw std::invalid_argument("coeffs suite guard: 4 <= t_max <= 10");

  uint64_t planned = 0;
  for (uint32_t t = 4; t <= t_max; ++t) planned += (uint64_t)(t - 3) << t;

  Report rep;
  rep.suite = "coefficient-forms";
  CaseEmission emission = decide_emission(opts.emission, planned);
  rep.params = {{"t_max", t_max},
                {"s_range", "3..t-1"},
                {"cases_emitted", emission_name(emission)}};

  for (uint32_t t = 4; t <= t_max; ++t) {
    FieldSpec f = make_field(t);
    uint64_t k3 = (1ull << t) - 3, k4 = (1ull << t) - 4;
    for (uint32_t s = 3; s < t; ++s) {
      for (FieldElement alpha = 0; alpha < (1u << t); ++alpha) {
        SparsePoly p = trinomial_poly({s, t, alpha}, f);
        FieldElement c3 = closed_form_2t3(s, t, alpha, f);
        FieldElement m3 = top_coeff_combinatorial(s, t, alpha, k3, f);
        FieldElement p3 = coeff_top(poly_pow_mod(p, k3, f), f);
        FieldElement c4 = closed_form_2t4(s, t, alpha, f);
        FieldElement m4 = top_coeff_combinatorial(s, t, alpha, k4, f);
        FieldElement p4 = coeff_top(poly_pow_mod(p, k4, f), f);
        bool simp_app = frob_interval_sum(alpha, 2, t - s + 1, f) == 1;
        bool simp_ok = true;
        if (simp_app) {
          uint64_t e1 = (1ull << t) - (1ull << (t - s + 2)) +
                        (1ull << (t - s + 1)) - 4;
          FieldElement sv = pow(alpha, e1, f);
          simp_ok = sv == c4 && sv != 0;
        }
        bool agree =
            c3 == m3 && m3 == p3 && c4 == m4 && m4 == p4 && simp_ok;
        rep.total++;
        rep.disagreements += !agree;
        if (keep_case(emission, agree))
          rep.cases.push_back(
              {json{{"s", s}, {"t", t}, {"alpha", hex_str(alpha)}},
               json{{"closed_2t3", hex_str(c3)},
                    {"combinatorial_2t3", hex_str(m3)},
                    {"poly_2t3", hex_str(p3)},
                    {"closed_2t4", hex_str(c4)},
                    {"combinatorial_2t4", hex_str(m4)},
                    {"poly_2t4", hex_str(p4)},
                    {"simplified",
                     simp_app ? (simp_ok ? "ok" : "mismatch") : "n/a"}},
               agree});
      }
    }
  }
  rep.elapsed_ms = timer.ms();
  return rep;
}

// ---------------------------------------------------------------------------
// suite: reduction (three independent verdicts for every binomial instance)

// Per-(s, t) read-only tables. g(x) = x^(L+1) + a x factors through the
// class decomposition x = gamma^(j + d m): g(gamma^(j+dm)) = u_j gamma^(dm)
// with u_j = gamma^j (beta^j + a), so each input class lands in one coset of
// the order-L subgroup H = <gamma^d>.
struct PairTables {
  FieldSpec field;
  SubfieldView tv;
  uint64_t q = 0, d = 0, L = 0;
  std::vector<FieldElement> H;   // H[m] = gamma^(d m)
  std::vector<FieldElement> G;   // G[j] = gamma^j
  std::vector<FieldElement> B;   // B[j] = beta^j
  std::vector<FieldElement> U;   // U[j] = (gamma beta)^j
  std::vector<uint32_t> Cm;      // Cm[v] = dlog_beta(v^L), sentinel at v = 0
  FieldElement zeta = 0, theta = 0;
  std::vector<FieldElement> xs;   // the degree-t subfield, enumeration order
  std::vector<FieldElement> u12;  // xs^(2^s+1) + xs^(2^(s-1)+1)
};

PairTables build_pair_tables(uint32_t s, uint32_t t, uint32_t n) {
  PairTables T;
  T.field = make_field(n);
  const FieldSpec& f = T.field;
  T.tv = subfield_view(f, t);
  T.q = f.order;
  T.d = (1ull << t) - 1;
  T.L = f.group_order / T.d;

  FieldElement gd = pow(f.gamma, T.d, f);
  FieldElement beta = T.tv.beta;
  T.H.resize(T.L);
  T.H[0] = 1;
  for (uint64_t m = 1; m < T.L; ++m) T.H[m] = mul(T.H[m - 1], gd, f);
  T.G.resize(T.d);
  T.B.resize(T.d);
  T.U.resize(T.d);
  T.G[0] = T.B[0] = T.U[0] = 1;
  FieldElement gb = mul(f.gamma, beta, f);
  for (uint64_t j = 1; j < T.d; ++j) {
    T.G[j] = mul(T.G[j - 1], f.gamma, f);
    T.B[j] = mul(T.B[j - 1], beta, f);
    T.U[j] = mul(T.U[j - 1], gb, f);
  }

  // Cm via one batched power map v -> v^L over the whole field.
  std::vector<uint32_t> tid(T.q, 0xffffffffu);
  for (uint64_t j = 0; j < T.d; ++j) tid[T.B[j]] = (uint32_t)j;
  std::vector<FieldElement> acc(T.q, 1u), base(T.q);
  for (uint64_t v = 0; v < T.q; ++v) base[v] = (FieldElement)v;
  for (int b = 63 - __builtin_clzll(T.L); b >= 0; --b) {
    kernels::square_batch(acc.data(), acc.data(), T.q, f.ctx);
    if ((T.L >> b) & 1)
      kernels::mul_batch(acc.data(), acc.data(), base.data(), T.q, f.ctx);
  }
  T.Cm.resize(T.q);
  T.Cm[0] = 0xffffffffu;
  for (uint64_t v = 1; v < T.q; ++v) {
    uint32_t id = tid[acc[v]];
    if (id == 0xffffffffu)
      throw std::logic_error("power map left the root-of-unity subgroup");
    T.Cm[v] = id;
  }

  auto st = quadratic_splitter(f, T.tv);
  T.zeta = st.first;
  T.theta = st.second;
  T.xs = enumerate(T.tv);
  uint64_t e1 = (1ull << s) + 1, e2 = (1ull << (s - 1)) + 1;
  T.u12.resize(T.xs.size());
  for (size_t m = 0; m < T.xs.size(); ++m)
    T.u12[m] = add(pow(T.xs[m], e1, f), pow(T.xs[m], e2, f));
  return T;
}

// Epoch-tagged presence table: one byte per field element, cleared only
// every 255 epochs. Blind stores beat a bitset's read-modify-write in the
// coset-stamping loop.
struct WorkerScratch {
  std::vector<uint8_t> stamp;
  uint32_t epoch = 0;
  std::vector<uint64_t> wl_seen;
  std::array<FieldElement, 512> buf;

  void reset_field(uint64_t q, uint64_t d) {
    stamp.assign(q, 0);
    epoch = 0;
    wl_seen.assign((d + 63) / 64, 0);
  }
  uint8_t next_epoch() {
    if (++epoch == 256) {
      std::fill(stamp.begin(), stamp.end(), 0);
      epoch = 1;
    }
    return (uint8_t)epoch;
  }
};

Report run_reduction(const RunOptions& opts) {
  Timer timer;
  uint32_t n_max =
      opts.max_n ? opts.max_n : (opts.profile == "extended" ? 24u : 20u);
  if (n_max < 4 || n_max > 24)
    throw std::invalid_argument("reduction suite guard: 4 <= n_max <= 24");

  struct PairSpec {
    uint32_t s, t, n;
  };
  std::vector<PairSpec> pairs;
  uint64_t planned = 0;
  for (uint32_t t = 1; 2 * t <= n_max; ++t) {
    if (opts.max_t && t > opts.max_t) continue;
    for (uint32_t s = 1;; ++s) {
      uint64_t n = (uint64_t)t << s;
      if (n > n_max) break;
      pairs.push_back({s, t, (uint32_t)n});
      planned += (1ull << (2 * t)) - 1;
    }
  }

  Report rep;
  rep.suite = "binomial-reduction";
  CaseEmission emission = decide_emission(opts.emission, planned);
  json pair_summaries = json::array();
  rep.params = {{"profile", opts.profile},
                {"n_max", n_max},
                {"cases_emitted", emission_name(emission)}};

  unsigned workers = resolve_workers(opts.workers);
  std::vector<WorkerScratch> scratch(workers);

  for (const PairSpec& ps : pairs) {
    Timer pair_timer;
    PairTables T = build_pair_tables(ps.s, ps.t, ps.n);
    const FieldSpec& f = T.field;
    const uint64_t d = T.d, L = T.L;
    std::vector<FieldElement> as = sorted_nonzero(subfield_view(f, 2 * ps.t));
    uint64_t sample_stride = std::max<uint64_t>(1, as.size() / 64);
    bool brute_op_all = f.n <= 10;

    for (unsigned w = 0; w < workers; ++w) scratch[w].reset_field(T.q, d);
    std::vector<Partial> parts(workers);

    run_chunked(as.size(), workers, [&](unsigned ci, uint64_t lo,
                                        uint64_t hi) {
      WorkerScratch& ws = scratch[ci];
      Partial& part = parts[ci];
      DupTable dup_scratch;
      for (uint64_t idx = lo; idx < hi; ++idx) {
        FieldElement a = as[idx];
        bool subf = contains(T.tv, a);
        bool cls =
            classify_binomial({ps.s, ps.t, a}, f, Mode::canonical).is_pp;

        // Exhaustive scan of g: every input class is materialized in full;
        // only the class's first output needs a membership probe because
        // distinct cosets of H are disjoint.
        uint8_t ep = ws.next_epoch();
        ws.stamp[0] = ep;  // g(0) = 0
        bool brute_pp = true;
        for (uint64_t j = 0; j < d; ++j) {
          FieldElement u = add(T.U[j], mul(T.G[j], a, f));
          if (ws.stamp[u] == ep) {
            brute_pp = false;
            break;
          }
          ws.stamp[u] = ep;
          uint64_t m = 1;
          while (m < L) {
            uint64_t cnt = std::min<uint64_t>(512, L - m);
            kernels::mul_const_batch(ws.buf.data(), T.H.data() + m, cnt, u,
                                     f.ctx);
            for (uint64_t i = 0; i < cnt; ++i) ws.stamp[ws.buf[i]] = ep;
            m += cnt;
          }
        }

        // Cyclotomic test: zero scan for condition (b); power classes
        // beta^j (beta^j + a)^L pairwise distinct for condition (c). After
        // a (c) duplicate the scan keeps looking for zeros only, so the
        // recorded (b) outcome matches a full scan.
        bool b_fail = false, c_fail = false;
        std::fill(ws.wl_seen.begin(), ws.wl_seen.end(), 0);
        for (uint64_t j = 0; j < d; ++j) {
          FieldElement v = add(T.B[j], a);
          if (v == 0) {
            b_fail = true;
            break;
          }
          if (!c_fail) {
            uint32_t id = T.Cm[v] + (uint32_t)j;
            if (id >= d) id -= (uint32_t)d;
            uint64_t word = id >> 6, bit = 1ull << (id & 63);
            if (ws.wl_seen[word] & bit) c_fail = true;
            else ws.wl_seen[word] |= bit;
          }
        }
        bool wl_pp = !b_fail && !c_fail;

        // Reduced trinomial over the degree-t subfield (defined only off
        // the subfield, where c = a + a^(2^t) is nonzero).
        bool tri_pp = false;
        bool chain_ok;
        if (!subf) {
          FieldElement c = add(a, frobenius(a, ps.t, f));
          FieldElement b = add(a, mul(c, T.zeta, f));
          FieldElement c2 = mul(c, c, f);
          FieldElement num =
              add(add(mul(b, b, f), mul(b, c, f)), mul(c2, T.theta, f));
          FieldElement base = mul(num, inv(c2, f), f);
          FieldElement alpha = frobenius(base, (ps.s - 1) % ps.t, f);
          uint8_t ep2 = ws.next_epoch();
          tri_pp = true;
          for (size_t m = 0; m < T.xs.size(); ++m) {
            FieldElement y = add(T.u12[m], mul(alpha, T.xs[m], f));
            if (ws.stamp[y] == ep2) {
              tri_pp = false;
              break;
            }
            ws.stamp[y] = ep2;
          }
          chain_ok = brute_pp == wl_pp && wl_pp == tri_pp;
          if (idx % sample_stride == 0) {
            // Replay through the public entry points.
            ReducedTrinomial red = reduce_binomial({ps.s, ps.t, a}, f);
            if (red.tri.alpha != alpha) chain_ok = false;
            if (trinomial_pp_on_subfield(red.tri, f).is_pp != tri_pp)
              chain_ok = false;
            WanLidlInstance inst{1, d, canonicalize({{1, 1}, {0, a}}, f)};
            if (wan_lidl(inst, f, &dup_scratch).is_pp != wl_pp)
              chain_ok = false;
          }
        } else {
          chain_ok = !brute_pp && !wl_pp && b_fail;
        }

        bool ok = chain_ok && b_fail == subf && cls == brute_pp;
        if (idx % sample_stride == 0 &&
            subfield_map_verdict({ps.s, ps.t, a}, f).is_pp != brute_pp)
          ok = false;
        if (brute_op_all) {
          WanLidlInstance inst{1, d, canonicalize({{1, 1}, {0, a}}, f)};
          ok = ok &&
               is_pp_brute(wan_lidl_poly(inst, f), f).is_pp == brute_pp;
        }

        part.total++;
        if (brute_pp) part.pp++;
        if (!ok) part.disagreements++;
        if (keep_case(emission, ok))
          part.cases.push_back(
              {json{{"s", ps.s}, {"t", ps.t}, {"a", hex_str(a)}},
               json{{"brute", brute_pp},
                    {"wanlidl", wl_pp},
                    {"reduced", subf ? json() : json(tri_pp)},
                    {"b_fail", b_fail},
                    {"classifier", cls},
                    {"note", ""}},
               ok});
      }
    });

    uint64_t pair_pp = 0;
    for (const Partial& p : parts) pair_pp += p.pp;
    merge_partials(rep, parts);

    // Family count: membership positives exist only for odd t with the
    // exponent residue in range, and then number exactly 2 (2^t - 1).
    bool fam = (ps.t % 2 == 1) &&
               (ps.t == 1 || ps.s % ps.t == 1 || ps.s % ps.t == 2);
    uint64_t expected_pp = fam ? 2 * ((1ull << ps.t) - 1) : 0;
    if (pair_pp != expected_pp) {
      rep.total++;
      rep.disagreements++;
      if (emission != CaseEmission::none)
        rep.cases.push_back(
            {json{{"s", ps.s}, {"t", ps.t}, {"a", nullptr}},
             json{{"brute", nullptr},
                  {"wanlidl", nullptr},
                  {"reduced", nullptr},
                  {"b_fail", nullptr},
                  {"classifier", nullptr},
                  {"note", "pp-count-mismatch: got " +
                               std::to_string(pair_pp) + " expected " +
                               std::to_string(expected_pp)}},
             false});
    }
    pair_summaries.push_back({{"s", ps.s},
                              {"t", ps.t},
                              {"n", ps.n},
                              {"cases", as.size()},
                              {"pp", pair_pp},
                              {"expected_pp", expected_pp},
                              {"elapsed_ms", pair_timer.ms()}});
  }

  rep.params["pairs"] = std::move(pair_summaries);
  rep.elapsed_ms = timer.ms();
  return rep;
}

}  // namespace

Report verify_suite(const std::string& name, const RunOptions& opts) {
  if (name == "fieldaxioms") return run_fieldaxioms(opts);
  if (name == "permtesters") return run_permtesters(opts);
  if (name == "lucas") return run_lucas(opts);
  if (name == "coeffs") return run_coeffs(opts);
  if (name == "reduction") return run_reduction(opts);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace permpoly
