// Command-line front end: single-instance checks, enumeration and audit
// reports, and the named verification suites. JSON is the canonical output
// format; CSV is a flat per-case projection of the same report.
//
// Exit codes: 0 all checks passed, 1 a property violation / disagreement was
// found (the report is still written), 2 usage or guard error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "permpoly/classify.hpp"
#include "permpoly/field.hpp"
#include "permpoly/harness.hpp"
#include "permpoly/io.hpp"
#include "permpoly/kernels.hpp"
#include "permpoly/parallel.hpp"
#include "permpoly/permtest.hpp"
#include "permpoly/poly.hpp"

using json = nlohmann::ordered_json;
using namespace permpoly;

namespace {

struct OutputOpts {
  std::string format = "json";
  std::string out;  // empty: stdout
};

void write_text(const OutputOpts& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream fo(o.out, std::ios::binary);
  if (!fo) throw std::invalid_argument("cannot open output file: " + o.out);
  fo << text;
}

void emit_json(const OutputOpts& o, const json& j) {
  write_text(o, j.dump(2) + "\n");
}

// Report-producing subcommands honor --format; rc 1 when disagreements.
int emit_report(const OutputOpts& o, const Report& rep) {
  if (o.format == "csv")
    write_text(o, rep.to_csv());
  else
    emit_json(o, rep.to_json());
  return rep.disagreements == 0 ? 0 : 1;
}

json field_json(const FieldSpec& f) {
  return {{"n", f.n},
          {"modulus", hex_str(f.modulus)},
          {"generator", hex_str(f.gamma)},
          {"order", f.order},
          {"group_order", f.group_order},
          {"group_factors", f.group_factors},
          {"kernel", kernels::impl_name(kernels::active_impl())}};
}

json witness_json(const PermVerdict& v) {
  if (!v.witness) return nullptr;
  const Witness& w = *v.witness;
  if (auto* cw = std::get_if<CollisionWitness>(&w))
    return {{"type", "collision"},
            {"x1", hex_str(cw->x1)},
            {"x2", hex_str(cw->x2)}};
  if (auto* rw = std::get_if<RootCountWitness>(&w))
    return {{"type", "root-count"}, {"roots", rw->roots}};
  if (auto* hw = std::get_if<HermiteExponentWitness>(&w))
    return {{"type", "hermite-exponent"},
            {"k", hw->k},
            {"coeff", hex_str(hw->coeff)}};
  if (auto* ww = std::get_if<WanLidlWitness>(&w))
    return {{"type", "wan-lidl-condition"},
            {"condition", std::string(1, ww->condition)},
            {"i", ww->i},
            {"j", ww->j}};
  return nullptr;
}

json verdict_json(const PermVerdict& v) {
  return {{"is_pp", v.is_pp},
          {"method", method_name(v.method)},
          {"witness", witness_json(v)}};
}

CaseEmission parse_cases(const std::string& s) {
  if (s == "automatic") return CaseEmission::automatic;
  if (s == "all") return CaseEmission::all;
  if (s == "disagreements") return CaseEmission::disagreements;
  if (s == "none") return CaseEmission::none;
  throw std::invalid_argument("bad --cases value: " + s);
}

Oracle parse_oracle(const std::string& s) {
  if (s == "brute") return Oracle::brute;
  if (s == "wanlidl") return Oracle::wanlidl;
  if (s == "reduction") return Oracle::reduction;
  throw std::invalid_argument("bad --oracle value: " + s);
}

Mode parse_mode(const std::string& s) {
  if (s == "literal") return Mode::literal;
  if (s == "canonical") return Mode::canonical;
  throw std::invalid_argument("bad --mode value: " + s);
}

// The binomial's permutation status on F_{2^n}, computed from the a-value
// held in `f2t` = F_{2^(2t)}. Routing: brute n <= 28, Wan-Lidl n <= 32,
// reduced trinomial beyond (needs only F_{2^(2t)}).
std::pair<bool, std::string> binomial_oracle(uint32_t s, uint32_t t,
                                             FieldElement a,
                                             const FieldSpec& f2t) {
  uint64_t n = (uint64_t)t << s;
  if (n <= 32) {
    FieldSpec ambient = make_field((uint32_t)n);
    FieldElement aa = a;
    if (ambient.n != f2t.n) aa = embed(make_embedding(f2t, ambient), a);
    WanLidlInstance inst{1, (1ull << t) - 1,
                         canonicalize({{1, 1}, {0, aa}}, ambient)};
    if (n <= 28)
      return {is_pp_brute(wan_lidl_poly(inst, ambient), ambient).is_pp,
              "brute"};
    return {wan_lidl(inst, ambient).is_pp, "wanlidl"};
  }
  if (contains(subfield_view(f2t, t), a)) return {false, "reduction"};
  ReducedTrinomial red = reduce_binomial({s, t, a}, f2t);
  return {trinomial_pp_on_subfield(red.tri, f2t).is_pp, "reduction"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation binomials and trinomials over F_{2^n}"};
  app.require_subcommand(1);
  int rc = 0;

  OutputOpts out;
  unsigned workers = 0;
  std::string cases = "automatic";
  std::string profile = "ci";
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--format", out.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", out.out, "write to FILE instead of stdout");
  };
  auto add_run = [&](CLI::App* cmd) {
    add_output(cmd);
    cmd->add_option("--workers", workers,
                    "worker threads (0: PERMPOLY_WORKERS, then hardware)");
    cmd->add_option("--cases", cases,
                    "emitted case rows: automatic|all|disagreements|none")
        ->check(CLI::IsMember({"automatic", "all", "disagreements", "none"}));
  };
  auto run_options = [&]() {
    RunOptions ro;
    ro.workers = workers;
    ro.emission = parse_cases(cases);
    ro.profile = profile;
    return ro;
  };

  // field info
  auto* field_cmd = app.add_subcommand("field", "field constructions");
  field_cmd->require_subcommand(1);
  auto* finfo = field_cmd->add_subcommand("info", "print field parameters");
  uint32_t fi_n = 0;
  std::string fi_mod;
  finfo->add_option("--n", fi_n, "extension degree (1..32)")->required();
  finfo->add_option("--modulus", fi_mod,
                    "irreducible modulus bits (hex); default: smallest");
  add_output(finfo);
  finfo->callback([&] {
    FieldSpec f =
        fi_mod.empty() ? make_field(fi_n) : make_field(fi_n, parse_hex_u64(fi_mod));
    emit_json(out, field_json(f));
  });

  // check
  auto* chk = app.add_subcommand("check", "test one polynomial");
  uint32_t ck_n = 0;
  std::string ck_mod, ck_poly, ck_method = "brute", ck_inner;
  uint64_t ck_r = 1, ck_d = 1;
  chk->add_option("--n", ck_n, "extension degree")->required();
  chk->add_option("--modulus", ck_mod, "modulus bits (hex)");
  chk->add_option("--poly", ck_poly, "polynomial, EXP:COEF[,EXP:COEF...]");
  chk->add_option("--method", ck_method, "brute|hermite|wanlidl")
      ->check(CLI::IsMember({"brute", "hermite", "wanlidl"}));
  chk->add_option("--r", ck_r, "wanlidl: the power of x out front");
  chk->add_option("--d", ck_d, "wanlidl: divisor of 2^n - 1");
  chk->add_option("--inner-poly", ck_inner, "wanlidl: the f in x^r f(x^((q-1)/d))");
  chk->add_option("--workers", workers, "brute scan workers");
  add_output(chk);
  chk->callback([&] {
    FieldSpec f =
        ck_mod.empty() ? make_field(ck_n) : make_field(ck_n, parse_hex_u64(ck_mod));
    PermVerdict v;
    SparsePoly shown;
    if (ck_method == "wanlidl") {
      if (ck_inner.empty())
        throw std::invalid_argument("--method wanlidl needs --inner-poly");
      WanLidlInstance inst{ck_r, ck_d, parse_poly_spec(ck_inner, f)};
      shown = wan_lidl_poly(inst, f);
      v = wan_lidl(inst, f);
    } else {
      if (ck_poly.empty())
        throw std::invalid_argument("--method " + ck_method + " needs --poly");
      shown = parse_poly_spec(ck_poly, f);
      v = ck_method == "hermite"
              ? is_pp_hermite(shown, f)
              : is_pp_brute(shown, f, {resolve_workers(workers)});
    }
    json j = {{"field", field_json(f)}, {"poly", poly_spec_string(shown)}};
    json vj = verdict_json(v);
    for (auto& [k, val] : vj.items()) j[k] = val;
    emit_json(out, j);
  });

  // trinomial check
  auto* tri = app.add_subcommand("trinomial", "x^(2^s+1) + x^(2^(s-1)+1) + ax");
  tri->require_subcommand(1);
  auto* tchk = tri->add_subcommand("check", "classify one (s, t, alpha)");
  uint32_t tc_s = 0, tc_t = 0;
  std::string tc_alpha, tc_mode = "canonical";
  bool tc_oracle = false;
  tchk->add_option("--s", tc_s, "exponent parameter")->required();
  tchk->add_option("--t", tc_t, "subfield degree")->required();
  tchk->add_option("--alpha", tc_alpha, "coefficient in F_{2^t} (hex)")->required();
  tchk->add_option("--mode", tc_mode, "literal|canonical")
      ->check(CLI::IsMember({"literal", "canonical"}));
  tchk->add_flag("--oracle", tc_oracle, "attach a brute-force verdict");
  add_output(tchk);
  tchk->callback([&] {
    FieldSpec f = make_field(tc_t);
    FieldElement alpha = parse_element(tc_alpha, f);
    ClassifierDecision dec = classify_trinomial({tc_s, tc_t, alpha}, parse_mode(tc_mode));
    json j = {{"s", tc_s},
              {"t", tc_t},
              {"alpha", hex_str(alpha)},
              {"mode", tc_mode},
              {"is_pp", dec.is_pp},
              {"failed", fail_tag_name(dec.failed)}};
    if (tc_oracle) {
      PermVerdict v = is_pp_brute(trinomial_poly({tc_s, tc_t, alpha}, f), f);
      j["oracle"] = verdict_json(v);
      j["agree"] = v.is_pp == dec.is_pp;
      if (v.is_pp != dec.is_pp) rc = 1;
    }
    emit_json(out, j);
  });

  // binomial check / enumerate
  auto* bin = app.add_subcommand("binomial", "x^(E+1) + ax, E = (2^n-1)/(2^t-1)");
  bin->require_subcommand(1);

  auto* bchk = bin->add_subcommand("check", "classify one (s, t, a)");
  uint32_t bc_s = 0, bc_t = 0;
  std::string bc_a, bc_mode = "canonical";
  bool bc_oracle = false;
  bchk->add_option("--s", bc_s, "n = 2^s * t")->required();
  bchk->add_option("--t", bc_t, "subfield degree")->required();
  bchk->add_option("--a", bc_a, "coefficient in F_{2^(2t)} (hex)")->required();
  bchk->add_option("--mode", bc_mode, "literal|canonical")
      ->check(CLI::IsMember({"literal", "canonical"}));
  bchk->add_flag("--oracle", bc_oracle,
                 "attach an independent verdict (brute n <= 28, wan-lidl to "
                 "32, reduced trinomial beyond)");
  add_output(bchk);
  bchk->callback([&] {
    FieldSpec f2t = make_field(2 * bc_t);
    FieldElement a = parse_element(bc_a, f2t);
    ClassifierDecision dec =
        classify_binomial({bc_s, bc_t, a}, f2t, parse_mode(bc_mode));
    json j = {{"s", bc_s},
              {"t", bc_t},
              {"a", hex_str(a)},
              {"n", (uint64_t)bc_t << bc_s},
              {"mode", bc_mode},
              {"is_pp", dec.is_pp},
              {"failed", fail_tag_name(dec.failed)}};
    if (bc_oracle) {
      auto [opp, omethod] = binomial_oracle(bc_s, bc_t, a, f2t);
      j["oracle"] = {{"is_pp", opp}, {"method", omethod}};
      j["agree"] = opp == dec.is_pp;
      if (opp != dec.is_pp) rc = 1;
    }
    emit_json(out, j);
  });

  auto* benum = bin->add_subcommand("enumerate",
                                    "every a in F_{2^(2t)}^* vs one oracle");
  uint32_t be_s = 0, be_t = 0;
  std::string be_oracle = "brute";
  benum->add_option("--s", be_s, "n = 2^s * t")->required();
  benum->add_option("--t", be_t, "subfield degree")->required();
  benum->add_option("--oracle", be_oracle, "brute|wanlidl|reduction")
      ->check(CLI::IsMember({"brute", "wanlidl", "reduction"}));
  add_run(benum);
  benum->callback([&] {
    rc = emit_report(
        out, enumerate_binomials(be_s, be_t, parse_oracle(be_oracle),
                                 run_options()));
  });

  // verify
  auto* ver = app.add_subcommand("verify", "run a named invariant suite");
  std::string vs_suite;
  uint32_t vs_max_t = 0, vs_max_n = 0, vt_s_max = 0, vt_t_max = 0;
  ver->add_option("--suite", vs_suite,
                  "coeffs|lucas|fieldaxioms|permtesters|reduction|trinomials")
      ->required()
      ->check(CLI::IsMember({"coeffs", "lucas", "fieldaxioms", "permtesters",
                             "reduction", "trinomials"}));
  ver->add_option("--max-t", vs_max_t, "suite-specific t cap");
  ver->add_option("--max-n", vs_max_n, "reduction: ambient degree cap");
  ver->add_option("--s-max", vt_s_max, "trinomials: grid bound (default 9)");
  ver->add_option("--t-max", vt_t_max, "trinomials: grid bound (default 9)");
  ver->add_option("--profile", profile, "ci|extended")
      ->check(CLI::IsMember({"ci", "extended"}));
  add_run(ver);
  ver->callback([&] {
    RunOptions ro = run_options();
    ro.max_t = vs_max_t;
    ro.max_n = vs_max_n;
    if (vs_suite == "trinomials") {
      uint32_t sm = vt_s_max ? vt_s_max : 9, tm = vt_t_max ? vt_t_max : 9;
      rc = emit_report(out, verify_trith(sm, tm, ro));
    } else {
      rc = emit_report(out, verify_suite(vs_suite, ro));
    }
  });

  // audit
  auto* aud = app.add_subcommand(
      "audit", "literal vs canonical classifier differences, with truth");
  uint32_t au_s_max = 5, au_t_max = 4;
  aud->add_option("--s-max", au_s_max, "grid bound (default 5)");
  aud->add_option("--t-max", au_t_max, "grid bound (default 4)");
  add_run(aud);
  aud->callback([&] {
    rc = emit_report(out, audit_literal(au_s_max, au_t_max, run_options()));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
