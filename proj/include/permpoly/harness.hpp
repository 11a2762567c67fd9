#pragma once
// Grid drivers behind the CLI: binomial enumeration against selectable
// oracles, the trinomial classifier grid, the literal-vs-canonical audit,
// and the named invariant suites. Every driver produces a Report.
//
// Reports serialize to JSON (canonical) or CSV (derived, one row per case).
// Case order follows the input enumeration order regardless of worker
// count, so a report is byte-stable across runs and across --workers values
// except for summary.elapsed_ms.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "permpoly/field.hpp"

namespace permpoly {

enum class Oracle : uint8_t { brute, wanlidl, reduction };
const char* oracle_name(Oracle o);

// What lands in Report::cases. `automatic` keeps every case when the run has
// at most 65536 of them and only the disagreeing ones otherwise (the choice
// is recorded in params.cases_emitted).
enum class CaseEmission : uint8_t { automatic, all, disagreements, none };

struct CaseRow {
  nlohmann::ordered_json input;
  nlohmann::ordered_json result;  // verdict fields, flattened into the row
  bool agree = true;
};

struct Report {
  std::string suite;
  nlohmann::ordered_json params;
  std::vector<CaseRow> cases;
  uint64_t total = 0;          // cases examined (not necessarily emitted)
  uint64_t disagreements = 0;  // cases with agree == false
  uint64_t pp_count = 0;       // oracle-positive cases (classifier-positive
                               // when no oracle ran)
  uint64_t elapsed_ms = 0;

  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;
};

struct RunOptions {
  unsigned workers = 0;  // 0: PERMPOLY_WORKERS env, then hardware
  CaseEmission emission = CaseEmission::automatic;
  std::string profile = "ci";  // "ci" | "extended"
  uint32_t max_t = 0;          // 0: suite/profile default
  uint32_t max_n = 0;          // 0: suite/profile default
};

// All a in F_{2^(2t)}^* against one oracle for g(x) = x^(E+1) + a*x over
// F_{2^n}, n = 2^s*t, E = (2^n-1)/(2^t-1). Guards: brute needs n <= 28,
// wanlidl n <= 32; reduction works from F_{2^(2t)} alone (2t <= 32).
Report enumerate_binomials(uint32_t s, uint32_t t, Oracle oracle,
                           const RunOptions& opts = {});

// Full (s, t, alpha) grid, canonical trinomial classifier vs brute force
// over F_{2^t}. Guards: s_max <= 12, t_max <= 11.
Report verify_trith(uint32_t s_max, uint32_t t_max,
                    const RunOptions& opts = {});

// Findings report: every grid point where the literal and canonical
// classifiers differ, with ground truth attached when computable (brute for
// n <= 28, wan_lidl up to n <= 32). A case disagrees only if attached truth
// contradicts the canonical classifier.
Report audit_literal(uint32_t s_max, uint32_t t_max,
                     const RunOptions& opts = {});

// Named invariant suites: coeffs | lucas | fieldaxioms | permtesters |
// reduction. Unknown names are rejected.
Report verify_suite(const std::string& name, const RunOptions& opts = {});

}  // namespace permpoly
