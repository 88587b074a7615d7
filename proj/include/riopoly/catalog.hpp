#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "riopoly/appell.hpp"

namespace riopoly {

// A registered classical family: generating spec at the requested truncation,
// optional column weight, and the frozen expected data used by golden tests.
struct FamilyEntry {
  std::string name;
  RiordanSpec spec;
  std::optional<Weight> weight;
  std::vector<std::vector<Rational>> golden_rows;
  std::vector<Polynomial> golden_polys;
  std::string provenance;
};

struct VerifyReport {
  bool ok;
  std::string detail;  // "ok" or the first mismatch location
};

struct CheckResult {
  std::string name;
  bool ok;
  std::string detail;
};

// Registry order is the fixture order; stable across runs.
std::vector<std::string> family_names();

// Entry with spec truncated to at least R-1 (never below the stored data).
// Unknown name raises UnknownFamily.
FamilyEntry get_family(const std::string& name, std::size_t R);

// Rebuilds triangle rows and polynomials from the entry's spec and diffs them
// against the golden data, over the first min(R, stored) rows.
VerifyReport diff_family(const FamilyEntry& e, std::size_t R);
VerifyReport verify_family(const std::string& name, std::size_t R);

// Cross-family identity checks by name (UnknownName if absent); check_names
// lists them in a stable order.
std::vector<std::string> check_names();
CheckResult run_check(const std::string& name);

// The embedded fixture text, for audits.
std::string_view families_fixture_text();

}  // namespace riopoly
