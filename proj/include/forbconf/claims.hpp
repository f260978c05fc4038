#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace forbconf {

enum class ClaimStatus { pass, fail, skipped };

const char* to_string(ClaimStatus s);

struct ClaimResult {
  std::string id;
  std::string checked;  // e.g. "checked at sizes 3,4" or "m=4..7"
  ClaimStatus status = ClaimStatus::pass;
  std::string detail;   // witness text or the first counterexample

  /// "<id>  <checked>  PASS" with SKIPPED(budget) for skipped claims.
  std::string line() const;
};

struct VerifyOptions {
  /// Factor sizes for claims about products of unbounded blocks.
  std::vector<std::size_t> sizes{2, 3, 4, 5};
  /// Containment claims over unbounded blocks search sizes 2..this.
  std::size_t max_contain_size = 5;
  /// Per search; searches that run out are reported SKIPPED(budget).
  std::chrono::milliseconds search_budget{60000};
  /// Largest m tried by claims that look for the largest feasible m.
  std::size_t max_m = 12;
};

struct Claim {
  std::string id;
  std::string group;  // "products" or "formulas"
  std::function<ClaimResult(const VerifyOptions&)> check;
};

std::vector<Claim> builtin_claims();

/// Lines of the form
///   avoid <id> <config> : <pattern>[^c]
///   contain <id> <config> : <pattern or spec>
///   equal <id> <spec> : <spec>
///   forb <id> <family> : m=<m> value=<v>
/// where <pattern> is an unsized product such as IcxIcxT. Blank lines and
/// lines starting with '#' are ignored.
std::vector<Claim> parse_claims(const std::string& text);

std::vector<ClaimResult> verify_claims(const std::vector<Claim>& claims, const VerifyOptions& opts);

struct Table3Options {
  std::size_t m_lo = 3;
  std::size_t m_hi = 5;
  std::chrono::milliseconds search_budget{5000};
  std::size_t factor_size = 3;
  // Cells with an exact formula keep going up to this m.
  std::size_t formula_m_hi = 10;
};

/// Markdown table with one row per pair of configurations: the claimed
/// order, the best construction found for both, and exact small-m values.
std::string table3_markdown(const Table3Options& opts);

}  // namespace forbconf
