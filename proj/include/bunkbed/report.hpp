#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace bunkbed {

enum class Verdict { Pass, Discrepancy, Partial, Fail };

std::string_view to_string(Verdict v);
/// The more severe of the two: FAIL > PARTIAL > DISCREPANCY > PASS.
Verdict combine(Verdict a, Verdict b);
inline Verdict verdict_of(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

/// Outcome of one check. nlohmann::json objects keep keys sorted, so dumps
/// are deterministic.
struct VerificationReport {
  std::string check;
  std::string inputs_digest;
  Verdict verdict = Verdict::Pass;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json quantities = nlohmann::json::object();
  nlohmann::json witnesses = nlohmann::json::object();
  /// Named sub-verdicts, folded into `verdict` by `require`. Requiring the
  /// same name twice keeps the more severe verdict.
  nlohmann::json verdicts = nlohmann::json::object();

  void require(const std::string& name, Verdict v);
  void require(const std::string& name, bool ok) { require(name, verdict_of(ok)); }
  /// Sets `inputs` and derives `inputs_digest` from its canonical dump.
  void set_inputs(nlohmann::json in);

  nlohmann::json to_json() const;
};

/// FNV-1a 64-bit, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// Exit status for a set of reports: 0 if every verdict is PASS or
/// DISCREPANCY, 1 otherwise.
int exit_code(const std::vector<VerificationReport>& reports);

}  // namespace bunkbed
