#include "bunkbed/report.hpp"

#include <cstdint>
#include <cstdio>

namespace bunkbed {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Discrepancy: return "DISCREPANCY";
    case Verdict::Partial: return "PARTIAL";
    case Verdict::Fail: return "FAIL";
  }
  return "FAIL";
}

Verdict combine(Verdict a, Verdict b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

namespace {

Verdict parse_verdict(const std::string& s) {
  for (Verdict v : {Verdict::Pass, Verdict::Discrepancy, Verdict::Partial, Verdict::Fail})
    if (to_string(v) == s) return v;
  return Verdict::Fail;
}

}  // namespace

void VerificationReport::require(const std::string& name, Verdict v) {
  if (verdicts.contains(name)) v = combine(v, parse_verdict(verdicts[name].get<std::string>()));
  verdicts[name] = std::string(to_string(v));
  verdict = combine(verdict, v);
}

void VerificationReport::set_inputs(nlohmann::json in) {
  inputs = std::move(in);
  inputs_digest = fnv1a_hex(check + "\n" + inputs.dump());
}

nlohmann::json VerificationReport::to_json() const {
  return {{"check", check},
          {"inputs", inputs},
          {"inputs_digest", inputs_digest},
          {"verdict", std::string(to_string(verdict))},
          {"verdicts", verdicts},
          {"quantities", quantities},
          {"witnesses", witnesses}};
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int exit_code(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (r.verdict != Verdict::Pass && r.verdict != Verdict::Discrepancy) return 1;
  return 0;
}

}  // namespace bunkbed
