#pragma once

#include <string>
#include <string_view>

namespace idemgraph {

enum class ClaimStatus {
  Pass,
  Fail,
  /// A displayed witness did not validate but the statement it supports was
  /// confirmed independently; recorded, not counted as a failure.
  Discrepancy,
  /// Not run, e.g. the brute-force leg when q^4 exceeds the cap.
  Skipped,
};

constexpr std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "FAIL";
    case ClaimStatus::Discrepancy: return "discrepancy";
    case ClaimStatus::Skipped: return "skipped";
  }
  return "?";
}

struct Claim {
  std::string name;
  std::string statement;
  std::string computed;
  std::string expected;
  ClaimStatus status = ClaimStatus::Pass;
  std::string note;

  bool operator==(const Claim&) const = default;
};

inline Claim make_claim(std::string name, std::string statement, std::string computed,
                        std::string expected, bool ok, std::string note = {}) {
  return {std::move(name), std::move(statement), std::move(computed), std::move(expected),
          ok ? ClaimStatus::Pass : ClaimStatus::Fail, std::move(note)};
}

}  // namespace idemgraph
