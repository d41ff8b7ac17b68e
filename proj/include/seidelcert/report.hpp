#pragma once

#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace seidelcert {

enum class ClaimStatus { Verified, Refuted, Error };

inline std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Verified: return "verified";
    case ClaimStatus::Refuted: return "refuted";
    case ClaimStatus::Error: return "error";
  }
  return "?";
}

struct ClaimReport {
  std::string claim;
  ClaimStatus status = ClaimStatus::Error;
  std::optional<std::string> expected;
  std::optional<std::string> actual;
  std::int64_t elapsed_ms = 0;
  std::optional<std::string> witness;

  bool verified() const { return status == ClaimStatus::Verified; }
};

/// Verified iff expected == actual.
inline ClaimReport compare_claim(std::string id, std::string expected, std::string actual,
                                 std::optional<std::string> witness = std::nullopt) {
  ClaimReport r;
  r.claim = std::move(id);
  r.status = expected == actual ? ClaimStatus::Verified : ClaimStatus::Refuted;
  r.expected = std::move(expected);
  r.actual = std::move(actual);
  r.witness = std::move(witness);
  return r;
}

/// Runs `body`, stamps the elapsed time, and turns exceptions into error reports.
inline ClaimReport timed_claim(const std::string& id, const std::function<ClaimReport()>& body) {
  auto start = std::chrono::steady_clock::now();
  ClaimReport r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = ClaimReport{};
    r.status = ClaimStatus::Error;
    r.witness = e.what();
  }
  r.claim = id;
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// One compact JSON object, keys in a fixed order, no trailing newline.
inline std::string to_json_line(const ClaimReport& r, bool with_timing = true) {
  nlohmann::ordered_json j;
  j["claim"] = r.claim;
  j["status"] = to_string(r.status);
  j["expected"] = r.expected ? nlohmann::ordered_json(*r.expected) : nlohmann::ordered_json(nullptr);
  j["actual"] = r.actual ? nlohmann::ordered_json(*r.actual) : nlohmann::ordered_json(nullptr);
  j["ms"] = with_timing ? r.elapsed_ms : 0;
  j["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
  return j.dump();
}

inline bool all_verified(const std::vector<ClaimReport>& reports) {
  for (const auto& r : reports)
    if (!r.verified()) return false;
  return true;
}

}  // namespace seidelcert
