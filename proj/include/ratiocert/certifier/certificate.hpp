#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratiocert/certifier/ratio.hpp"
#include "ratiocert/graph_core/spectrum.hpp"

namespace ratiocert {

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string detail;

  bool operator==(const IdentityCheck&) const = default;
};

struct EnumerationStats {
  std::size_t seeds = 0;
  std::size_t max_rank_C = 0;
  std::uint64_t candidates_tested = 0;
  std::uint64_t zero_one_candidates = 0;
  std::uint64_t valid_hits = 0;

  bool operator==(const EnumerationStats&) const = default;
};

struct Certificate {
  std::string tool_version;
  std::string family;
  std::vector<std::pair<std::string, std::string>> parameters;
  /// "certified" when every identity check passed, "failed" otherwise.
  std::string status;
  /// Kind name of the error that aborted the run, if any.
  std::string error;
  std::string error_message;
  std::optional<SpectrumReport> spectrum;
  std::optional<RatioBoundCertificate> ratio;
  /// "colspace_enumeration" or "brute_force".
  std::string method;
  std::string seed_strategy;
  EnumerationStats enumeration;
  std::vector<std::vector<std::string>> max_independent_sets;
  std::vector<IdentityCheck> identity_checks;
  /// Milliseconds per stage; empty unless timings were requested.
  std::vector<std::pair<std::string, double>> timings;
  std::vector<std::string> notes;

  void check(std::string name, bool pass, std::string detail = {}) {
    identity_checks.push_back({std::move(name), pass, std::move(detail)});
  }
  bool all_checks_pass() const;
  /// Sets status from the checks and the error field.
  void finalize();
};

/// Pretty-printed JSON with a trailing newline. Rationals are written as "p/q" strings.
std::string certificate_to_json(const Certificate& c);
/// Throws Error(kParse).
Certificate certificate_from_json(const std::string& text);

}  // namespace ratiocert
