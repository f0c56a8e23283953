#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oddsum {

struct Claim {
  std::string claim;
  std::string expected;
  std::string observed;
  bool pass = false;
};

/// Outcome of re-deriving one published result at desk scale.
struct TheoremReport {
  std::string id;
  std::string params;
  std::vector<Claim> claims;
  double seconds = 0.0;

  auto passed() const -> bool;
  auto to_text() const -> std::string;
  auto to_json() const -> nlohmann::json;
};

struct VerifyParams {
  std::optional<std::size_t> delta, k, g, t, max_n, samples;
  std::uint64_t seed = 20231031;
  bool long_test = false;
};

/// propA, lemma2, thm1, thm3, obs5, thm4, lemma6, thm7, thm8, k2kn.
auto verify_ids() -> std::vector<std::string>;

/// Throws InvalidArgument for an unknown id.
auto verify_theorem(std::string_view id, const VerifyParams & params) -> TheoremReport;

} // namespace oddsum
