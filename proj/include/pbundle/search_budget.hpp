#pragma once

#include <cstdint>
#include <string_view>

namespace pbundle {

/// Upper bound on brute-force candidate evaluations. The default is 10^7 and
/// may be overridden with the PBUNDLE_SEARCH_CAP environment variable.
class SearchBudget {
public:
  static constexpr std::uint64_t default_cap = 10'000'000;

  explicit SearchBudget(std::uint64_t cap = default_cap) : cap_(cap) {}
  static SearchBudget from_env();

  std::uint64_t cap() const { return cap_; }

  /// Throws Error(search_cap) when `candidates` exceeds the cap.
  void require(std::uint64_t candidates, std::string_view what) const;

private:
  std::uint64_t cap_;
};

/// base^exponent, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent);

}  // namespace pbundle
