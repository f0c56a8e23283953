#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace oddsum {

/// Bad parameters or malformed input. Maps to CLI exit code 1.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource limit was hit. Maps to CLI exit code 2.
class ResourceLimit : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The odd-dominating solution space has more than `cap` members.
class SpaceTooLarge : public ResourceLimit {
public:
  SpaceTooLarge(std::size_t nullity, std::uint64_t cap)
      : ResourceLimit("space too large: nullity " + std::to_string(nullity) + " gives 2^" +
                      std::to_string(nullity) + " odd-dominating sets, cap is " + std::to_string(cap)),
        nullity_(nullity), cap_(cap) {}

  auto nullity() const -> std::size_t { return nullity_; }
  auto cap() const -> std::uint64_t { return cap_; }

private:
  std::size_t nullity_;
  std::uint64_t cap_;
};

/// The branch-and-bound coloring search visited more nodes than allowed.
class BudgetExceeded : public ResourceLimit {
public:
  explicit BudgetExceeded(std::uint64_t budget)
      : ResourceLimit("chromatic search exceeded node budget of " + std::to_string(budget)), budget_(budget) {}

  auto budget() const -> std::uint64_t { return budget_; }

private:
  std::uint64_t budget_;
};

} // namespace oddsum
