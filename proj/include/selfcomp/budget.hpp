#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace selfcomp {

/// Thrown when an exhaustive method would exceed its work guard.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string method, std::int64_t needed, std::int64_t limit)
      : std::runtime_error(method + ": budget exceeded (" + std::to_string(needed) + " > " +
                           std::to_string(limit) + ")"),
        method_(std::move(method)) {}

  const std::string& method() const noexcept { return method_; }

 private:
  std::string method_;
};

/// Work guards for the exhaustive and combinatorial methods.
struct Budget {
  std::int64_t pp_cells = 64;          // a*b*c for full plane partition enumeration
  std::int64_t sc_free_cells = 32;     // a*b*ceil(c/2) for self-complementary enumeration
  std::int64_t path_cells = 64;        // a*(b+x) for the lattice path family search
  std::int64_t minor_terms = 1 << 20;  // endpoint selections in the minor sum

  /// Every guard set to the same limit.
  static Budget uniform(std::int64_t limit) { return {limit, limit, limit, limit}; }

  static void check(const char* method, std::int64_t needed, std::int64_t limit) {
    if (needed > limit) throw BudgetExceeded(method, needed, limit);
  }
};

}  // namespace selfcomp
