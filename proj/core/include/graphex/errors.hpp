#pragma once

#include <stdexcept>
#include <string>

namespace graphex {

struct TooLargeForCanonicalization : std::runtime_error {
  explicit TooLargeForCanonicalization(const std::string& what) : std::runtime_error(what) {}
};

struct OddHalfEdgeSum : std::invalid_argument {
  explicit OddHalfEdgeSum(const std::string& what) : std::invalid_argument(what) {}
};

struct UnbalancedSides : std::invalid_argument {
  explicit UnbalancedSides(const std::string& what) : std::invalid_argument(what) {}
};

struct RateExceedsOne : std::invalid_argument {
  explicit RateExceedsOne(const std::string& what) : std::invalid_argument(what) {}
};

struct ValidationFailure : std::runtime_error {
  explicit ValidationFailure(const std::string& what) : std::runtime_error(what) {}
};

struct TruncationBudgetExceeded : std::runtime_error {
  explicit TruncationBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised internally when a random labeling produces bit-identical labels for
// two vertices; the replicate is redrawn rather than silently merging them.
struct CollisionRetry : std::runtime_error {
  explicit CollisionRetry(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace graphex
