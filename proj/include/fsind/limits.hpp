#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fsind {

/// Size limits for anything that enumerates group elements or cosets.
struct Limits {
  std::uint64_t enumeration_bound = 1'000'000;
  std::uint64_t index_bound = 100'000;
};

/// Raised when an operation would enumerate past a configured bound.
class BoundExceeded : public std::runtime_error {
 public:
  BoundExceeded(std::string bound_name, std::uint64_t requested, std::uint64_t limit)
      : std::runtime_error(bound_name + " exceeded: need " + std::to_string(requested) +
                           ", configured limit is " + std::to_string(limit)),
        bound_name_(std::move(bound_name)),
        requested_(requested),
        limit_(limit) {}

  const std::string& bound_name() const noexcept { return bound_name_; }
  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::string bound_name_;
  std::uint64_t requested_;
  std::uint64_t limit_;
};

/// A mathematical precondition of an operation does not hold for its inputs.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed (e.g. a non-integral indicator).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void check_enumeration(std::uint64_t order, const Limits& limits) {
  if (order > limits.enumeration_bound) {
    throw BoundExceeded("enumeration bound", order, limits.enumeration_bound);
  }
}

inline void check_index(std::uint64_t index, const Limits& limits) {
  if (index > limits.index_bound) {
    throw BoundExceeded("index bound", index, limits.index_bound);
  }
}

}  // namespace fsind
