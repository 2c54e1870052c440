#pragma once

#include <stdexcept>
#include <string>

namespace cdfree {

// Bad caller input: unknown vertex, absent edge, malformed file.
class input_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called outside its contract (e.g. diamond classification
// on a graph that still contains a claw).
class contract_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// An internal invariant did not hold. Always a bug or a stale modular.
class invariant_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// The brute-force oracle refused an instance above its work bound.
class capacity_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace cdfree
