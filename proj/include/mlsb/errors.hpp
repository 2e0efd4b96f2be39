#pragma once

#include <stdexcept>

namespace mlsb {

// Instance or bench-spec text that cannot be parsed.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parsed data that violates a domain invariant (self-loop, duplicate edge,
// label out of range, bad generator config, ...).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mlsb
