#pragma once

#include <stdexcept>
#include <string>

namespace rspir {

// No codeword within the error/erasure decoding radius.
struct DecodeFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A retrieval round could not be decoded (corruption exceeded the budget).
struct RoundFailure : std::runtime_error {
  int round;
  RoundFailure(int round_, const std::string& what)
      : std::runtime_error("round " + std::to_string(round_) + ": " + what),
        round(round_) {}
};

struct InfeasibleParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An exact audit was asked to enumerate more states than the configured cap.
struct EnumerationTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The comparison scheme supports byzantine or unresponsive servers, not both.
struct UnsupportedComparison : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace rspir
