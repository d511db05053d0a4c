#pragma once

#include <stdexcept>
#include <string>

namespace knotsig {

enum class ErrorKind {
  MalformedInput,        // unreadable record / token
  EdgeLabelCount,        // an edge label does not appear exactly twice
  NonConsecutiveLabels,  // labels are not 1..2n consecutive along components
  InconsistentOrientation,
  Disconnected,
  BadGenerator,   // braid letter 0 or |letter| >= strands
  InvalidEdge,    // move refers to a nonexistent edge
  SameEdge,       // r2 with edge_a == edge_b
  NotAdjacent,    // region pair does not share an edge
  NotKnot,        // oracle needs a one-component closure
  ThinColumn,     // braid column used fewer than twice (oracle precondition)
  ZeroDenominator,
  NonSymmetric,
  NotPalindromic,
  ShapeMismatch,
  Internal,  // a proved invariant failed; indicates a bug, not bad input
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

  // Input-shaped problems (CLI exit code 2) vs identity/internal failures.
  bool is_input_error() const {
    switch (kind_) {
      case ErrorKind::Internal:
        return false;
      default:
        return true;
    }
  }

 private:
  ErrorKind kind_;
};

}  // namespace knotsig
