#include "knotsig/error.hpp"

namespace knotsig {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedInput: return "malformed input";
    case ErrorKind::EdgeLabelCount: return "edge label count";
    case ErrorKind::NonConsecutiveLabels: return "non-consecutive labels";
    case ErrorKind::InconsistentOrientation: return "inconsistent orientation";
    case ErrorKind::Disconnected: return "disconnected diagram";
    case ErrorKind::BadGenerator: return "bad braid generator";
    case ErrorKind::InvalidEdge: return "invalid edge";
    case ErrorKind::SameEdge: return "same edge twice";
    case ErrorKind::NotAdjacent: return "regions not adjacent";
    case ErrorKind::NotKnot: return "not a knot";
    case ErrorKind::ThinColumn: return "braid column used fewer than twice";
    case ErrorKind::ZeroDenominator: return "zero denominator";
    case ErrorKind::NonSymmetric: return "matrix not symmetric";
    case ErrorKind::NotPalindromic: return "polynomial not palindromic";
    case ErrorKind::ShapeMismatch: return "shape mismatch";
    case ErrorKind::Internal: return "internal invariant violated";
  }
  return "unknown error";
}

}  // namespace knotsig
