#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsd {

enum class ErrorCode {
  // digraph model
  PartitionError,
  EmptyDigraph,
  UnknownId,
  SameArc,
  SameVertex,
  EmptySelection,
  // index sets and sequences
  BadResidue,
  NegativeTail,
  NonIntegralTail,
  Overflow,
  // families and internal elements
  UnknownBuiltin,
  MalformedSpec,
  NonEventuallyConstantExplicit,
  InvalidSelector,
  UnsupportedSelector,
  SortMismatch,
  FamilyMismatch,
  NotFiniteEnlargement,
  // transferred connectivity
  NotReachable,
  EqualVertices,
  NotHyperfinite,
  NotSimple,
  // galaxies
  NotWeaklyConnectedAE,
  AnchorNotStandard,
  PrincipalGalaxy,
  UnsupportedFamily,
  NotLocallyFinite,
  NotInfinite,
};

/// Coarse grouping used by the CLI exit-code contract.
enum class ErrorCategory { Parse, Validation, Unsupported };

std::string_view to_string(ErrorCode code) noexcept;
ErrorCategory category_of(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return category_of(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace nsd
