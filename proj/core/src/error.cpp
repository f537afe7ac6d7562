#include "nsd/error.hpp"

namespace nsd {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::PartitionError: return "PartitionError";
    case ErrorCode::EmptyDigraph: return "EmptyDigraph";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::SameArc: return "SameArc";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::EmptySelection: return "EmptySelection";
    case ErrorCode::BadResidue: return "BadResidue";
    case ErrorCode::NegativeTail: return "NegativeTail";
    case ErrorCode::NonIntegralTail: return "NonIntegralTail";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorCode::MalformedSpec: return "MalformedSpec";
    case ErrorCode::NonEventuallyConstantExplicit: return "NonEventuallyConstantExplicit";
    case ErrorCode::InvalidSelector: return "InvalidSelector";
    case ErrorCode::UnsupportedSelector: return "UnsupportedSelector";
    case ErrorCode::SortMismatch: return "SortMismatch";
    case ErrorCode::FamilyMismatch: return "FamilyMismatch";
    case ErrorCode::NotFiniteEnlargement: return "NotFiniteEnlargement";
    case ErrorCode::NotReachable: return "NotReachable";
    case ErrorCode::EqualVertices: return "EqualVertices";
    case ErrorCode::NotHyperfinite: return "NotHyperfinite";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotWeaklyConnectedAE: return "NotWeaklyConnectedAE";
    case ErrorCode::AnchorNotStandard: return "AnchorNotStandard";
    case ErrorCode::PrincipalGalaxy: return "PrincipalGalaxy";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::NotLocallyFinite: return "NotLocallyFinite";
    case ErrorCode::NotInfinite: return "NotInfinite";
  }
  return "Unknown";
}

ErrorCategory category_of(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedSpec:
      return ErrorCategory::Parse;
    case ErrorCode::UnknownBuiltin:
    case ErrorCode::UnsupportedSelector:
    case ErrorCode::UnsupportedFamily:
    case ErrorCode::NotFiniteEnlargement:
    case ErrorCode::NotHyperfinite:
    case ErrorCode::NotSimple:
    case ErrorCode::NotLocallyFinite:
    case ErrorCode::NotInfinite:
    case ErrorCode::NotWeaklyConnectedAE:
      return ErrorCategory::Unsupported;
    default:
      return ErrorCategory::Validation;
  }
}

}  // namespace nsd
