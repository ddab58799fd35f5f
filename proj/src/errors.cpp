#include "k3fib/errors.hpp"

namespace k3fib {

const char* code_name(errc c) {
  switch (c) {
    case errc::non_reduced_branch: return "NonReducedBranch";
    case errc::illegal_marking: return "IllegalMarking";
    case errc::unsupported_fiber: return "UnsupportedFiber";
    case errc::rank_underflow: return "RankUnderflow";
    case errc::unavailable_branch: return "UnavailableBranch";
    case errc::inconsistent_input: return "InconsistentInput";
    case errc::not_a_section: return "NotASection";
    case errc::wrong_intersection: return "WrongIntersection";
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_variable: return "UnknownVariable";
    case errc::degenerate_resultant: return "DegenerateResultant";
    case errc::not_homogeneous: return "NotHomogeneous";
    case errc::inexact_factorization: return "InexactFactorization";
    case errc::not_a_conic_bundle_pencil: return "NotAConicBundlePencil";
    case errc::no_section_given: return "NoSectionGiven";
    case errc::singular_quartic: return "SingularQuartic";
    case errc::singular_input: return "SingularInput";
    case errc::not_minimalizable: return "NotMinimalizable";
    case errc::ambiguous_valuations: return "AmbiguousValuations";
  }
  return "Unknown";
}

}  // namespace k3fib
