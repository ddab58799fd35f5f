#pragma once

#include <stdexcept>
#include <string>

namespace k3fib {

// Domain failure modes. The CLI maps these to machine-readable error objects,
// so each code keeps a stable wire name (see code_name()).
enum class errc {
  non_reduced_branch,
  illegal_marking,
  unsupported_fiber,
  rank_underflow,
  unavailable_branch,
  inconsistent_input,
  not_a_section,
  wrong_intersection,
  syntax_error,
  unknown_variable,
  degenerate_resultant,
  not_homogeneous,
  inexact_factorization,
  not_a_conic_bundle_pencil,
  no_section_given,
  singular_quartic,
  singular_input,
  not_minimalizable,
  ambiguous_valuations,
};

const char* code_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }
  const char* code_name() const { return k3fib::code_name(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace k3fib
