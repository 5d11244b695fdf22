// Error types shared by all dblcat modules.
#pragma once

#include <stdexcept>
#include <string>

namespace dblcat {

struct DblcatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A table references an undeclared identifier, a composable entry is
// missing, or an entry sits on a non-composable pair. Distinct from an
// axiom violation: malformed presentations are encoding bugs.
struct MalformedPresentation : DblcatError {
  using DblcatError::DblcatError;
};

struct UnknownIdentifier : DblcatError {
  using DblcatError::DblcatError;
};

// A precondition "input validates" failed.
struct InvalidInput : DblcatError {
  using DblcatError::DblcatError;
};

struct NotLengthOne : DblcatError {
  using DblcatError::DblcatError;
};

// A functor image left the globularily generated piece. Must never fire
// for valid inputs; firing falsifies the containment result on the
// instance and indicates a bug.
struct ImageEscape : DblcatError {
  using DblcatError::DblcatError;
};

struct LevelOutOfRange : DblcatError {
  using DblcatError::DblcatError;
};

struct DimensionMismatch : DblcatError {
  using DblcatError::DblcatError;
};

struct MiddleMismatch : DblcatError {
  using DblcatError::DblcatError;
};

struct InconsistentTagging : DblcatError {
  using DblcatError::DblcatError;
};

}  // namespace dblcat
