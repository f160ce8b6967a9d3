#pragma once

#include <stdexcept>
#include <string>

namespace sigcolor {

/// Structural problems with a graph or with a vertex/edge reference into it.
class GraphError : public std::invalid_argument {
 public:
  enum class Kind {
    kLoop,
    kDuplicateEdge,
    kVertexOutOfRange,
    kUnknownVertex,
    kUnknownEdge,
    kUnderlyingMismatch,
    kWrongGraph,
  };

  GraphError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// An exact search was asked to run past its desk-scale limit.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold for its input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The coloring engine reached a configuration its case analysis does not
/// cover, or a claimed intermediate state failed to hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sigcolor
