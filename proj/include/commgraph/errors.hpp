#pragma once

#include <stdexcept>
#include <string>

namespace commgraph {

/// Base for every error raised by the library. The CLI maps subclasses to
/// exit codes (see tools/commgraph.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define COMMGRAPH_DEFINE_ERROR(Name)   \
  class Name : public Error {          \
   public:                             \
    using Error::Error;                \
  }

COMMGRAPH_DEFINE_ERROR(OrderCapExceeded);
COMMGRAPH_DEFINE_ERROR(InvalidGenerator);
COMMGRAPH_DEFINE_ERROR(InvalidElement);
COMMGRAPH_DEFINE_ERROR(ParentMismatch);
COMMGRAPH_DEFINE_ERROR(NotContained);
COMMGRAPH_DEFINE_ERROR(NotNormal);
COMMGRAPH_DEFINE_ERROR(NotNilpotent);
COMMGRAPH_DEFINE_ERROR(NotASubgroup);
COMMGRAPH_DEFINE_ERROR(LatticeCapExceeded);
COMMGRAPH_DEFINE_ERROR(OracleScaleExceeded);
COMMGRAPH_DEFINE_ERROR(NotFound);
COMMGRAPH_DEFINE_ERROR(NotConnected);
COMMGRAPH_DEFINE_ERROR(InvalidSpec);

#undef COMMGRAPH_DEFINE_ERROR

/// Malformed group-spec or cache document; carries the byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " (at byte " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace commgraph
