#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trispectra {

enum class ErrorKind {
  EmptyGraph,
  SelfLoop,
  DuplicateEdge,
  NodeOutOfRange,
  Disconnected,
  InvalidQ,
  InvalidArgument,
  Overflow,
  SameNode,
  InvalidNodeRef,
  ParseError,
  FileNotFound,
  ConvergenceFailure,
  SingularSystem,
};

std::string_view to_string(ErrorKind kind);

/// True for kinds that signal numerical trouble rather than bad input.
bool is_numerical(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace trispectra
