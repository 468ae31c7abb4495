#include "trispectra/error.hpp"

namespace trispectra {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::NodeOutOfRange: return "NodeOutOfRange";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::InvalidQ: return "InvalidQ";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::SameNode: return "SameNode";
    case ErrorKind::InvalidNodeRef: return "InvalidNodeRef";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::FileNotFound: return "FileNotFound";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::SingularSystem: return "SingularSystem";
  }
  return "Unknown";
}

bool is_numerical(ErrorKind kind) {
  return kind == ErrorKind::ConvergenceFailure || kind == ErrorKind::SingularSystem;
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace trispectra
