#include "regconn/error.hpp"

#include <sstream>

namespace regconn {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::GhostVertex: return "GhostVertex";
    case ErrorKind::FullSimplex: return "FullSimplex";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::DegenerateS: return "DegenerateS";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

std::string ghost_message(const std::vector<int>& vertices) {
  std::ostringstream out;
  out << "vertices not contained in any face:";
  for (int v : vertices) out << ' ' << v;
  return out.str();
}

}  // namespace

GhostVertexError::GhostVertexError(std::vector<int> vertices)
    : Error(ErrorKind::GhostVertex, ghost_message(vertices)),
      vertices_(std::move(vertices)) {}

CapExceededError::CapExceededError(int n, int cap)
    : Error(ErrorKind::CapExceeded,
            "enumeration over " + std::to_string(n) +
                " vertices exceeds the cap of " + std::to_string(cap)),
      n_(n),
      cap_(cap) {}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(ErrorKind::ParseError,
            "line " + std::to_string(line) + ": " + message),
      line_(line) {}

}  // namespace regconn
