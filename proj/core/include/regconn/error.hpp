#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace regconn {

enum class ErrorKind {
  EmptyInput,
  GhostVertex,
  FullSimplex,
  CapExceeded,
  DegenerateS,
  DomainError,
  BadParameters,
  TooSmall,
  HypothesisUnmet,
  ParseError,
  InvalidField,
  Internal,
};

const char* to_string(ErrorKind kind);

// Base of every error the library throws. kind() lets callers (the CLI in
// particular) map failures onto exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class GhostVertexError : public Error {
 public:
  // `vertices` are 1-based labels.
  explicit GhostVertexError(std::vector<int> vertices);

  const std::vector<int>& vertices() const noexcept { return vertices_; }

 private:
  std::vector<int> vertices_;
};

class CapExceededError : public Error {
 public:
  CapExceededError(int n, int cap);

  int n() const noexcept { return n_; }
  int cap() const noexcept { return cap_; }

 private:
  int n_;
  int cap_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace regconn
