#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace lll {

// Malformed input document. line is 1-based when known, 0 otherwise.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Structurally valid input that violates a graph invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input graph is not chordal. The witness (v, u, w) names a vertex v with two
// neighbors u, w later in the elimination order that are not adjacent.
class NotChordalError : public std::runtime_error {
 public:
  explicit NotChordalError(std::array<std::string, 3> witness)
      : std::runtime_error("graph is not chordal: vertex " + witness[0] +
                           " has non-adjacent later neighbors " + witness[1] +
                           " and " + witness[2]),
        witness_(std::move(witness)) {}
  const std::array<std::string, 3>& witness() const { return witness_; }

 private:
  std::array<std::string, 3> witness_;
};

// The brute-force oracle was asked to enumerate a graph above its size cap.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lll
