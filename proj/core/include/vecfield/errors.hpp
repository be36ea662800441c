#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vfc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text contained a character outside the bracketing alphabet.
class UnknownCharacter : public Error {
 public:
  explicit UnknownCharacter(std::size_t position)
      : Error("unknown character at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The string is not a valid bracketing. `reason()` names the first violated
/// condition.
class NotValid : public Error {
 public:
  enum class Reason { Unbalanced, Crossing, OddInterior, Other };

  NotValid(Reason reason, std::size_t position, const std::string& what)
      : Error(what), reason_(reason), position_(position) {}

  Reason reason() const noexcept { return reason_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Reason reason_;
  std::size_t position_;
};

class OddLength : public Error {
 public:
  OddLength() : Error("diagram requires an even number of slots") {}
};

class EmptyDiagram : public Error {
 public:
  EmptyDiagram() : Error("diagram requires at least two slots") {}
};

/// A BoardDiagram violated one of its structural invariants.
class MalformedDiagram : public Error {
 public:
  using Error::Error;
};

/// Exact division left a remainder. Always an implementation bug.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

class NegativeResult : public Error {
 public:
  using Error::Error;
};

class NotADivisor : public Error {
 public:
  using Error::Error;
};

/// Oracle asked to enumerate beyond its configured size cap.
class CapExceeded : public Error {
 public:
  CapExceeded(unsigned n, unsigned cap)
      : Error("n = " + std::to_string(n) + " exceeds oracle cap " + std::to_string(cap) +
              " (set VECFIELD_ORACLE_CAP to override)"),
        n_(n),
        cap_(cap) {}
  unsigned n() const noexcept { return n_; }
  unsigned cap() const noexcept { return cap_; }

 private:
  unsigned n_;
  unsigned cap_;
};

/// reroot_from_half_edge on a tree without any full edge.
class NoEdgeAtVertexOrBeyond : public Error {
 public:
  NoEdgeAtVertexOrBeyond() : Error("tree has no full edge to root at") {}
};

/// An incidence reference does not name a half-edge of the tree.
class BadIncidence : public Error {
 public:
  using Error::Error;
};

}  // namespace vfc
