#pragma once

#include <stdexcept>
#include <string>

namespace implab {

// Root of the library's error taxonomy. Everything thrown on purpose derives
// from Error; anything else escaping is a defect.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or out-of-bounds input (sizes, indices, unparsable files).
struct InputError : Error {
  using Error::Error;
};

// A table rule that is not total or not well-formed.
struct InvalidTableError : Error {
  using Error::Error;
};

// An operation that is undefined for the given rule kind (e.g. restricting a
// table rule to a subset of alternatives).
struct UnsupportedRuleError : Error {
  using Error::Error;
};

// A documented precondition did not hold; the message carries the reason and,
// where available, a witness.
struct PreconditionFailedError : Error {
  using Error::Error;
};

// An exhaustive check expected to succeed under the stated axioms found a
// counterexample. Fields give the offending pair; the message is printable.
struct AxiomViolationError : Error {
  int a = -1;
  int b = -1;
  AxiomViolationError(const std::string& msg, int a_, int b_)
      : Error(msg), a(a_), b(b_) {}
};

// A move that the game state does not admit.
struct IllegalMoveError : Error {
  using Error::Error;
};

// A map evaluation left the simplex beyond tolerance.
struct MapRangeError : Error {
  using Error::Error;
};

// "Cannot happen" states. Reaching one is a bug, never a user error.
struct InternalInvariantBroken : Error {
  using Error::Error;
};

}  // namespace implab
