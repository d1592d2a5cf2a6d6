#pragma once

#include <stdexcept>
#include <string>

namespace ksa {

// Base of every error raised by the library. The CLI maps any Error to
// exit status 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed graph files, input strings, or arguments violating a type invariant.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A brute-force or exact search refused to run because the instance is too large.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// gamma(H_r) > k for every r up to the round cap.
class NotDominatedWithinCap : public Error {
 public:
  using Error::Error;
};

// An algorithm decided a value outside {0..k}.
class AlgorithmRangeError : public Error {
 public:
  using Error::Error;
};

// No node escapes the influence of the vertex's coordinate nodes; the budget
// was not below the round bound.
class AssignmentImpossible : public Error {
 public:
  using Error::Error;
};

// A coloring passed to the panchromatic search was not Sperner.
class NoPanchromaticCell : public Error {
 public:
  using Error::Error;
};

class BudgetNotBelowBound : public Error {
 public:
  using Error::Error;
};

// Re-simulation of a panchromatic simplex did not yield k+1 distinct outputs.
// This can only happen if the indistinguishability argument is broken in code.
class LemmaFalsified : public Error {
 public:
  using Error::Error;
};

}  // namespace ksa
