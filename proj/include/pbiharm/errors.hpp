#pragma once

#include <stdexcept>
#include <string>

namespace pbiharm {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- configuration / input errors ---
struct SchemaError : Error {
  using Error::Error;
};
struct DiscontinuousWeight : Error {
  using Error::Error;
};
struct NotAdmissible : Error {
  using Error::Error;
};
struct OutOfDomain : Error {
  using Error::Error;
};
struct GridError : Error {
  using Error::Error;
};
struct ZeroDenominator : Error {
  using Error::Error;
};
struct DegenerateWeight : Error {
  using Error::Error;
};
struct InfeasibleStart : Error {
  using Error::Error;
};

// --- solver failures ---
struct Overflow : Error {
  using Error::Error;
};
struct NoConvergence : Error {
  using Error::Error;
};
struct SingularJacobian : Error {
  using Error::Error;
};
struct BracketFailure : Error {
  using Error::Error;
};
struct SubsolveFailure : Error {
  using Error::Error;
};
struct NonAlternating : Error {
  using Error::Error;
};

/// Continuation got stuck: carries the last p that converged.
struct StepUnderflow : Error {
  double lastGoodP;
  StepUnderflow(const std::string& msg, double p) : Error(msg), lastGoodP(p) {}
};

/// Zero count changed along a continuation step; the branch identity is lost.
struct BranchJump : Error {
  double lastGoodP;
  BranchJump(const std::string& msg, double p) : Error(msg), lastGoodP(p) {}
};

}  // namespace pbiharm
