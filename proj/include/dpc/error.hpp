#pragma once

#include <stdexcept>
#include <string>

namespace dpc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller passed arguments outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A requested series/table length exceeds the configured maximum.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Two truncated series with different truncation orders were combined.
class TruncationMismatch : public Error {
 public:
  using Error::Error;
};

/// The brute-force enumeration oracle was asked for n above its cap.
class OracleCapExceeded : public Error {
 public:
  using Error::Error;
};

/// An iterative evaluation (series, quadrature) failed to converge.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// A decision changed between working precision p and 2p.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// A sample point lies outside the region where a bound is claimed.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

/// A threshold search ran past its scan limit without a stable crossover.
class ScanLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace dpc
