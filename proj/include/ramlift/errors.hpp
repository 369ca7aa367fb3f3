#pragma once

#include <stdexcept>
#include <string>

namespace ramlift {

/// Base of every error raised by the library. The message names the
/// violated contract so the CLI can print it verbatim.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Exact polynomial division left a remainder.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

class NoRealRoot : public Error {
 public:
  using Error::Error;
};

/// A characteristic polynomial over Z[zeta] did not reduce to rationals.
class ImaginaryResidue : public Error {
 public:
  using Error::Error;
};

/// The entry ring of a matrix has no exact characteristic polynomial path.
class NotExact : public Error {
 public:
  using Error::Error;
};

/// A greedy branch exceeded the mixture's largest root, or a conditional
/// expected polynomial was not real-rooted.
class InterlacingViolation : public Error {
 public:
  using Error::Error;
};

class NumericalDegeneracy : public Error {
 public:
  using Error::Error;
};

class MissingFixtures : public Error {
 public:
  using Error::Error;
};

/// Certificate recomputation disagreed with the stored claims.
class VerificationMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace ramlift
