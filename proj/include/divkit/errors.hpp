#pragma once

#include <stdexcept>
#include <string>

namespace divkit {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator failed its validity certificate or could not be evaluated.
class GeneratorError : public Error {
 public:
  using Error::Error;
};

/// A parameter lies outside the domain of an operation (negative zeta, sigma = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Support mismatch, e.g. g > 0 where f = 0 in a KL term.
class SupportError : public Error {
 public:
  using Error::Error;
};

/// The model bracket <f^{1+gamma}> (or xi of it) vanished.
class DegenerateModelError : public Error {
 public:
  using Error::Error;
};

/// Densities with incompatible representations or grids.
class RepresentationError : public Error {
 public:
  using Error::Error;
};

/// Malformed or unreadable input file.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// The requested score is not a proper composite scoring rule.
class ProprietyError : public Error {
 public:
  using Error::Error;
};

}  // namespace divkit
