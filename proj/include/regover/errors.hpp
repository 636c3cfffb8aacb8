#pragma once

#include <stdexcept>
#include <string>

namespace regover {

/* Base class for every error raised by the library. */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// series_inv requires a constant term of +1 or -1
class NonUnitConstantTerm : public Error {
 public:
  using Error::Error;
};

// extract_ap with offset beyond the truncation order
class EmptyExtraction : public Error {
 public:
  using Error::Error;
};

class UnknownIdentity : public Error {
 public:
  using Error::Error;
};

// partition class parameters violate the applicability hypotheses
class InapplicableClass : public Error {
 public:
  using Error::Error;
};

// exhaustive enumeration requested beyond the supported 64-bit range
class EnumerationRange : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class BadPrime : public Error {
 public:
  using Error::Error;
};

class InadmissibleR : public Error {
 public:
  using Error::Error;
};

class TruncationTooSmall : public Error {
 public:
  using Error::Error;
};

// neither N nor N/2 square-free: the shipped double-coset family does not
// cover the full modular group and the certificate cannot be evaluated
class CosetLemmaInapplicable : public Error {
 public:
  using Error::Error;
};

// malformed certificate input (eta spec does not match the stated family, ...)
class CertificateError : public Error {
 public:
  using Error::Error;
};

}  // namespace regover
