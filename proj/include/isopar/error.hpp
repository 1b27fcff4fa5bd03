#ifndef ISOPAR_ERROR_HPP
#define ISOPAR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace isopar {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit (variable counts, matrix sizes, index ranges).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic outside the domain of an operation (division by zero, wrong degree).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A coefficient stratum of the Ozeki-Takeuchi expansion, or a block pattern
/// read from it, did not have the required form.
class ExtractionError : public Error {
 public:
  ExtractionError(std::string stratum, const std::string& what)
      : Error(stratum + ": " + what), stratum_(std::move(stratum)) {}
  const std::string& stratum() const { return stratum_; }

 private:
  std::string stratum_;
};

}  // namespace isopar

#endif  // ISOPAR_ERROR_HPP
