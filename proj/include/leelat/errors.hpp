#ifndef LEELAT_ERRORS_HPP
#define LEELAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leelat {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Dimension mismatch between operands.
class ShapeError : public Error {
  public:
    using Error::Error;
};

/// Modulus is invalid (q < 2) or unsupported for the operation (q not prime).
class ModulusError : public Error {
  public:
    using Error::Error;
};

/// Generator matrix does not have full column rank over Z_q.
class RankError : public Error {
  public:
    using Error::Error;
};

/// Exhaustive procedure would exceed the enumeration capacity guard.
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// Malformed input file or vector string.
class ParseError : public Error {
  public:
    using Error::Error;
};

}  // namespace leelat

#endif
