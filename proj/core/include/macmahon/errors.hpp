#ifndef MACMAHON_ERRORS_HPP
#define MACMAHON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace macmahon {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// series-core
class NonUnitConstantTerm : public Error {
public:
  using Error::Error;
};
class ExponentOutOfOrder : public Error {
public:
  using Error::Error;
};

// q-toolkit
class DivisionNotExact : public Error {
public:
  using Error::Error;
};

// precondition violations on indices (negative k, zero step, n <= 0 for sigma, ...)
class DomainError : public Error {
public:
  using Error::Error;
};

// macmahon-families
class InvalidSpec : public Error {
public:
  using Error::Error;
};

// identity-suite
class UnknownIdentity : public Error {
public:
  using Error::Error;
};
class MissingParam : public Error {
public:
  using Error::Error;
};
class UnexpectedParam : public Error {
public:
  using Error::Error;
};

} // namespace macmahon

#endif // MACMAHON_ERRORS_HPP
