#pragma once

#include <stdexcept>
#include <string>

namespace hds {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error {
  using Error::Error;
};

struct UnsupportedField : Error {
  using Error::Error;
};

struct NotCoprime : Error {
  using Error::Error;
};

struct NotUnimodular : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  using Error::Error;
};

struct NonTermination : Error {
  using Error::Error;
};

struct SignCondition : Error {
  using Error::Error;
};

struct NotPrime : Error {
  using Error::Error;
};

struct NotTotallyPositive : Error {
  using Error::Error;
};

struct NotQuasiElliptic : Error {
  using Error::Error;
};

struct NotClassifiable : Error {
  using Error::Error;
};

struct NotElliptic : Error {
  using Error::Error;
};

struct NotStable : Error {
  using Error::Error;
};

}  // namespace hds
