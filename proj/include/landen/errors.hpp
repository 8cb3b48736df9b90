#pragma once

#include <stdexcept>
#include <string>

namespace landen {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error { using Error::Error; };
class PoleError : public Error { using Error::Error; };
class ParityError : public Error { using Error::Error; };
class UnsupportedOrder : public Error { using Error::Error; };
class ApplicabilityError : public Error { using Error::Error; };
class DenominatorError : public Error { using Error::Error; };
class NonConservation : public Error { using Error::Error; };
class RangeError : public Error { using Error::Error; };
class BranchError : public Error { using Error::Error; };

}  // namespace landen
