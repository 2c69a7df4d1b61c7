#pragma once

#include <stdexcept>
#include <string>

namespace minbu {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MINBU_ERROR(Name)                      \
  class Name : public Error {                  \
   public:                                     \
    explicit Name(const std::string& what)     \
        : Error(std::string(#Name ": ") + what) {} \
  };

MINBU_ERROR(ZeroDivisor)
MINBU_ERROR(ValuationError)
MINBU_ERROR(CompositionError)
MINBU_ERROR(ReversionError)
MINBU_ERROR(DomainError)
MINBU_ERROR(VerificationFailure)
MINBU_ERROR(SingularityError)
MINBU_ERROR(QuadratureError)
MINBU_ERROR(ConvergenceError)
MINBU_ERROR(LabelError)
MINBU_ERROR(MapError)
MINBU_ERROR(SizeError)
MINBU_ERROR(ResourceError)

#undef MINBU_ERROR

}  // namespace minbu
