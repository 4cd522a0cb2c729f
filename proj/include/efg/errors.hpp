#pragma once

#include <stdexcept>
#include <string>

namespace efg {

/// Base of every error raised by the library. `kind()` is the stable
/// machine-readable name used in reports and CLI diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define EFG_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  }

EFG_DEFINE_ERROR(ParseError);
EFG_DEFINE_ERROR(ZeroConstantTerm);
EFG_DEFINE_ERROR(NonzeroInnerConstant);
EFG_DEFINE_ERROR(NotReversible);
EFG_DEFINE_ERROR(SingularCurve);
EFG_DEFINE_ERROR(NonIntegralModel);
EFG_DEFINE_ERROR(SmallPrimeUnsupported);
EFG_DEFINE_ERROR(BadReduction);
EFG_DEFINE_ERROR(GoodReduction);
EFG_DEFINE_ERROR(IncompleteTable);
EFG_DEFINE_ERROR(TruncationTooSmall);

#undef EFG_DEFINE_ERROR

}  // namespace efg
