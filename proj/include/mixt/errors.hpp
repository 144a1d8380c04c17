#pragma once

#include <stdexcept>
#include <string>

namespace mixt {

// Domain errors carry a stable name so the CLI can report it on stderr
// and exit with the documented code.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string name, const std::string& detail)
      : std::runtime_error(detail.empty() ? name : name + ": " + detail),
        name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

#define MIXT_DEFINE_ERROR(Name)                                  \
  class Name : public DomainError {                              \
   public:                                                       \
    explicit Name(const std::string& detail = std::string())     \
        : DomainError(#Name, detail) {}                          \
  };

MIXT_DEFINE_ERROR(NotCross)
MIXT_DEFINE_ERROR(NotDominant)
MIXT_DEFINE_ERROR(NotHook)
MIXT_DEFINE_ERROR(MalformedDiagram)
MIXT_DEFINE_ERROR(DifferentBlock)
MIXT_DEFINE_ERROR(NotInImage)
MIXT_DEFINE_ERROR(NotKostant)
MIXT_DEFINE_ERROR(TooAtypical)
MIXT_DEFINE_ERROR(NotPositive)
MIXT_DEFINE_ERROR(NotMaximalAtypical)
MIXT_DEFINE_ERROR(NotTypical)
MIXT_DEFINE_ERROR(NotRecognizable)

#undef MIXT_DEFINE_ERROR

// Parse failures of the text encodings; CLI exit code 2.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& detail) : std::runtime_error(detail) {}
};

}  // namespace mixt
