#pragma once

#include <stdexcept>
#include <string>

namespace pbw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define PBW_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name, what) {}  \
  }

PBW_DEFINE_ERROR(InvalidField);
PBW_DEFINE_ERROR(DivideByZero);
PBW_DEFINE_ERROR(FieldMismatch);
PBW_DEFINE_ERROR(AmbientMismatch);
PBW_DEFINE_ERROR(DimensionMismatch);
PBW_DEFINE_ERROR(NotAGroup);
PBW_DEFINE_ERROR(UnknownPreset);
PBW_DEFINE_ERROR(FieldTooSmall);
PBW_DEFINE_ERROR(CutoffExceeded);
PBW_DEFINE_ERROR(NotInD3);
PBW_DEFINE_ERROR(ParseError);
PBW_DEFINE_ERROR(ValidationError);

#undef PBW_DEFINE_ERROR

}  // namespace pbw
