#pragma once

#include <stdexcept>
#include <string>

namespace fakeweather {

// Every failure raised by the library derives from Error. The category is
// what the command-line tool maps onto its exit codes.
enum class ErrorCategory {
  InvalidArgument,  // caller violated a precondition
  Format,           // malformed or inconsistent input data
  Io,               // filesystem failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCategory::InvalidArgument, what) {}
};

class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what)
      : Error(ErrorCategory::Format, what) {}
};

// Two rasters (or a raster and a mask) disagree on size.
class DimensionMismatch : public FormatError {
 public:
  using FormatError::FormatError;
};

class MalformedHeader : public FormatError {
 public:
  using FormatError::FormatError;
};

class TruncatedData : public FormatError {
 public:
  using FormatError::FormatError;
};

// Well-formed input in a variant we do not handle (16-bit PPM, paletted PNG, ...).
class UnsupportedFormat : public FormatError {
 public:
  using FormatError::FormatError;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCategory::Io, what) {}
};

const char* to_string(ErrorCategory category) noexcept;

}  // namespace fakeweather
