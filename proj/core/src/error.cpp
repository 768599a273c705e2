#include "fakeweather/error.hpp"

namespace fakeweather {

const char* to_string(ErrorCategory category) noexcept {
  switch (category) {
    case ErrorCategory::InvalidArgument:
      return "invalid argument";
    case ErrorCategory::Format:
      return "format error";
    case ErrorCategory::Io:
      return "i/o error";
  }
  return "error";
}

}  // namespace fakeweather
