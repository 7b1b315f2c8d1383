#pragma once

#include <stdexcept>
#include <string>

namespace cvml {

/// Failure categories. The numeric value doubles as the CLI exit code where
/// one is defined (config = 2, data = 3, numeric = 4).
enum class ErrorKind {
  kDimension = 1,
  kConfig = 2,
  kData = 3,
  kNumeric = 4,
  kInput = 5,
  kIo = 6,
  kUsage = 7,
  kUnsupported = 8,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void dim_check(bool ok, const std::string& what) {
  if (!ok) raise(ErrorKind::kDimension, what);
}

}  // namespace cvml
