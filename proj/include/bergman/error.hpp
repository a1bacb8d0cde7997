#pragma once

#include <stdexcept>
#include <string>

namespace bergman {

enum class ErrorCode {
  InvalidArgument = 1,
  Domain = 2,
  Integration = 3,
  Parse = 4,
  UnknownCheck = 5,
  Internal = 6,
};

// Every failure raised by the library carries one of the codes above; the C
// API maps them one-to-one onto bk_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorCode::Parse, what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bergman
