#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wordentropy {

// Failure categories shared by every module. The CLI maps these onto exit
// codes, so new values need a matching case in the CLI exit-code table.
enum class Errc {
  invalid_argument,
  out_of_range,
  format_error,
  io_error,
  parse_mismatch,
  not_pre_sturmian,
  insufficient_data,
  periodic_suspect,
  numerical_failure,
  invalid_profile,
  invalid_bound,
  degenerate_bound,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Thrown by parse_blocks. `position` is the 0-based index into the word of
// the first letter that disagrees with the block being matched.
class ParseMismatch : public Error {
 public:
  ParseMismatch(std::size_t position, const std::string& what);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace wordentropy
