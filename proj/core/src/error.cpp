#include "wordentropy/error.hpp"

namespace wordentropy {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument:
      return "invalid-argument";
    case Errc::out_of_range:
      return "out-of-range";
    case Errc::format_error:
      return "format-error";
    case Errc::io_error:
      return "io-error";
    case Errc::parse_mismatch:
      return "parse-mismatch";
    case Errc::not_pre_sturmian:
      return "not-pre-sturmian";
    case Errc::insufficient_data:
      return "insufficient-data";
    case Errc::periodic_suspect:
      return "periodic-suspect";
    case Errc::numerical_failure:
      return "numerical-failure";
    case Errc::invalid_profile:
      return "invalid-profile";
    case Errc::invalid_bound:
      return "invalid-bound";
    case Errc::degenerate_bound:
      return "degenerate-bound";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

ParseMismatch::ParseMismatch(std::size_t position, const std::string& what)
    : Error(Errc::parse_mismatch, what), position_(position) {}

}  // namespace wordentropy
