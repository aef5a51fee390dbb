#include "harmlog/error.hpp"

namespace harmlog {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::negative_input: return "negative_input";
    case ErrorKind::zero_or_infinite: return "zero_or_infinite";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::integrity: return "integrity";
    case ErrorKind::invalid_grid: return "invalid_grid";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

}  // namespace harmlog
