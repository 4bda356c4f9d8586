#pragma once

#include <stdexcept>
#include <string>

namespace schub {

/// Raised when an internal consistency check fails (unit ideal, dimension
/// mismatch, iteration cap). These conditions indicate a bug, not bad input.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace schub
