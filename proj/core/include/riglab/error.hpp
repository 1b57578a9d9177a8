#pragma once

#include <stdexcept>
#include <string>

namespace riglab {

/// Thrown on contract violations: shape mismatches, bad indices,
/// division by zero, mixed field extensions, exceeded size caps.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace riglab
