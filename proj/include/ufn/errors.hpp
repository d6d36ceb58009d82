#pragma once

#include <stdexcept>
#include <string>

namespace ufn {

// Ill-formed input: bad JSON, unknown generator, dimension mismatch, ...
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or search would exceed its configured resource bound.
struct guard_error : std::runtime_error {
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ufn
