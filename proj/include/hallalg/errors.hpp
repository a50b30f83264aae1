#pragma once

#include <stdexcept>
#include <string>

namespace hallalg {

// An enumeration would visit more than the configured number of elements.
class EnumerationTooLarge : public std::runtime_error {
 public:
  explicit EnumerationTooLarge(const std::string& what) : std::runtime_error(what) {}
};

// Point counts at some prime did not fit the interpolated polynomial.
class InterpolationFailure : public std::runtime_error {
 public:
  explicit InterpolationFailure(const std::string& what) : std::runtime_error(what) {}
};

// An object uses a shift outside the configured window [-w, w].
class WindowExceeded : public std::out_of_range {
 public:
  explicit WindowExceeded(const std::string& what) : std::out_of_range(what) {}
};

// Two independent computations of the same quantity disagreed.
class InternalIdentityMismatch : public std::logic_error {
 public:
  explicit InternalIdentityMismatch(const std::string& what) : std::logic_error(what) {}
};

class NotTypeA : public std::invalid_argument {
 public:
  explicit NotTypeA(const std::string& what) : std::invalid_argument(what) {}
};

class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace hallalg
