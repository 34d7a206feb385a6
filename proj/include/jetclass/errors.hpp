#ifndef JETCLASS_ERRORS_HPP
#define JETCLASS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jetclass {

// The ideal lies outside the rings and families the classifier covers.
struct NotCoveredError : std::runtime_error {
  explicit NotCoveredError(const std::string& msg) : std::runtime_error(msg) {}
};

// The exact direction engine met a variety beyond the supported catalogue
// (lines through the origin, rational plane sections, quadric cones).
struct UnsupportedVarietyError : std::runtime_error {
  explicit UnsupportedVarietyError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace jetclass

#endif
