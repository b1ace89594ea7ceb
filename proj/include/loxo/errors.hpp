#pragma once

#include <stdexcept>
#include <string>

namespace loxo {

// Thrown when an iterative numeric routine cannot reach its requested
// tolerance; carries the error estimate it did achieve.
class numeric_error : public std::runtime_error {
 public:
  numeric_error(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}

  double achieved_tolerance() const noexcept { return achieved_; }

 private:
  double achieved_;
};

// Thrown by curve projection when no chart map exists between the pair.
class unsupported_projection : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace loxo
