#pragma once

#include <stdexcept>
#include <string>

namespace braidkit {

// Base class for every domain error raised by the library.  The CLI maps
// these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoCycleError : public Error {
 public:
  using Error::Error;
};

class FractionalPowerError : public Error {
 public:
  FractionalPowerError() : Error(
            "Polynomial with fractional powers.  Remove the centering "
            "option.") {}
};

class CoincidentProjectionError : public Error {
 public:
  CoincidentProjectionError(int p1, int p2)
      : Error("Paths of particles " + std::to_string(p1) + " and " +
              std::to_string(p2) +
              " have a coincident projection.  "
              "Try changing the projection angle."),
        first(p1),
        second(p2) {}
  int first;
  int second;
};

}  // namespace braidkit
