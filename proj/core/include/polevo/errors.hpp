#pragma once

#include <stdexcept>
#include <string>

namespace polevo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad or inconsistent experiment configuration (offending key in message).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Filesystem failures: unreadable input, unwritable output.
class IoError : public Error {
 public:
  using Error::Error;
};

// |M_c + sum of effective pole masses| fell below 1e-9: physically
// pathological constants. The running trial is aborted as failed.
class DegenerateDenominator : public Error {
 public:
  using Error::Error;
};

// Statistical test input with no usable variation.
class DegenerateSample : public Error {
 public:
  using Error::Error;
};

// Lineage chain shorter than the requested comparison interval.
class LineageTooShort : public Error {
 public:
  using Error::Error;
};

// Unparseable record in a lineage/stats/matrix file (line number in message).
class MalformedRecord : public Error {
 public:
  using Error::Error;
};

}  // namespace polevo
