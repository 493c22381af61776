#pragma once

#include <stdexcept>
#include <string>

namespace csslm {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input files (JSONL, checkpoints, config). Carries a prebuilt
// message that includes the file and line where applicable.
struct ParseError : Error {
  using Error::Error;
};

// Invalid configuration or arguments (bad counts, inconsistent dimensions,
// unknown labels, ...). Maps to CLI exit code 1.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace csslm
