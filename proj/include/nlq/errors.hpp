#pragma once

#include <stdexcept>
#include <string>

namespace nlq {

// Base class for everything thrown by the library.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: bad config files, bad grid files, bad CLI arguments.
class config_error : public error {
 public:
  using error::error;
};

// Physically inconsistent but well-formed input: broken frequency relations,
// off-lattice wavevectors, non-positive-definite dielectric samples, ...
class validation_error : public error {
 public:
  using error::error;
};

// A numerical procedure failed to meet its own tolerance.
class numeric_error : public error {
 public:
  using error::error;
};

class invalid_truncation_error : public validation_error {
 public:
  using validation_error::validation_error;
};

class dimension_error : public validation_error {
 public:
  using validation_error::validation_error;
};

class index_error : public validation_error {
 public:
  using validation_error::validation_error;
};

// Frequency (or other key) not present in a lookup table.
class lookup_error : public validation_error {
 public:
  using validation_error::validation_error;
};

class singular_dielectric_error : public validation_error {
 public:
  using validation_error::validation_error;
};

class invalid_geometry_error : public validation_error {
 public:
  using validation_error::validation_error;
};

// Process wiring violates its frequency relation, or modes and susceptibility
// tensors disagree about the process frequencies.
class process_mismatch_error : public validation_error {
 public:
  using validation_error::validation_error;
};

// Dynamically unstable quadratic form: complex or zero normal-mode frequency.
class unstable_medium_error : public validation_error {
 public:
  using validation_error::validation_error;
};

class grid_format_error : public config_error {
 public:
  using config_error::config_error;
};

}  // namespace nlq
