#pragma once

#include <stdexcept>

namespace fockfringe {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument values (non-positive frequencies, malformed patterns, ...).
class parameter_error : public error {
public:
  using error::error;
};

/// Photon number beyond the supported cap.
class capacity_error : public error {
public:
  using error::error;
};

/// Operation applied to a state that is not in the required form.
class precondition_error : public error {
public:
  using error::error;
};

/// Malformed or insufficient input data (CSV rows, degenerate fit designs).
class data_error : public error {
public:
  using error::error;
};

}  // namespace fockfringe
