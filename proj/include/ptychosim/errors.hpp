#pragma once

#include <stdexcept>
#include <string>

namespace ptychosim {

/// Probe feature size would round to zero pixels on the requested grid.
class resolution_error : public std::invalid_argument {
 public:
  explicit resolution_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Optical parameters cannot be represented on the requested grid
/// (e.g. a lens phase whose local frequency exceeds the grid Nyquist).
class sampling_error : public std::invalid_argument {
 public:
  explicit sampling_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Input is structurally valid but numerically degenerate
/// (all-zero field, flat profile, ...).
class degenerate_error : public std::domain_error {
 public:
  explicit degenerate_error(const std::string& what) : std::domain_error(what) {}
};

/// Malformed or unreadable file content.
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid experiment or probe configuration; message carries the field path.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ptychosim
