#pragma once

#include <stdexcept>
#include <string>

namespace pcfpair {

// Input outside a model's validity range (wavelength, FD step, implied idler).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// No guided fundamental-mode root found.
class ModeCutoffError : public std::runtime_error {
 public:
  explicit ModeCutoffError(const std::string& msg) : std::runtime_error(msg) {}
};

// Root bracket does not straddle a sign change.
class BracketError : public std::runtime_error {
 public:
  explicit BracketError(const std::string& msg) : std::runtime_error(msg) {}
};

// Pump on the wrong side of the zero-dispersion wavelength.
class RegimeError : public std::runtime_error {
 public:
  explicit RegimeError(const std::string& msg) : std::runtime_error(msg) {}
};

class NoPhaseMatchError : public std::runtime_error {
 public:
  explicit NoPhaseMatchError(const std::string& msg) : std::runtime_error(msg) {}
};

// Count record with no coincidence signal above accidentals.
class DegenerateRecordError : public std::runtime_error {
 public:
  explicit DegenerateRecordError(const std::string& msg) : std::runtime_error(msg) {}
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pcfpair
