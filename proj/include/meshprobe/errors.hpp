#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace meshprobe {

/// Base error. `category()` is a stable machine-readable tag used by the CLI
/// to pick exit codes and error prefixes.
class Error : public std::runtime_error {
 public:
  Error(std::string category, const std::string& message)
      : std::runtime_error(message), category_(std::move(category)) {}

  const std::string& category() const noexcept { return category_; }

 private:
  std::string category_;
};

/// Degenerate geometric input (coincident query points and the like).
class GeometryError : public Error {
 public:
  explicit GeometryError(const std::string& message) : Error("geometry", message) {}
};

/// Invariant or schema violation in user-supplied data.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message) : Error("scenario", message) {}
};

/// Malformed wire frame; offset is the first offending byte position.
class FrameError : public Error {
 public:
  FrameError(std::size_t offset, const std::string& message)
      : Error("frame", message), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// No parameter combination fits the calibration targets; carries residuals.
class CalibrationError : public Error {
 public:
  struct Residual {
    std::string name;
    double attenuation_error_db;
    double snr_error_db;
  };

  CalibrationError(const std::string& message, std::vector<Residual> residuals)
      : Error("calibration", message), residuals_(std::move(residuals)) {}

  const std::vector<Residual>& residuals() const noexcept { return residuals_; }

 private:
  std::vector<Residual> residuals_;
};

/// The mesh never formed a route to the requested destination.
class FormationError : public Error {
 public:
  FormationError(const std::string& message, std::vector<int> reachable)
      : Error("formation", message), reachable_(std::move(reachable)) {}

  /// Node ids reachable from the source.
  const std::vector<int>& reachable() const noexcept { return reachable_; }

 private:
  std::vector<int> reachable_;
};

/// rx preceding tx in a timing sample.
class ClockOrderError : public Error {
 public:
  explicit ClockOrderError(const std::string& message) : Error("clock", message) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error("io", message) {}
};

class ConnectionError : public Error {
 public:
  explicit ConnectionError(const std::string& message) : Error("connection", message) {}
};

}  // namespace meshprobe
