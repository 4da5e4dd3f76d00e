#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace areaflow {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GridError : public Error {
 public:
  using Error::Error;
};

/// Support function or curvature samples that do not describe a strictly convex curve.
class ConvexityError : public Error {
 public:
  ConvexityError(const std::string& what, std::size_t index)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Removing the first harmonic of the radius of curvature left a non-positive value.
class ProjectionError : public Error {
 public:
  ProjectionError(const std::string& what, double min_radius)
      : Error(what), min_radius_(min_radius) {}
  double min_radius() const noexcept { return min_radius_; }

 private:
  double min_radius_;
};

class GeometryError : public Error {
 public:
  using Error::Error;
};

/// A time step produced a non-positive or non-finite curvature sample.
class PositivityError : public Error {
 public:
  PositivityError(const std::string& what, double time, std::size_t index)
      : Error(what), time_(time), index_(index) {}
  double time() const noexcept { return time_; }
  std::size_t index() const noexcept { return index_; }

 private:
  double time_;
  std::size_t index_;
};

class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, std::string field, int line = -1)
      : Error(what), field_(std::move(field)), line_(line) {}
  const std::string& field() const noexcept { return field_; }
  /// 1-based line in the config text, or -1 when unknown.
  int line() const noexcept { return line_; }

 private:
  std::string field_;
  int line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace areaflow
