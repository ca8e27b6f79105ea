#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wavelab {

enum class ErrorKind {
  InvalidArgument,
  GridMismatch,
  NonzeroMean,
  SingularSymbol,
  Blowup,
  ZeroDenominator,
  TimeMisalignment,
  ConfigInvalid,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Base of every error raised by the library. `kind()` is the machine-readable
/// tag that the CLI writes into its error record.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorKind::InvalidArgument, what) {}
};

/// A field was built from NaN or infinite samples.
class NonFiniteValue : public InvalidArgument {
 public:
  explicit NonFiniteValue(const std::string& what) : InvalidArgument(what) {}
};

class GridMismatch : public Error {
 public:
  explicit GridMismatch(const std::string& what) : Error(ErrorKind::GridMismatch, what) {}
};

/// Raised when a field that must have zero x-mean on every slice does not.
class NonzeroMean : public Error {
 public:
  NonzeroMean(std::size_t slice, double mean, double tolerance);
  std::size_t slice() const noexcept { return slice_; }

 private:
  std::size_t slice_;
};

class SingularSymbol : public Error {
 public:
  explicit SingularSymbol(const std::string& what) : Error(ErrorKind::SingularSymbol, what) {}
};

/// Non-finite state detected during time integration.
class Blowup : public Error {
 public:
  Blowup(std::size_t step, double time);
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

class ZeroDenominator : public Error {
 public:
  explicit ZeroDenominator(const std::string& what) : Error(ErrorKind::ZeroDenominator, what) {}
};

class TimeMisalignment : public Error {
 public:
  explicit TimeMisalignment(const std::string& what) : Error(ErrorKind::TimeMisalignment, what) {}
};

/// Configuration validation failure. `field()` names the offending key.
class ConfigInvalid : public Error {
 public:
  ConfigInvalid(std::string field, const std::string& what)
      : Error(ErrorKind::ConfigInvalid, field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

}  // namespace wavelab
