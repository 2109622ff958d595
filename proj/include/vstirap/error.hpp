#pragma once

#include <stdexcept>
#include <string>

namespace vstirap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  /// Short machine-readable category, e.g. "config" or "integration".
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Both couplings vanish, so the mixing angle has no defined velocity.
class UndefinedAngleError : public Error {
 public:
  explicit UndefinedAngleError(const std::string& what) : Error("undefined-angle", what) {}
};

/// |dTheta/dt| vanishes identically for the requested parameters.
class NoRidgeError : public Error {
 public:
  explicit NoRidgeError(const std::string& what) : Error("no-ridge", what) {}
};

/// The adaptive integrator could not make progress.
class IntegrationError : public Error {
 public:
  IntegrationError(const std::string& what, double last_good_time)
      : Error("integration", what), last_good_time_(last_good_time) {}

  double last_good_time() const noexcept { return last_good_time_; }

 private:
  double last_good_time_;
};

/// Invalid configuration document or override.
class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& what)
      : Error("config", key.empty() ? what : key + ": " + what), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

}  // namespace vstirap
