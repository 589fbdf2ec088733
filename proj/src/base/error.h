#pragma once

#include <stdexcept>
#include <string>

#include <fmt/core.h>

namespace memsim {

/// Base class for all configuration-time failures. Carries the config path
/// of the offending node when one is known.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::string msg) : std::runtime_error(std::move(msg)) {}

  template <typename... Args>
  explicit ConfigError(fmt::format_string<Args...> f, Args&&... args)
      : std::runtime_error(fmt::format(f, std::forward<Args>(args)...)) {}
};

class UnknownInterface : public ConfigError {
 public:
  explicit UnknownInterface(const std::string& iface)
      : ConfigError("unknown interface '{}'", iface) {}
};

class UnknownImplementation : public ConfigError {
 public:
  UnknownImplementation(const std::string& iface, const std::string& impl)
      : ConfigError("unknown implementation '{}' for interface '{}'", impl, iface) {}
};

class DuplicateImplementation : public ConfigError {
 public:
  DuplicateImplementation(const std::string& iface, const std::string& impl)
      : ConfigError("implementation '{}' registered twice under interface '{}'", impl, iface) {}
};

class MissingComponent : public ConfigError {
 public:
  explicit MissingComponent(const std::string& slot, const std::string& path = "")
      : ConfigError("missing component node '{}'{}", slot,
                    path.empty() ? std::string{} : " at " + path) {}
};

class BadParameter : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// Resolution of a level/command/state/timing name that the device
/// specification does not define. Signals an incompatible component.
class UnknownName : public ConfigError {
 public:
  UnknownName(const std::string& what, const std::string& name)
      : ConfigError("unknown {} name '{}'", what, name) {}
};

class ParseError : public std::runtime_error {
 public:
  template <typename... Args>
  explicit ParseError(fmt::format_string<Args...> f, Args&&... args)
      : std::runtime_error(fmt::format(f, std::forward<Args>(args)...)) {}
};

/// A command was issued that its own device model considers not ready.
/// Must be unreachable from the controller; indicates a scheduling bug.
class ProtocolViolation : public std::logic_error {
 public:
  template <typename... Args>
  explicit ProtocolViolation(fmt::format_string<Args...> f, Args&&... args)
      : std::logic_error(fmt::format(f, std::forward<Args>(args)...)) {}
};

/// The prerequisite decode chain cannot reach the requested command.
class NoPathToCommand : public std::logic_error {
 public:
  explicit NoPathToCommand(const std::string& cmd)
      : std::logic_error("prerequisite chain cannot reach command '" + cmd + "'") {}
};

/// An accepted request exceeded the starvation bound.
class WatchdogTimeout : public std::runtime_error {
 public:
  template <typename... Args>
  explicit WatchdogTimeout(fmt::format_string<Args...> f, Args&&... args)
      : std::runtime_error(fmt::format(f, std::forward<Args>(args)...)) {}
};

} // namespace memsim
