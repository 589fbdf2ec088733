#pragma once

#include <string>

#include "base/stats.h"

namespace memsim {

/// Base of every simulated component built through the registry.
class Component {
 public:
  virtual ~Component() = default;

  /// Called once after the whole simulation graph is wired and before the
  /// first tick.
  virtual void setup_done() {}

  /// Called once after the last tick (flush files, close sinks).
  virtual void finalize() {}

  virtual void report_stats(StatsSheet&) const {}

  const std::string& impl_name() const { return m_impl_name; }
  void set_impl_name(std::string name) { m_impl_name = std::move(name); }

 private:
  std::string m_impl_name;
};

} // namespace memsim
