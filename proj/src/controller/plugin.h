#pragma once

#include "base/component.h"
#include "base/request.h"
#include "base/types.h"

namespace memsim {

class IController;
class IDram;

/// The controller-side extension contract. Plugins observe the issued
/// command stream and react exclusively by injecting priority requests;
/// they never touch controller internals. Hook order follows config order.
///
/// This hook set (on_tick, on_command_issued, inject via the controller) is
/// the compatibility contract for mitigation plugins; see the README for the
/// mapping used by externally published mitigation mechanisms.
class IControllerPlugin : public Component {
 public:
  /// Wires the plugin to its owning controller. Name resolution against the
  /// device spec happens here, once.
  virtual void setup(IController& ctrl, IDram& dram) = 0;

  /// Called every controller cycle, before scheduling.
  virtual void on_tick(Clk) {}

  /// Called after a command is issued on this channel. `req` is the request
  /// the command serves (its type distinguishes demand traffic from
  /// maintenance), `cmd` the concrete command, possibly a prerequisite step
  /// rather than the request's final command.
  virtual void on_command_issued(const Request& req, int cmd, Clk clk) { (void)req; (void)cmd; (void)clk; }
};

} // namespace memsim
