#pragma once

#include <memory>
#include <vector>

#include "base/component.h"
#include "base/request.h"
#include "base/types.h"

namespace memsim {

class IDram;

/// Per-channel memory controller: request queues, scheduler, row policy,
/// refresh manager, and the plugin host. Contains no mitigation-specific
/// code; mitigations act through the plugin hooks alone.
class IController : public Component {
 public:
  /// Demand path. False when the target queue is full (caller retries next
  /// cycle).
  virtual bool enqueue(Request&& req, Clk clk) = 0;

  /// Priority path for maintenance and preventive work (refresh manager and
  /// plugins). The priority queue is drained ahead of demand traffic.
  virtual bool inject(Request&& req) = 0;

  /// Advances one memory cycle; appends completed requests to `out`.
  virtual void tick(Clk clk, std::vector<Request>& out) = 0;

  virtual IDram& dram() = 0;
  virtual int channel_id() const = 0;

  /// Arrival cycle of the oldest request still in flight, or -1 when idle.
  /// Drives the starvation watchdog.
  virtual Clk oldest_in_flight() const = 0;

  virtual std::size_t queued_requests() const = 0;
};

} // namespace memsim
