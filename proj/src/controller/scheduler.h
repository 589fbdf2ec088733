#pragma once

#include "base/component.h"
#include "base/request.h"
#include "base/types.h"

namespace memsim {

class IDram;

/// Picks the next request to serve from one queue. Implementations fill each
/// candidate's `command` field (the current prerequisite step) as a side
/// product of ranking; selection itself is pure with respect to DRAM state.
class IScheduler : public Component {
 public:
  virtual void setup(IDram& dram) = 0;
  virtual ReqBuffer::iterator best_request(ReqBuffer& queue, Clk clk) = 0;
};

/// Picks the row-leave behavior after column accesses by choosing the final
/// command that serves demand requests.
class IRowPolicy : public Component {
 public:
  virtual void setup(IDram& dram) = 0;
  virtual int read_command() const = 0;
  virtual int write_command() const = 0;
};

} // namespace memsim
