#pragma once

#include "base/component.h"
#include "base/types.h"

namespace memsim {

class IController;
class IDram;

/// Periodic maintenance injection. Ticked by the controller at the start of
/// every cycle; injects maintenance requests through the controller's
/// priority path.
class IRefreshManager : public Component {
 public:
  virtual void setup(IController& ctrl, IDram& dram) = 0;
  virtual void tick(Clk clk) = 0;
};

} // namespace memsim
