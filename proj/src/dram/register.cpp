#include "base/registry.h"
#include "dram/device.h"
#include "dram/standards.h"

namespace memsim {

void register_dram(Registry& r) {
  r.add<IDram>("DRAM", "DDR4", [](ParamReader& p, BuildContext&) {
    return std::make_shared<StandardDram>(build_ddr4_spec(p));
  });
  r.add<IDram>("DRAM", "DDR5", [](ParamReader& p, BuildContext&) {
    return std::make_shared<StandardDram>(build_ddr5_spec(p));
  });
}

} // namespace memsim
