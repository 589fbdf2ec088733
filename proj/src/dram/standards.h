#pragma once

#include <map>
#include <string>
#include <vector>

#include "base/config.h"
#include "dram/spec.h"

namespace memsim {

/// Reference organization for one part number: per-level fanouts plus the
/// density label and data-pin width used for sanity echoing. Shipped values
/// describe common parts and are freely overridable from config.
struct OrgPreset {
  std::string density;
  int dq = 8;
  std::vector<int> counts;
};

/// Builds the spec from the DRAM component's config subtree
/// (`org:`/`timing:` blocks, preset names plus per-key overrides).
DeviceSpec build_ddr4_spec(ParamReader& reader);
DeviceSpec build_ddr5_spec(ParamReader& reader);

/// Spec for a bare standard name using its default presets. Used by the
/// trace verifier when no config file is given.
DeviceSpec default_spec(const std::string& standard);

namespace detail {

/// Fills spec.fanout from the org block: preset selection, then per-level
/// overrides. The block may be absent entirely.
void read_org(ParamReader& dram_reader, const std::map<std::string, OrgPreset>& presets,
              const std::string& default_preset, DeviceSpec& spec);

/// Fills spec.timing_val: preset selection, then per-symbol overrides.
void read_timing(ParamReader& dram_reader, const std::map<std::string, std::vector<int>>& presets,
                 const std::string& default_preset, DeviceSpec& spec);

} // namespace detail

} // namespace memsim
