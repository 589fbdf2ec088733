#include <yaml-cpp/yaml.h>

#include "dram/standards.h"

namespace memsim::detail {

void read_org(ParamReader& dram_reader, const std::map<std::string, OrgPreset>& presets,
              const std::string& default_preset, DeviceSpec& spec) {
  ParamReader org = dram_reader.nested("org");

  std::string preset_name = org.param<std::string>("preset").default_val(default_preset);
  auto it = presets.find(preset_name);
  if (it == presets.end())
    throw BadParameter("unknown org preset '{}' for {}", preset_name, spec.standard);
  OrgPreset preset = it->second;

  spec.fanout = preset.counts;
  for (int l = 0; l < spec.levels.size(); ++l) {
    if (auto v = org.param<int>(spec.levels.name(l)).optional())
      spec.fanout[l] = *v;
    if (spec.fanout[l] < 1)
      throw BadParameter("org fanout for level '{}' must be >= 1", spec.levels.name(l));
  }

  org.param<int>("width").default_val(preset.dq);
  org.echo("density", preset.density);
  org.done();
}

void read_timing(ParamReader& dram_reader, const std::map<std::string, std::vector<int>>& presets,
                 const std::string& default_preset, DeviceSpec& spec) {
  ParamReader timing = dram_reader.nested("timing");

  std::string preset_name = timing.param<std::string>("preset").default_val(default_preset);
  auto it = presets.find(preset_name);
  if (it == presets.end())
    throw BadParameter("unknown timing preset '{}' for {}", preset_name, spec.standard);
  if (static_cast<int>(it->second.size()) != spec.timings.size())
    throw ConfigError("{}: timing preset '{}' does not cover every symbol", spec.standard,
                      preset_name);

  spec.timing_val = it->second;
  for (int t = 0; t < spec.timings.size(); ++t) {
    if (auto v = timing.param<int>(spec.timings.name(t)).optional())
      spec.timing_val[t] = *v;
  }
  timing.done();
}

} // namespace memsim::detail

namespace memsim {

DeviceSpec default_spec(const std::string& standard) {
  YAML::Node eff(YAML::NodeType::Map);
  ParamReader reader(ConfigNode(YAML::Node(YAML::NodeType::Map), "DRAM"), eff);
  if (standard == "DDR4")
    return build_ddr4_spec(reader);
  if (standard == "DDR5")
    return build_ddr5_spec(reader);
  throw UnknownImplementation("DRAM", standard);
}

} // namespace memsim
