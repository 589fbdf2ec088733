#include "base/registry.h"

namespace memsim {

std::vector<std::string> Registry::interfaces() const {
  std::vector<std::string> out;
  for (const auto& [iface, _] : m_entries)
    out.push_back(iface);
  return out;
}

std::vector<std::string> Registry::implementations(const std::string& iface) const {
  auto it = m_entries.find(iface);
  if (it == m_entries.end())
    throw UnknownInterface(iface);
  std::vector<std::string> out;
  for (const auto& [impl, _] : it->second)
    out.push_back(impl);
  return out;
}

// Per-module registration routines.
void register_dram(Registry&);
void register_addr_mappers(Registry&);
void register_schedulers(Registry&);
void register_row_policies(Registry&);
void register_refresh_managers(Registry&);
void register_controllers(Registry&);
void register_plugins(Registry&);
void register_memory_systems(Registry&);
void register_frontends(Registry&);

void register_builtins(Registry& r) {
  register_dram(r);
  register_addr_mappers(r);
  register_schedulers(r);
  register_row_policies(r);
  register_refresh_managers(r);
  register_controllers(r);
  register_plugins(r);
  register_memory_systems(r);
  register_frontends(r);
}

const Registry& builtin_registry() {
  static const Registry instance = [] {
    Registry r;
    register_builtins(r);
    return r;
  }();
  return instance;
}

} // namespace memsim
