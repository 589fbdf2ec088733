#pragma once

#include <any>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "base/config.h"
#include "base/error.h"

namespace memsim {

class IDram;
class IAddrMapper;
class IController;
class IMemorySystem;
class IFrontend;

class Registry;

/// Threaded through every factory so components can reach the parts of the
/// graph built before them. Components hold each other only through
/// interface pointers; concrete types never cross component boundaries.
struct BuildContext {
  const Registry* registry = nullptr;
  std::shared_ptr<IDram> dram;
  std::shared_ptr<IAddrMapper> mapper;
  std::vector<std::shared_ptr<IController>> controllers;
  std::shared_ptr<IMemorySystem> memsys;
  /// Channel whose controller subtree is currently being built.
  int channel_id = -1;
};

class ParamReader;

/// Catalog binding (interface name, implementation name) pairs to factories.
/// Populated by the per-module registration routines; read-only afterwards.
class Registry {
 public:
  template <class I>
  using Factory = std::function<std::shared_ptr<I>(ParamReader&, BuildContext&)>;

  template <class I>
  void add(const std::string& iface, const std::string& impl, Factory<I> factory) {
    auto& slot = m_entries[iface];
    if (slot.count(impl))
      throw DuplicateImplementation(iface, impl);
    slot[impl] = std::any(std::move(factory));
  }

  bool has_interface(const std::string& iface) const { return m_entries.count(iface) > 0; }

  std::vector<std::string> interfaces() const;
  std::vector<std::string> implementations(const std::string& iface) const;

  /// Builds the component configured at `node`: resolves its `impl:` key,
  /// invokes the factory with a ParamReader bound to `effective`, and
  /// verifies that the node holds no unknown keys.
  template <class I>
  std::shared_ptr<I> build(const std::string& iface, const ConfigNode& node, BuildContext& ctx,
                           YAML::Node effective) const {
    if (!node.defined())
      throw MissingComponent(iface, node.path());
    ParamReader reader(node, effective);
    std::string impl = reader.param<std::string>("impl").required();
    const auto& factory = resolve<I>(iface, impl);
    auto obj = factory(reader, ctx);
    reader.done();
    obj->set_impl_name(impl);
    return obj;
  }

  template <class I>
  const Factory<I>& resolve(const std::string& iface, const std::string& impl) const {
    auto it = m_entries.find(iface);
    if (it == m_entries.end())
      throw UnknownInterface(iface);
    auto jt = it->second.find(impl);
    if (jt == it->second.end())
      throw UnknownImplementation(iface, impl);
    return std::any_cast<const Factory<I>&>(jt->second);
  }

 private:
  std::map<std::string, std::map<std::string, std::any>> m_entries;
};

/// The process-wide catalog with every built-in implementation registered.
const Registry& builtin_registry();

/// Fills a registry with the built-in implementations of every interface.
/// Kept separate so tests can populate private registries.
void register_builtins(Registry& r);

} // namespace memsim
