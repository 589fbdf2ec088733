#pragma once

#include <optional>
#include <string>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "base/error.h"

namespace memsim {

/// Read-only view of one node in the configuration document. Tracks the
/// dotted path from the document root so that errors point at the offending
/// key.
class ConfigNode {
 public:
  ConfigNode() = default;
  ConfigNode(YAML::Node node, std::string path)
      : m_node(std::move(node)), m_path(std::move(path)) {}

  static ConfigNode load_file(const std::string& filename);
  static ConfigNode parse(const std::string& text, const std::string& origin = "<string>");

  bool defined() const { return m_node.IsDefined() && !m_node.IsNull(); }
  bool is_map() const { return m_node.IsMap(); }
  bool is_sequence() const { return m_node.IsSequence(); }
  bool is_scalar() const { return m_node.IsScalar(); }

  ConfigNode child(const std::string& key) const;
  std::vector<std::string> keys() const;
  std::vector<ConfigNode> items() const;

  template <typename T>
  T as() const {
    try {
      return m_node.as<T>();
    } catch (const YAML::Exception&) {
      throw BadParameter("bad value for '{}': cannot parse '{}'", m_path,
                         m_node.IsScalar() ? m_node.Scalar() : std::string("<non-scalar>"));
    }
  }

  const std::string& path() const { return m_path; }
  const YAML::Node& yaml() const { return m_node; }

 private:
  YAML::Node m_node;
  std::string m_path;
};

/// Applies a `dotted.path=value` override onto a parsed document. Creates
/// intermediate maps as needed; the value is parsed as a YAML scalar.
void apply_override(YAML::Node root, const std::string& dotted_key, const std::string& value);

class ParamReader;

template <typename T>
class ParamProxy {
 public:
  ParamProxy(ParamReader& reader, std::string key) : m_reader(reader), m_key(std::move(key)) {}

  /// Fails with BadParameter when the key is absent.
  T required();
  /// Uses (and echoes) the fallback when the key is absent.
  T default_val(T fallback);
  /// Absent keys yield nullopt and are not echoed.
  std::optional<T> optional();

 private:
  ParamReader& m_reader;
  std::string m_key;
};

/// Accessor for one component's config subtree. Every key must be consumed
/// through it: leftover keys are reported as errors when done() runs, which
/// is what catches config typos. Consumed parameters (including defaults
/// that were materialized) are echoed into an effective-config node.
class ParamReader {
 public:
  ParamReader(ConfigNode node, YAML::Node effective);

  template <typename T>
  ParamProxy<T> param(const std::string& key) {
    return ParamProxy<T>(*this, key);
  }

  /// Child component node (e.g. the Scheduler block inside Controller).
  ConfigNode subnode(const std::string& key);
  bool has(const std::string& key) const;

  /// Reader for a nested parameter group (e.g. the org/timing blocks of a
  /// DRAM node), echoing into a child of this reader's effective node.
  ParamReader nested(const std::string& key);

  /// Ordered list of child component nodes (e.g. the plugin list).
  std::vector<ConfigNode> sequence(const std::string& key);

  /// Map-valued parameter consumed wholesale (e.g. timing overrides).
  ConfigNode map_param(const std::string& key);

  /// Echo an entry into the effective config without reading the input.
  void echo(const std::string& key, const std::string& value);

  /// Verifies that no unconsumed keys remain.
  void done() const;

  const std::string& path() const { return m_node.path(); }
  YAML::Node effective() { return m_effective; }

 private:
  template <typename T>
  friend class ParamProxy;

  ConfigNode m_node;
  YAML::Node m_effective;
  std::vector<std::string> m_consumed;

  void mark(const std::string& key) { m_consumed.push_back(key); }
};

template <typename T>
T ParamProxy<T>::required() {
  ConfigNode c = m_reader.m_node.child(m_key);
  if (!c.defined())
    throw BadParameter("missing required parameter '{}'", c.path());
  m_reader.mark(m_key);
  T v = c.template as<T>();
  m_reader.m_effective[m_key] = v;
  return v;
}

template <typename T>
T ParamProxy<T>::default_val(T fallback) {
  ConfigNode c = m_reader.m_node.child(m_key);
  m_reader.mark(m_key);
  T v = c.defined() ? c.template as<T>() : fallback;
  m_reader.m_effective[m_key] = v;
  return v;
}

template <typename T>
std::optional<T> ParamProxy<T>::optional() {
  ConfigNode c = m_reader.m_node.child(m_key);
  m_reader.mark(m_key);
  if (!c.defined())
    return std::nullopt;
  T v = c.template as<T>();
  m_reader.m_effective[m_key] = v;
  return v;
}

/// Renders a document with deterministic formatting (insertion order, two
/// space indent). Used for the effective-config dump.
std::string emit_yaml(const YAML::Node& node);

} // namespace memsim
