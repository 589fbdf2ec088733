#include "base/config.h"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace memsim {

ConfigNode ConfigNode::load_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in)
    throw ConfigError("cannot open config file '{}'", filename);
  try {
    return ConfigNode(YAML::Load(in), filename);
  } catch (const YAML::Exception& e) {
    throw ConfigError("cannot parse config file '{}': {}", filename, e.what());
  }
}

ConfigNode ConfigNode::parse(const std::string& text, const std::string& origin) {
  try {
    return ConfigNode(YAML::Load(text), origin);
  } catch (const YAML::Exception& e) {
    throw ConfigError("cannot parse config from {}: {}", origin, e.what());
  }
}

ConfigNode ConfigNode::child(const std::string& key) const {
  std::string child_path = m_path.empty() ? key : m_path + "." + key;
  if (!m_node.IsDefined() || !m_node.IsMap())
    return ConfigNode(YAML::Node(YAML::NodeType::Undefined), child_path);
  return ConfigNode(m_node[key], child_path);
}

std::vector<std::string> ConfigNode::keys() const {
  std::vector<std::string> out;
  if (!m_node.IsDefined() || !m_node.IsMap())
    return out;
  for (const auto& kv : m_node)
    out.push_back(kv.first.as<std::string>());
  return out;
}

std::vector<ConfigNode> ConfigNode::items() const {
  std::vector<ConfigNode> out;
  if (!m_node.IsDefined() || !m_node.IsSequence())
    return out;
  int i = 0;
  for (const auto& item : m_node) {
    out.emplace_back(item, fmt::format("{}[{}]", m_path, i));
    ++i;
  }
  return out;
}

void apply_override(YAML::Node root, const std::string& dotted_key, const std::string& value) {
  std::vector<std::string> parts;
  std::stringstream ss(dotted_key);
  std::string part;
  while (std::getline(ss, part, '.'))
    parts.push_back(part);
  if (parts.empty())
    throw ConfigError("empty override key");

  YAML::Node cursor = root;
  for (size_t i = 0; i + 1 < parts.size(); ++i) {
    YAML::Node next = cursor[parts[i]];
    if (!next.IsDefined() || next.IsNull()) {
      cursor[parts[i]] = YAML::Node(YAML::NodeType::Map);
      next = cursor[parts[i]];
    }
    cursor = next;
  }
  cursor[parts.back()] = YAML::Load(value);
}

ParamReader::ParamReader(ConfigNode node, YAML::Node effective)
    : m_node(std::move(node)), m_effective(std::move(effective)) {}

ConfigNode ParamReader::subnode(const std::string& key) {
  mark(key);
  return m_node.child(key);
}

bool ParamReader::has(const std::string& key) const {
  return m_node.child(key).defined();
}

ParamReader ParamReader::nested(const std::string& key) {
  mark(key);
  YAML::Node eff(YAML::NodeType::Map);
  m_effective[key] = eff;
  return ParamReader(m_node.child(key), eff);
}

std::vector<ConfigNode> ParamReader::sequence(const std::string& key) {
  mark(key);
  ConfigNode c = m_node.child(key);
  if (!c.defined())
    return {};
  if (!c.is_sequence())
    throw BadParameter("'{}' must be a sequence", c.path());
  return c.items();
}

ConfigNode ParamReader::map_param(const std::string& key) {
  mark(key);
  ConfigNode c = m_node.child(key);
  if (c.defined() && !c.is_map())
    throw BadParameter("'{}' must be a map", c.path());
  return c;
}

void ParamReader::echo(const std::string& key, const std::string& value) {
  m_effective[key] = value;
}

void ParamReader::done() const {
  if (!m_node.defined() || !m_node.is_map())
    return;
  for (const auto& key : m_node.keys()) {
    if (std::find(m_consumed.begin(), m_consumed.end(), key) == m_consumed.end())
      throw BadParameter("unknown key '{}' under '{}'", key,
                         m_node.path().empty() ? "<root>" : m_node.path());
  }
}

namespace {

void emit_rec(YAML::Emitter& out, const YAML::Node& node) {
  switch (node.Type()) {
    case YAML::NodeType::Map:
      out << YAML::BeginMap;
      for (const auto& kv : node) {
        out << YAML::Key << kv.first.as<std::string>() << YAML::Value;
        emit_rec(out, kv.second);
      }
      out << YAML::EndMap;
      break;
    case YAML::NodeType::Sequence:
      out << YAML::BeginSeq;
      for (const auto& item : node)
        emit_rec(out, item);
      out << YAML::EndSeq;
      break;
    case YAML::NodeType::Scalar:
      out << node;
      break;
    default:
      out << YAML::Null;
      break;
  }
}

} // namespace

std::string emit_yaml(const YAML::Node& node) {
  YAML::Emitter out;
  out.SetIndent(2);
  emit_rec(out, node);
  return std::string(out.c_str()) + "\n";
}

} // namespace memsim
