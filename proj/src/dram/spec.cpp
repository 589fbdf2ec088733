#include "dram/spec.h"

#include <algorithm>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

namespace memsim {

NameTable::NameTable(std::string what, std::vector<std::string> names)
    : m_what(std::move(what)), m_names(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : m_names) {
    if (!seen.insert(n).second)
      throw ConfigError("duplicate {} name '{}'", m_what, n);
  }
}

int NameTable::resolve(std::string_view name) const {
  if (auto idx = try_resolve(name))
    return *idx;
  throw UnknownName(m_what, std::string(name));
}

std::optional<int> NameTable::try_resolve(std::string_view name) const {
  for (int i = 0; i < static_cast<int>(m_names.size()); ++i)
    if (m_names[i] == name)
      return i;
  return std::nullopt;
}

std::vector<std::vector<std::vector<TimingEntry>>> expand_timing(
    const std::vector<TimingConstraint>& constraints, const NameTable& levels,
    const NameTable& commands) {
  std::vector<std::vector<std::vector<TimingEntry>>> table(
      levels.size(), std::vector<std::vector<TimingEntry>>(commands.size()));

  for (const auto& c : constraints) {
    if (c.latency < 1)
      throw ConfigError("timing constraint at level '{}' has non-positive latency {}", c.level,
                        c.latency);
    if (c.window < 1)
      throw ConfigError("timing constraint at level '{}' has non-positive window {}", c.level,
                        c.window);
    int level = levels.resolve(c.level);
    for (const auto& prev : c.preceding) {
      int p = commands.resolve(prev);
      for (const auto& next : c.following) {
        int n = commands.resolve(next);
        table[level][p].push_back(TimingEntry{n, c.latency, c.window, c.sibling});
      }
    }
  }
  return table;
}

void DeviceSpec::finalize() {
  channel_level = levels.resolve("channel");
  rank_level = levels.resolve("rank");
  bank_level = levels.resolve("bank");
  row_level = levels.resolve("row");
  column_level = levels.resolve("column");
  deepest = bank_level;

  if (static_cast<int>(fanout.size()) != levels.size())
    throw ConfigError("{}: fanout table size does not match level count", standard);
  for (int i = 0; i < levels.size(); ++i)
    if (fanout[i] < 1)
      throw ConfigError("{}: fanout of level '{}' must be >= 1", standard, levels.name(i));

  if (static_cast<int>(scopes.size()) != commands.size() ||
      static_cast<int>(meta.size()) != commands.size())
    throw ConfigError("{}: scope/meta tables do not cover every command", standard);
  for (int c = 0; c < commands.size(); ++c) {
    int role_flags = int(meta[c].opens_row) + int(meta[c].closes_row) + int(meta[c].closes_all);
    if (role_flags > 1)
      throw ConfigError("{}: command '{}' has conflicting row-state roles", standard,
                        commands.name(c));
  }

  state_powered_up = states.resolve("PoweredUp");
  state_closed = states.resolve("Closed");
  state_opened = states.resolve("Opened");
  state_refreshing = states.resolve("Refreshing");

  cmd_act = commands.resolve("ACT");
  cmd_pre = commands.resolve("PRE");
  cmd_preab = commands.resolve("PREab");

  read_latency = timing("nCL") + timing("nBL");
  write_latency = timing("nCWL") + timing("nBL");

  for (int t = 0; t < timings.size(); ++t)
    if (timing_val[t] < 1)
      throw ConfigError("{}: timing symbol {} must be >= 1 (got {})", standard, timings.name(t),
                        timing_val[t]);
  if (timing("nRAS") + timing("nRP") > timing("nRC"))
    throw ConfigError("{}: nRAS + nRP exceeds nRC", standard);

  timing_table = expand_timing(constraints, levels, commands);

  max_window.assign(levels.size(), std::vector<int>(commands.size(), 1));
  sibling_any.assign(levels.size(), std::vector<bool>(commands.size(), false));
  for (int l = 0; l < levels.size(); ++l) {
    for (int c = 0; c < commands.size(); ++c) {
      for (const auto& e : timing_table[l][c]) {
        max_window[l][c] = std::max(max_window[l][c], e.window);
        if (e.sibling)
          sibling_any[l][c] = true;
      }
    }
  }

  auto size_table = [&](auto& t) {
    t.resize(levels.size());
    for (auto& row : t)
      row.resize(commands.size(), nullptr);
  };
  if (prereqs.empty())
    size_table(prereqs);
  if (actions.empty())
    size_table(actions);
  if (row_hits.empty())
    size_table(row_hits);
  if (row_opens.empty())
    size_table(row_opens);

  // Completeness lint: every command must be mentioned by some constraint.
  for (int c = 0; c < commands.size(); ++c) {
    bool mentioned = false;
    for (const auto& cons : constraints) {
      const auto& name = commands.name(c);
      if (std::find(cons.preceding.begin(), cons.preceding.end(), name) != cons.preceding.end() ||
          std::find(cons.following.begin(), cons.following.end(), name) != cons.following.end())
        mentioned = true;
    }
    if (!mentioned)
      throw ConfigError("{}: command '{}' appears in no timing constraint", standard,
                        commands.name(c));
  }
}

std::size_t DeviceSpec::expanded_size() const {
  std::size_t n = 0;
  for (const auto& per_level : timing_table)
    for (const auto& per_cmd : per_level)
      n += per_cmd.size();
  return n;
}

std::string DeviceSpec::dump() const {
  YAML::Node root;
  root["standard"] = standard;
  for (const auto& l : levels)
    root["levels"].push_back(l);
  for (const auto& c : commands)
    root["commands"].push_back(c);
  for (const auto& c : constraints) {
    YAML::Node rec;
    rec["level"] = c.level;
    for (const auto& p : c.preceding)
      rec["preceding"].push_back(p);
    for (const auto& f : c.following)
      rec["following"].push_back(f);
    rec["latency"] = c.latency;
    rec["window"] = c.window;
    rec["sibling"] = c.sibling;
    root["constraints"].push_back(rec);
  }
  YAML::Emitter out;
  out.SetIndent(2);
  out << root;
  return std::string(out.c_str()) + "\n";
}

std::vector<TimingConstraint> parse_constraints(const std::string& text) {
  YAML::Node root = YAML::Load(text);
  std::vector<TimingConstraint> out;
  for (const auto& rec : root["constraints"]) {
    TimingConstraint c;
    c.level = rec["level"].as<std::string>();
    for (const auto& p : rec["preceding"])
      c.preceding.push_back(p.as<std::string>());
    for (const auto& f : rec["following"])
      c.following.push_back(f.as<std::string>());
    c.latency = rec["latency"].as<int>();
    c.window = rec["window"].as<int>(1);
    c.sibling = rec["sibling"].as<bool>(false);
    out.push_back(std::move(c));
  }
  return out;
}

} // namespace memsim
