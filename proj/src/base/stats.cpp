#include "base/stats.h"

#include <algorithm>
#include <sstream>

#include <fmt/core.h>

#include "base/error.h"

namespace memsim {

void StatsSheet::upsert(const std::string& key, Value v) {
  for (auto& [k, val] : m_entries) {
    if (k == key) {
      val = std::move(v);
      return;
    }
  }
  m_entries.emplace_back(key, std::move(v));
}

const StatsSheet::Value* StatsSheet::find(const std::string& key) const {
  for (const auto& [k, val] : m_entries)
    if (k == key)
      return &val;
  return nullptr;
}

void StatsSheet::add(const std::string& key, std::int64_t delta) {
  for (auto& [k, val] : m_entries) {
    if (k == key) {
      val = std::get<std::int64_t>(val) + delta;
      return;
    }
  }
  m_entries.emplace_back(key, Value(delta));
}

void StatsSheet::mark_wallclock(const std::string& key) {
  m_wallclock_keys.push_back(key);
}

bool StatsSheet::has(const std::string& key) const { return find(key) != nullptr; }

std::int64_t StatsSheet::get_int(const std::string& key) const {
  const Value* v = find(key);
  if (!v)
    throw ConfigError("stats key '{}' not found", key);
  return std::get<std::int64_t>(*v);
}

double StatsSheet::get_double(const std::string& key) const {
  const Value* v = find(key);
  if (!v)
    throw ConfigError("stats key '{}' not found", key);
  if (std::holds_alternative<std::int64_t>(*v))
    return static_cast<double>(std::get<std::int64_t>(*v));
  return std::get<double>(*v);
}

std::string StatsSheet::get_string(const std::string& key) const {
  const Value* v = find(key);
  if (!v)
    throw ConfigError("stats key '{}' not found", key);
  return std::get<std::string>(*v);
}

std::string StatsSheet::to_yaml(bool include_wallclock) const {
  std::ostringstream out;
  for (const auto& [key, val] : m_entries) {
    if (!include_wallclock &&
        std::find(m_wallclock_keys.begin(), m_wallclock_keys.end(), key) != m_wallclock_keys.end())
      continue;
    if (std::holds_alternative<std::int64_t>(val))
      out << key << ": " << std::get<std::int64_t>(val) << "\n";
    else if (std::holds_alternative<double>(val))
      out << key << ": " << fmt::format("{:.6g}", std::get<double>(val)) << "\n";
    else
      out << key << ": " << std::get<std::string>(val) << "\n";
  }
  return out.str();
}

} // namespace memsim
