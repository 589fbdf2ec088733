#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace memsim {

/// Flat, ordered collection of named counters and gauges gathered from every
/// component at the end of a run. Keys carrying wall-clock measurements are
/// registered as such so reproducibility checks can exclude them.
class StatsSheet {
 public:
  using Value = std::variant<std::int64_t, double, std::string>;

  void set(const std::string& key, std::int64_t v) { upsert(key, Value(v)); }
  void set(const std::string& key, double v) { upsert(key, Value(v)); }
  void set(const std::string& key, const std::string& v) { upsert(key, Value(v)); }
  void add(const std::string& key, std::int64_t delta);

  void mark_wallclock(const std::string& key);

  bool has(const std::string& key) const;
  std::int64_t get_int(const std::string& key) const;
  double get_double(const std::string& key) const;
  std::string get_string(const std::string& key) const;

  /// Flat key/value document. With include_wallclock=false the
  /// wall-clock-dependent keys are omitted (the deterministic view).
  std::string to_yaml(bool include_wallclock = true) const;

  const std::vector<std::pair<std::string, Value>>& entries() const { return m_entries; }

 private:
  std::vector<std::pair<std::string, Value>> m_entries;
  std::vector<std::string> m_wallclock_keys;

  void upsert(const std::string& key, Value v);
  const Value* find(const std::string& key) const;
};

} // namespace memsim
