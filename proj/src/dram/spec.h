#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "base/error.h"
#include "base/types.h"

namespace memsim {

class Node;
struct DeviceSpec;

/// Ordered list of names with stable integer encoding. All name resolution
/// happens at initialization; hot-path code holds the returned integers.
class NameTable {
 public:
  NameTable() = default;
  NameTable(std::string what, std::vector<std::string> names);

  int operator()(std::string_view name) const { return resolve(name); }
  int resolve(std::string_view name) const;
  std::optional<int> try_resolve(std::string_view name) const;
  bool contains(std::string_view name) const { return try_resolve(name).has_value(); }

  const std::string& name(int index) const { return m_names.at(index); }
  int size() const { return static_cast<int>(m_names.size()); }

  auto begin() const { return m_names.begin(); }
  auto end() const { return m_names.end(); }

 private:
  std::string m_what;
  std::vector<std::string> m_names;
};

/// Behavioral classification of a command; drives generic controller and
/// verifier logic without any per-standard branching.
struct CommandMeta {
  bool opens_row = false;
  bool closes_row = false;
  bool closes_all = false;
  bool is_refresh = false;
  bool is_read = false;
  bool is_write = false;
};

/// One permutation timing record: every (preceding, following) pair expands
/// to a pairwise entry at `level`. `window` = 1 constrains consecutive
/// pairs; window = N constrains the N-th most recent preceding occurrence
/// (e.g. four-activation windows). `sibling` applies the bound between
/// distinct nodes under the same parent instead of within one node.
struct TimingConstraint {
  std::string level;
  std::vector<std::string> preceding;
  std::vector<std::string> following;
  int latency = -1;
  int window = 1;
  bool sibling = false;
};

/// Compiled pairwise form, indexed [level][preceding-command].
struct TimingEntry {
  int next = -1;
  int latency = -1;
  int window = 1;
  bool sibling = false;
};

/// Prerequisite decode: returns `cmd` when the state admits it, otherwise the
/// command that must be issued first. Pure.
using PrereqFn = int (*)(const DeviceSpec&, const Node&, int cmd, int target_row);
/// State transition applied when a command is issued at its scope node.
using ActionFn = void (*)(const DeviceSpec&, Node&, int cmd, int target_row);
/// Row-status queries used by the scheduler and statistics. Pure.
using RowQueryFn = bool (*)(const DeviceSpec&, const Node&, int cmd, int target_row);

/// The declarative model of one DRAM standard: named levels, commands,
/// states, timing symbols and permutation constraints, plus the prerequisite
/// and action function tables, compiled into integer-indexed lookup tables.
struct DeviceSpec {
  std::string standard;

  NameTable levels;
  std::vector<int> fanout; // per level; rows/columns are capacities

  NameTable commands;
  std::vector<int> scopes;       // level index per command
  std::vector<CommandMeta> meta; // per command

  NameTable states;
  NameTable timings;
  std::vector<int> timing_val; // cycles, per timing symbol

  NameTable requests;
  std::vector<int> request_command; // final command per request kind

  std::vector<TimingConstraint> constraints;

  // -- compiled tables ------------------------------------------------
  std::vector<std::vector<std::vector<TimingEntry>>> timing_table; // [level][prev]
  std::vector<std::vector<int>> max_window;                        // [level][cmd]
  std::vector<std::vector<bool>> sibling_any;                      // [level][cmd]
  std::vector<std::vector<PrereqFn>> prereqs;                      // [level][cmd]
  std::vector<std::vector<ActionFn>> actions;                      // [level][cmd]
  std::vector<std::vector<RowQueryFn>> row_hits;                   // [level][cmd]
  std::vector<std::vector<RowQueryFn>> row_opens;                  // [level][cmd]

  // -- indices resolved once at finalization --------------------------
  int channel_level = -1;
  int rank_level = -1;
  int bank_level = -1;
  int row_level = -1;
  int column_level = -1;
  int deepest = -1; // deepest materialized node level (bank)

  int state_powered_up = -1;
  int state_closed = -1;
  int state_opened = -1;
  int state_refreshing = -1;

  int cmd_act = -1;
  int cmd_pre = -1;
  int cmd_preab = -1;

  int read_latency = -1;  // nCL + nBL
  int write_latency = -1; // nCWL + nBL

  /// Value of a named timing symbol (initialization-time use only).
  int timing(std::string_view symbol) const { return timing_val.at(timings.resolve(symbol)); }

  /// Node level at which readiness checks for `cmd` stop.
  int check_level(int cmd) const {
    int s = scopes[cmd];
    return s < deepest ? s : deepest;
  }

  /// Expands the permutation constraints, allocates and wires the function
  /// tables, resolves the well-known indices, and validates invariants.
  /// Must be called exactly once after the declarative members are filled.
  void finalize();

  /// Number of expanded pairwise entries.
  std::size_t expanded_size() const;

  /// Canonical declarative text of the spec (levels, commands, constraint
  /// records). Parsing it back and re-expanding yields an identical
  /// pairwise table.
  std::string dump() const;
};

/// Expands permutation records to the pairwise table [level][prev] ->
/// entries. Multiple constraints for one pair are all retained.
std::vector<std::vector<std::vector<TimingEntry>>> expand_timing(
    const std::vector<TimingConstraint>& constraints, const NameTable& levels,
    const NameTable& commands);

/// Parses the declarative text emitted by DeviceSpec::dump().
std::vector<TimingConstraint> parse_constraints(const std::string& text);

} // namespace memsim
