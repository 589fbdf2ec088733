#pragma once

#include <memory>
#include <vector>

#include "dram/spec.h"

namespace memsim {

/// Bounded ring of the most recent issue cycles of one command at one node,
/// sized to the largest window that references it.
class RingHistory {
 public:
  RingHistory() = default;
  explicit RingHistory(int capacity) : m_slots(capacity, -1) {}

  bool tracked() const { return !m_slots.empty(); }

  void push(Clk clk) {
    if (m_slots.empty())
      return;
    m_head = (m_head + 1) % static_cast<int>(m_slots.size());
    m_slots[m_head] = clk;
  }

  /// k-th most recent recorded cycle (0 = newest); -1 when not yet filled.
  Clk nth(int k) const {
    int n = static_cast<int>(m_slots.size());
    return m_slots[((m_head - k) % n + n) % n];
  }

 private:
  std::vector<Clk> m_slots;
  int m_head = 0;
};

/// One node of the runtime state hierarchy (channel / rank / bankgroup /
/// bank). Rows and columns are capacities, not nodes: the open row is
/// recorded in the bank node. Each node keeps a per-command
/// next-allowed-cycle table and the bounded history needed by windowed
/// constraints.
class Node {
 public:
  Node(const DeviceSpec& spec, Node* parent, int level, int id);

  /// True iff `clk` is at or past the next-allowed cycle for `cmd` at every
  /// node from here down to the command's check level. Pure.
  bool check_ready(int cmd, const AddrVec& addr, Clk clk) const;

  /// Applies the command: runs the action functions along the path and
  /// propagates the expanded timing entries (same node, sibling nodes, and
  /// all descendants for above-bank-scope commands).
  void issue(int cmd, const AddrVec& addr, Clk clk);

  /// Walks the prerequisite chain: returns `cmd` when the state admits it,
  /// otherwise the command that must precede it. Pure.
  int decode(int cmd, const AddrVec& addr) const;

  bool row_hit(int cmd, const AddrVec& addr) const;
  bool row_open(int cmd, const AddrVec& addr) const;

  const Node* walk(const AddrVec& addr, int to_level) const;
  Node* walk(const AddrVec& addr, int to_level);

  const DeviceSpec& spec;
  Node* const parent;
  const int level;
  const int id;

  int state;
  int open_row = -1;

  std::vector<Clk> next_ok;          // per command
  std::vector<RingHistory> history;  // per command; capacity 0 when untracked
  std::vector<std::unique_ptr<Node>> children;

 private:
  void apply_timing(int cmd, Clk clk);
  void raise(int cmd, Clk until) {
    if (until > next_ok[cmd])
      next_ok[cmd] = until;
  }
  void raise_descendants(int cmd, Clk until);
};

} // namespace memsim
