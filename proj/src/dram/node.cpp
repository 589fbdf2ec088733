#include "dram/node.h"

#include <cassert>

namespace memsim {

Node::Node(const DeviceSpec& s, Node* parent_, int level_, int id_)
    : spec(s), parent(parent_), level(level_), id(id_) {
  state = (level == spec.rank_level) ? spec.state_powered_up
          : (level == spec.bank_level) ? spec.state_closed
                                       : spec.state_powered_up;

  next_ok.assign(spec.commands.size(), 0);
  history.resize(spec.commands.size());
  for (int c = 0; c < spec.commands.size(); ++c)
    if (spec.max_window[level][c] > 1)
      history[c] = RingHistory(spec.max_window[level][c]);

  if (level < spec.deepest) {
    int n = spec.fanout[level + 1];
    children.reserve(n);
    for (int i = 0; i < n; ++i)
      children.push_back(std::make_unique<Node>(spec, this, level + 1, i));
  }
}

const Node* Node::walk(const AddrVec& addr, int to_level) const {
  const Node* n = this;
  while (n->level < to_level)
    n = n->children[addr[n->level + 1]].get();
  return n;
}

Node* Node::walk(const AddrVec& addr, int to_level) {
  Node* n = this;
  while (n->level < to_level)
    n = n->children[addr[n->level + 1]].get();
  return n;
}

bool Node::check_ready(int cmd, const AddrVec& addr, Clk clk) const {
  const Node* n = this;
  const int stop = spec.check_level(cmd);
  for (;;) {
    if (clk < n->next_ok[cmd])
      return false;
    if (n->level == stop)
      return true;
    n = n->children[addr[n->level + 1]].get();
  }
}

int Node::decode(int cmd, const AddrVec& addr) const {
  const Node* n = this;
  const int stop = spec.check_level(cmd);
  const int target_row = addr[spec.row_level];
  for (;;) {
    if (PrereqFn f = spec.prereqs[n->level][cmd]) {
      int p = f(spec, *n, cmd, target_row);
      if (p != cmd)
        return p;
    }
    if (n->level == stop)
      return cmd;
    n = n->children[addr[n->level + 1]].get();
  }
}

bool Node::row_hit(int cmd, const AddrVec& addr) const {
  const Node* n = this;
  const int stop = spec.check_level(cmd);
  const int target_row = addr[spec.row_level];
  for (;;) {
    if (RowQueryFn f = spec.row_hits[n->level][cmd])
      return f(spec, *n, cmd, target_row);
    if (n->level == stop)
      return false;
    n = n->children[addr[n->level + 1]].get();
  }
}

bool Node::row_open(int cmd, const AddrVec& addr) const {
  const Node* n = this;
  const int stop = spec.check_level(cmd);
  const int target_row = addr[spec.row_level];
  for (;;) {
    if (RowQueryFn f = spec.row_opens[n->level][cmd])
      return f(spec, *n, cmd, target_row);
    if (n->level == stop)
      return false;
    n = n->children[addr[n->level + 1]].get();
  }
}

void Node::issue(int cmd, const AddrVec& addr, Clk clk) {
  Node* n = this;
  const int stop = spec.check_level(cmd);
  const int target_row = addr[spec.row_level];
  for (;;) {
    if (ActionFn f = spec.actions[n->level][cmd])
      f(spec, *n, cmd, target_row);
    n->apply_timing(cmd, clk);
    if (n->level == stop)
      return;
    n = n->children[addr[n->level + 1]].get();
  }
}

void Node::apply_timing(int cmd, Clk clk) {
  const auto& entries = spec.timing_table[level][cmd];
  if (entries.empty())
    return;

  if (history[cmd].tracked())
    history[cmd].push(clk);

  // Commands scoped above the bank level (PREab, REFab, ...) mirror their
  // scope-level bounds into every descendant's table at issue time, keeping
  // per-bank readiness queries flat.
  const bool descend =
      spec.scopes[cmd] < spec.bank_level && level == spec.scopes[cmd] && !children.empty();

  for (const auto& e : entries) {
    if (e.sibling)
      continue;
    Clk base = clk;
    if (e.window > 1) {
      base = history[cmd].nth(e.window - 1);
      if (base < 0)
        continue;
    }
    raise(e.next, base + e.latency);
    if (descend && e.window == 1)
      raise_descendants(e.next, clk + e.latency);
  }

  if (spec.sibling_any[level][cmd] && parent) {
    for (auto& sib : parent->children) {
      if (sib.get() == this)
        continue;
      for (const auto& e : entries)
        if (e.sibling)
          sib->raise(e.next, clk + e.latency);
    }
  }
}

void Node::raise_descendants(int cmd, Clk until) {
  for (auto& child : children) {
    child->raise(cmd, until);
    child->raise_descendants(cmd, until);
  }
}

} // namespace memsim
