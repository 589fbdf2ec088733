#include "dram/lambdas.h"

namespace memsim::lib {

namespace {

template <typename Fn>
bool all_banks(const Node& node, const DeviceSpec& spec, Fn&& pred) {
  if (node.level == spec.bank_level)
    return pred(node);
  for (const auto& child : node.children)
    if (!all_banks(*child, spec, pred))
      return false;
  return true;
}

} // namespace

int require_all_banks_closed(const DeviceSpec& spec, const Node& rank, int cmd, int) {
  bool closed = all_banks(rank, spec,
                          [&](const Node& bank) { return bank.state == spec.state_closed; });
  if (closed)
    return cmd;
  return spec.cmd_preab;
}

int require_bank_closed(const DeviceSpec& spec, const Node& bank, int cmd, int) {
  if (bank.state == spec.state_closed)
    return cmd;
  return spec.cmd_pre;
}

int require_row_open(const DeviceSpec& spec, const Node& bank, int cmd, int target_row) {
  if (bank.state == spec.state_closed)
    return spec.cmd_act;
  if (bank.open_row == target_row)
    return cmd;
  return spec.cmd_pre;
}

int require_same_row_or_precharge(const DeviceSpec& spec, const Node& bank, int cmd,
                                  int target_row) {
  if (bank.state == spec.state_opened && bank.open_row != target_row)
    return spec.cmd_pre;
  return cmd;
}

void open_row(const DeviceSpec& spec, Node& bank, int, int target_row) {
  bank.state = spec.state_opened;
  bank.open_row = target_row;
}

void close_row(const DeviceSpec& spec, Node& bank, int, int) {
  bank.state = spec.state_closed;
  bank.open_row = -1;
}

void close_all_rows(const DeviceSpec& spec, Node& node, int cmd, int target_row) {
  if (node.level == spec.bank_level) {
    close_row(spec, node, cmd, target_row);
    return;
  }
  for (auto& child : node.children)
    close_all_rows(spec, *child, cmd, target_row);
}

void consume_column(const DeviceSpec&, Node&, int, int) {}

bool row_hit_at_target(const DeviceSpec& spec, const Node& bank, int, int target_row) {
  return bank.state == spec.state_opened && bank.open_row == target_row;
}

bool row_is_open(const DeviceSpec& spec, const Node& bank, int, int) {
  return bank.state == spec.state_opened;
}

} // namespace memsim::lib
