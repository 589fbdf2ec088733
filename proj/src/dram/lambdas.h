#pragma once

#include "dram/node.h"
#include "dram/spec.h"

namespace memsim::lib {

// Prerequisite, action, and row-query functions shared across DRAM
// standards. Each is defined exactly once; standards wire them into their
// function tables by address, so two standards using the same behavior hold
// the identical library entry.

// -- prerequisites (pure) ---------------------------------------------

/// Rank scope. All banks below must be closed; otherwise precharge-all.
int require_all_banks_closed(const DeviceSpec& spec, const Node& rank, int cmd, int target_row);

/// Bank scope. The bank must be closed; otherwise precharge it first.
int require_bank_closed(const DeviceSpec& spec, const Node& bank, int cmd, int target_row);

/// Bank scope. The target row must be open: activate when closed, precharge
/// when a different row is open.
int require_row_open(const DeviceSpec& spec, const Node& bank, int cmd, int target_row);

/// Bank scope. Precharge first when a different row is open; otherwise the
/// command stands.
int require_same_row_or_precharge(const DeviceSpec& spec, const Node& bank, int cmd,
                                  int target_row);

// -- actions -----------------------------------------------------------

void open_row(const DeviceSpec& spec, Node& bank, int cmd, int target_row);
void close_row(const DeviceSpec& spec, Node& bank, int cmd, int target_row);
void close_all_rows(const DeviceSpec& spec, Node& rank, int cmd, int target_row);
/// Column access; no state change.
void consume_column(const DeviceSpec& spec, Node& bank, int cmd, int target_row);

// -- row queries (pure) -------------------------------------------------

bool row_hit_at_target(const DeviceSpec& spec, const Node& bank, int cmd, int target_row);
bool row_is_open(const DeviceSpec& spec, const Node& bank, int cmd, int target_row);

} // namespace memsim::lib
