#pragma once

#include <memory>

#include "base/component.h"
#include "base/types.h"
#include "dram/node.h"
#include "dram/spec.h"

namespace memsim {

/// The DRAM device model: one DeviceSpec plus the runtime node hierarchy for
/// every channel. All queries are pure; only issue() mutates state.
class IDram : public Component {
 public:
  virtual const DeviceSpec& spec() const = 0;

  virtual bool check_ready(int cmd, const AddrVec& addr, Clk clk) const = 0;
  virtual int prerequisite(int cmd, const AddrVec& addr) const = 0;
  virtual void issue(int cmd, const AddrVec& addr, Clk clk) = 0;
  virtual bool row_hit(int cmd, const AddrVec& addr) const = 0;
  virtual bool row_open(int cmd, const AddrVec& addr) const = 0;

  /// Root node of one channel tree (verification and tests).
  virtual const Node& channel(int ch) const = 0;
};

/// Generic device implementation driven entirely by a finalized DeviceSpec.
/// Standards differ only in the spec they build.
class StandardDram : public IDram {
 public:
  explicit StandardDram(DeviceSpec spec);

  const DeviceSpec& spec() const override { return m_spec; }

  bool check_ready(int cmd, const AddrVec& addr, Clk clk) const override {
    return m_channels[addr[0]]->check_ready(cmd, addr, clk);
  }

  int prerequisite(int cmd, const AddrVec& addr) const override {
    return m_channels[addr[0]]->decode(cmd, addr);
  }

  void issue(int cmd, const AddrVec& addr, Clk clk) override;

  bool row_hit(int cmd, const AddrVec& addr) const override {
    return m_channels[addr[0]]->row_hit(cmd, addr);
  }

  bool row_open(int cmd, const AddrVec& addr) const override {
    return m_channels[addr[0]]->row_open(cmd, addr);
  }

  const Node& channel(int ch) const override { return *m_channels.at(ch); }

  void report_stats(StatsSheet& sheet) const override;

 private:
  DeviceSpec m_spec;
  std::vector<std::unique_ptr<Node>> m_channels;
  std::vector<std::int64_t> m_issue_count; // per command
};

} // namespace memsim
