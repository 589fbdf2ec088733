#include "dram/device.h"

#include <cassert>

namespace memsim {

StandardDram::StandardDram(DeviceSpec spec) : m_spec(std::move(spec)) {
  int channels = m_spec.fanout[m_spec.channel_level];
  m_channels.reserve(channels);
  for (int ch = 0; ch < channels; ++ch)
    m_channels.push_back(std::make_unique<Node>(m_spec, nullptr, m_spec.channel_level, ch));
  m_issue_count.assign(m_spec.commands.size(), 0);
}

void StandardDram::issue(int cmd, const AddrVec& addr, Clk clk) {
  assert(m_channels[addr[0]]->check_ready(cmd, addr, clk) &&
         "command issued before its next-allowed cycle");
  assert(m_channels[addr[0]]->decode(cmd, addr) == cmd &&
         "command issued with unmet state prerequisite");
  m_channels[addr[0]]->issue(cmd, addr, clk);
  ++m_issue_count[cmd];
}

void StandardDram::report_stats(StatsSheet& sheet) const {
  sheet.set("standard", m_spec.standard);
  for (int c = 0; c < m_spec.commands.size(); ++c)
    sheet.set("commands_" + m_spec.commands.name(c), m_issue_count[c]);
}

} // namespace memsim
