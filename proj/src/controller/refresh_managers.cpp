#include "base/registry.h"
#include "controller/controller.h"
#include "controller/refresh.h"
#include "dram/device.h"

namespace memsim {

namespace {

/// Strictly periodic all-bank refresh: one REFab per rank every nREFI
/// cycles. No postponement or pull-in; a pending refresh queues behind the
/// previous one.
class AllBankRefresh : public IRefreshManager {
 public:
  void setup(IController& ctrl, IDram& dram) override {
    m_ctrl = &ctrl;
    const DeviceSpec& spec = dram.spec();
    m_nrefi = spec.timing("nREFI");
    m_kind = spec.requests("all-bank-refresh");
    m_final = spec.request_command[m_kind];
    m_num_ranks = spec.fanout[spec.rank_level];
    m_levels = spec.levels.size();
    m_next = m_nrefi;
  }

  void tick(Clk clk) override {
    if (clk < m_next)
      return;
    m_next += m_nrefi;
    for (int rank = 0; rank < m_num_ranks; ++rank) {
      Request req;
      req.type = Request::Type::Maintenance;
      req.kind = m_kind;
      req.final_command = m_final;
      req.addr_vec.assign(m_levels, -1);
      req.addr_vec[0] = m_ctrl->channel_id();
      req.addr_vec[1] = rank;
      if (!m_ctrl->inject(std::move(req)))
        throw ProtocolViolation("refresh injection rejected: priority queue full");
      ++m_injected;
    }
  }

  void report_stats(StatsSheet& sheet) const override {
    sheet.add("refreshes_injected", m_injected);
  }

 private:
  IController* m_ctrl = nullptr;
  int m_nrefi = -1;
  int m_kind = -1;
  int m_final = -1;
  int m_num_ranks = 0;
  int m_levels = 0;
  Clk m_next = 0;
  std::int64_t m_injected = 0;
};

/// No refresh at all. Useful for retention experiments and for isolating
/// mitigation behavior from the periodic-refresh reset.
class DisabledRefresh : public IRefreshManager {
 public:
  void setup(IController&, IDram&) override {}
  void tick(Clk) override {}
};

} // namespace

void register_refresh_managers(Registry& r) {
  r.add<IRefreshManager>("RefreshManager", "AllBank", [](ParamReader&, BuildContext&) {
    return std::make_shared<AllBankRefresh>();
  });
  r.add<IRefreshManager>("RefreshManager", "Disabled", [](ParamReader&, BuildContext&) {
    return std::make_shared<DisabledRefresh>();
  });
}

} // namespace memsim
