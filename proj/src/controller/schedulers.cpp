#include <tuple>

#include "base/registry.h"
#include "controller/scheduler.h"
#include "dram/device.h"

namespace memsim {

namespace {

/// First-Ready First-Come-First-Served: requests whose next command is ready
/// this cycle beat stalled ones, row hits beat misses, age breaks the rest,
/// request id makes the order total.
class FrFcfsScheduler : public IScheduler {
 public:
  void setup(IDram& dram) override { m_dram = &dram; }

  ReqBuffer::iterator best_request(ReqBuffer& queue, Clk clk) override {
    auto best = queue.end();
    bool best_ready = false;
    bool best_hit = false;
    for (auto it = queue.begin(); it != queue.end(); ++it) {
      it->command = m_dram->prerequisite(it->final_command, it->addr_vec);
      bool ready = m_dram->check_ready(it->command, it->addr_vec, clk);
      bool hit = m_dram->row_hit(it->final_command, it->addr_vec);
      if (best == queue.end() ||
          std::tuple(!ready, !hit, it->arrive, it->id) <
              std::tuple(!best_ready, !best_hit, best->arrive, best->id)) {
        best = it;
        best_ready = ready;
        best_hit = hit;
      }
    }
    return best;
  }

 private:
  IDram* m_dram = nullptr;
};

/// Plain in-order service; kept as the minimal demonstration that the
/// scheduler slot is swappable.
class FcfsScheduler : public IScheduler {
 public:
  void setup(IDram& dram) override { m_dram = &dram; }

  ReqBuffer::iterator best_request(ReqBuffer& queue, Clk) override {
    auto it = queue.begin();
    if (it != queue.end())
      it->command = m_dram->prerequisite(it->final_command, it->addr_vec);
    return it;
  }

 private:
  IDram* m_dram = nullptr;
};

class OpenRowPolicy : public IRowPolicy {
 public:
  void setup(IDram& dram) override {
    m_read = dram.spec().commands("RD");
    m_write = dram.spec().commands("WR");
  }
  int read_command() const override { return m_read; }
  int write_command() const override { return m_write; }

 private:
  int m_read = -1;
  int m_write = -1;
};

/// Auto-precharging variant: every column access closes its row.
class ClosedRowPolicy : public IRowPolicy {
 public:
  void setup(IDram& dram) override {
    m_read = dram.spec().commands("RDA");
    m_write = dram.spec().commands("WRA");
  }
  int read_command() const override { return m_read; }
  int write_command() const override { return m_write; }

 private:
  int m_read = -1;
  int m_write = -1;
};

} // namespace

void register_schedulers(Registry& r) {
  r.add<IScheduler>("Scheduler", "FRFCFS", [](ParamReader&, BuildContext&) {
    return std::make_shared<FrFcfsScheduler>();
  });
  r.add<IScheduler>("Scheduler", "FCFS", [](ParamReader&, BuildContext&) {
    return std::make_shared<FcfsScheduler>();
  });
}

void register_row_policies(Registry& r) {
  r.add<IRowPolicy>("RowPolicy", "OpenRow", [](ParamReader&, BuildContext&) {
    return std::make_shared<OpenRowPolicy>();
  });
  r.add<IRowPolicy>("RowPolicy", "ClosedRow", [](ParamReader&, BuildContext&) {
    return std::make_shared<ClosedRowPolicy>();
  });
}

} // namespace memsim
