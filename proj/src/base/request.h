#pragma once

#include <functional>
#include <list>

#include "base/types.h"

namespace memsim {

/// One memory-system transaction: a demand read/write from the frontend or a
/// maintenance operation injected by the refresh manager or a plugin.
struct Request {
  enum class Type { Read, Write, Maintenance };

  std::int64_t id = -1;
  Type type = Type::Read;
  /// Index into the device spec's request-kind table ("read", "write",
  /// "all-bank-refresh", "open-row", ...). Determines the final command.
  int kind = -1;
  Addr raw_addr = -1;
  AddrVec addr_vec;

  Clk arrive = -1;
  /// Set when the request completes; -1 before.
  Clk depart = -1;

  /// The command that ultimately serves this request (RD/WR/REFab/...).
  int final_command = -1;
  /// Scratch for the scheduler: the current step of the decode chain.
  int command = -1;

  /// Completion callback (notifies the frontend). May be empty for
  /// maintenance requests.
  std::function<void(Request&)> callback;

  bool is_demand() const { return type == Type::Read || type == Type::Write; }
};

/// Bounded FIFO with stable iterators and random-access scanning, as needed
/// by FR-FCFS. Entries keep arrival order.
class ReqBuffer {
 public:
  using iterator = std::list<Request>::iterator;
  using const_iterator = std::list<Request>::const_iterator;

  explicit ReqBuffer(std::size_t capacity = 32) : m_capacity(capacity) {}

  bool full() const { return m_entries.size() >= m_capacity; }
  bool empty() const { return m_entries.empty(); }
  std::size_t size() const { return m_entries.size(); }
  std::size_t capacity() const { return m_capacity; }

  bool push(Request&& req) {
    if (full())
      return false;
    m_entries.push_back(std::move(req));
    return true;
  }

  iterator erase(iterator it) { return m_entries.erase(it); }

  iterator begin() { return m_entries.begin(); }
  iterator end() { return m_entries.end(); }
  const_iterator begin() const { return m_entries.begin(); }
  const_iterator end() const { return m_entries.end(); }

 private:
  std::size_t m_capacity;
  std::list<Request> m_entries;
};

} // namespace memsim
