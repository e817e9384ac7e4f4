#include "sdn/memory.hpp"

namespace sdn::memory {
namespace {

struct Counters {
  std::atomic<std::int64_t> current{0};
  std::atomic<std::int64_t> peak{0};
};

Counters g_counters[2];

} // namespace

void on_allocate(Category c, std::size_t bytes) noexcept {
  auto& k = g_counters[static_cast<unsigned>(c)];
  const auto now = k.current.fetch_add(static_cast<std::int64_t>(bytes), std::memory_order_relaxed) +
                   static_cast<std::int64_t>(bytes);
  auto peak = k.peak.load(std::memory_order_relaxed);
  while (now > peak && !k.peak.compare_exchange_weak(peak, now, std::memory_order_relaxed)) {
  }
}

void on_deallocate(Category c, std::size_t bytes) noexcept {
  g_counters[static_cast<unsigned>(c)].current.fetch_sub(static_cast<std::int64_t>(bytes),
                                                         std::memory_order_relaxed);
}

Snapshot snapshot(Category c) noexcept {
  const auto& k = g_counters[static_cast<unsigned>(c)];
  return {k.current.load(std::memory_order_relaxed), k.peak.load(std::memory_order_relaxed)};
}

PeakScope::PeakScope(Category c) noexcept : category_(c) {
  auto& k = g_counters[static_cast<unsigned>(c)];
  baseline_ = k.current.load(std::memory_order_relaxed);
  k.peak.store(baseline_, std::memory_order_relaxed);
}

std::int64_t PeakScope::peak_bytes() const noexcept {
  return g_counters[static_cast<unsigned>(category_)].peak.load(std::memory_order_relaxed) - baseline_;
}

} // namespace sdn::memory
