#pragma once

// Allocation accounting. Every bulk buffer in the library is allocated through
// AccountingAllocator, so the working memory of an algorithm can be observed
// as "current" and "peak" byte counts. Lookup tables and counting-sort
// histograms are charged to a separate category: their size depends only on
// the table parameter, never on the input length.

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <new>
#include <vector>

namespace sdn::memory {

enum class Category : unsigned { Aux = 0, Table = 1 };

struct Snapshot {
  std::int64_t current_bytes;
  std::int64_t peak_bytes;
};

void on_allocate(Category c, std::size_t bytes) noexcept;
void on_deallocate(Category c, std::size_t bytes) noexcept;

Snapshot snapshot(Category c = Category::Aux) noexcept;

/// Measures the peak number of bytes held in one category while the scope is
/// alive, relative to the amount already held when it was opened. Scopes are
/// not nestable; the process-wide peak is reset on construction.
class PeakScope {
public:
  explicit PeakScope(Category c = Category::Aux) noexcept;

  std::int64_t peak_bytes() const noexcept;
  std::int64_t peak_bits() const noexcept { return peak_bytes() * 8; }

private:
  Category category_;
  std::int64_t baseline_;
};

template <class T, Category C = Category::Aux>
class AccountingAllocator {
public:
  using value_type = T;

  template <class U>
  struct rebind {
    using other = AccountingAllocator<U, C>;
  };

  AccountingAllocator() noexcept = default;
  template <class U>
  AccountingAllocator(const AccountingAllocator<U, C>&) noexcept {}

  T* allocate(std::size_t n) {
    auto* p = static_cast<T*>(::operator new(n * sizeof(T)));
    on_allocate(C, n * sizeof(T));
    return p;
  }

  void deallocate(T* p, std::size_t n) noexcept {
    on_deallocate(C, n * sizeof(T));
    ::operator delete(p);
  }

  template <class U>
  bool operator==(const AccountingAllocator<U, C>&) const noexcept {
    return true;
  }
};

} // namespace sdn::memory

namespace sdn {

/// std::vector whose storage is charged to the auxiliary-memory counters.
template <class T>
using aux_vector = std::vector<T, memory::AccountingAllocator<T, memory::Category::Aux>>;

/// std::vector charged to the lookup-table counters.
template <class T>
using table_vector = std::vector<T, memory::AccountingAllocator<T, memory::Category::Table>>;

} // namespace sdn
