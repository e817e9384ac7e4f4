#include "sdn/tree_center.hpp"

#include "sdn/choice_dictionary.hpp"
#include "sdn/codec.hpp"
#include "sdn/rank_select.hpp"

namespace sdn {

namespace {

/// Node degrees stored back to back, slot u starting at the u-th marker.
/// A decremented degree never needs more bits than its slot.
class DegreeStore {
public:
  explicit DegreeStore(const Tree& tree) {
    const std::uint64_t n = tree.size();
    std::uint64_t total = 0;
    for (std::uint64_t u = 0; u < n; ++u) {
      total += encoded_length(tree.degree(u));
    }
    BitSequence markers(total);
    values_.reset(total);
    std::uint64_t p = 0;
    for (std::uint64_t u = 0; u < n; ++u) {
      markers.set(p);
      p = write_codeword(values_, p, tree.degree(u));
    }
    slots_ = RankSelectIndex(std::move(markers));
  }

  std::uint64_t get(std::uint64_t u) const {
    return codeword_value_u64(values_, scan_codeword(values_, slot(u), values_.size()));
  }

  /// Returns the new degree.
  std::uint64_t decrement(std::uint64_t u) {
    const std::uint64_t d = get(u) - 1;
    write_codeword(values_, slot(u), d);
    return d;
  }

private:
  std::uint64_t slot(std::uint64_t u) const noexcept { return slots_.select(u + 1); }

  BitSequence values_;
  RankSelectIndex slots_;
};

} // namespace

std::vector<std::uint64_t> tree_center(const Tree& tree) {
  const std::uint64_t n = tree.size();
  if (n <= 2) {
    std::vector<std::uint64_t> all;
    for (std::uint64_t u = 0; u < n; ++u) {
      all.push_back(u);
    }
    return all;
  }

  DegreeStore degree(tree);
  BitSequence removed(n);
  ChoiceDictionary layer(n);
  ChoiceDictionary next_layer(n);
  for (std::uint64_t u = 0; u < n; ++u) {
    if (tree.degree(u) == 1) {
      layer.add(u);
    }
  }

  std::uint64_t k = 0;  // removed nodes
  while (n - k > 2) {
    for (std::uint64_t u = layer.choice(); u != ChoiceDictionary::npos; u = layer.choice()) {
      layer.remove(u);
      removed.set(u);
      ++k;
      for (std::uint32_t v : tree.neighbors(u)) {
        if (!removed.get(v)) {
          if (degree.decrement(v) == 1) {
            next_layer.add(v);
          }
          break;
        }
      }
    }
    std::swap(layer, next_layer);
  }

  std::vector<std::uint64_t> center;
  for (std::uint64_t u = layer.next(0); u != ChoiceDictionary::npos; u = layer.next(u + 1)) {
    center.push_back(u);
  }
  return center;
}

} // namespace sdn
