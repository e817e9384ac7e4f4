#include "sdn/classification_store.hpp"

#include "sdn/errors.hpp"

#include <string>

namespace sdn {

ClassificationStore::ClassificationStore(const BalancedParens& tree, unsigned scale, unsigned arity)
    : tree_(&tree), scale_(scale), arity_(arity), bits_(scale * (tree.size() - 1) + 1) {
  if (scale == 0 || arity == 0 || arity > 2) {
    throw ConfigError("classification store needs scale >= 1 and arity 1 or 2");
  }
}

void ClassificationStore::write(std::uint64_t u, std::uint64_t x) {
  const std::uint64_t n = tree_->nodes();
  const std::uint64_t desc = tree_->subtree_size(u);
  const std::uint64_t exp_cap = 2 * desc * scale_ / kDefaultScale;
  const bool over_exp = exp_cap < 64 && x > (std::uint64_t{1} << exp_cap);
  const bool over_poly = n < (std::uint64_t{1} << 32) && x > n * n;
  if (arity_ != 1 || over_exp || over_poly || encoded_length(x) > slot_bits(u)) {
    throw PreconditionViolation("value " + std::to_string(x) + " does not fit the slot of node " +
                                std::to_string(tree_->node_id(u)));
  }
  write_codeword(bits_, slot_begin(u), x);
}

std::uint64_t ClassificationStore::read(std::uint64_t u) const {
  return codeword_value_u64(bits_, codeword_at(slot_begin(u)));
}

void ClassificationStore::write_pair(std::uint64_t u, std::uint64_t first, std::uint64_t second) {
  const std::uint64_t len = encoded_length(first) + encoded_length(second);
  if (arity_ != 2 || len > slot_bits(u)) {
    throw PreconditionViolation("pair (" + std::to_string(first) + ", " + std::to_string(second) +
                                ") needs " + std::to_string(len) + " bits; slot of node " +
                                std::to_string(tree_->node_id(u)) + " has " + std::to_string(slot_bits(u)));
  }
  const std::uint64_t p = write_codeword(bits_, slot_begin(u), first);
  write_codeword(bits_, p, second);
}

std::pair<std::uint64_t, std::uint64_t> ClassificationStore::read_pair(std::uint64_t u) const {
  const Codeword a = codeword_at(slot_begin(u));
  const Codeword b = codeword_at(a.end());
  return {codeword_value_u64(bits_, a), codeword_value_u64(bits_, b)};
}

std::uint64_t ClassificationStore::record_bits(std::uint64_t u) const {
  std::uint64_t p = slot_begin(u);
  for (unsigned i = 0; i < arity_; ++i) {
    p = codeword_at(p).end();
  }
  return p - slot_begin(u);
}

std::uint64_t ClassificationStore::copy_record(std::uint64_t u, BitSequence& out, std::uint64_t at) const {
  const std::uint64_t len = record_bits(u);
  copy_bits(bits_, slot_begin(u), out, at, len);
  return len;
}

SdnSequence ClassificationStore::vector(std::uint64_t u) const {
  std::uint64_t total = 0;
  for (std::uint64_t c = tree_->first_child(u); c != BalancedParens::npos; c = tree_->right_sibling(c)) {
    total += record_bits(c);
  }
  SdnSequence out(total);
  for (std::uint64_t c = tree_->first_child(u); c != BalancedParens::npos; c = tree_->right_sibling(c)) {
    std::uint64_t p = slot_begin(c);
    for (unsigned i = 0; i < arity_; ++i) {
      const Codeword cw = codeword_at(p);
      out.append_codeword(bits_, cw);
      p = cw.end();
    }
  }
  return out;
}

} // namespace sdn
