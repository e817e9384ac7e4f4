#pragma once

// Center of a tree by repeated removal of all current leaves. Degrees are
// kept as self-delimiting numbers in slots addressed through a marker bit
// vector, and decremented in place; the current and next leaf layers are
// choice dictionaries.

#include "sdn/tree.hpp"

#include <cstdint>
#include <vector>

namespace sdn {

/// The one or two nodes of minimum eccentricity, ascending.
std::vector<std::uint64_t> tree_center(const Tree& tree);

} // namespace sdn
