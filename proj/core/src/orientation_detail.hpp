#pragma once

#include <cstdint>
#include <utility>

#include "polyrec/orientation.hpp"

namespace polyrec::detail {

// (fixed_mask, fixed_dir) encoding of the constraints over g's edge list;
// throws bad_index for unknown edges and inconsistent_constraints when an
// edge is forced both ways or the forced part has a directed cycle
std::pair<std::uint64_t, std::uint64_t> forced_bits(const Graph& g,
                                                    const OrientationConstraints& c);

} // namespace polyrec::detail
