#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "irrbase/element.hpp"

namespace irrbase {

inline constexpr std::size_t kEnumerationLimit = 100'000;

/// All elements of <gens> by breadth-first closure, identity first, or
/// nullopt once more than `limit` elements have been found.
std::optional<std::vector<GroupElement>> enumerate_elements(const std::vector<GroupElement>& gens,
                                                            std::size_t limit = kEnumerationLimit);

}  // namespace irrbase
