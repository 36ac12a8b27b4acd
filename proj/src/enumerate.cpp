#include "irrbase/enumerate.hpp"

#include <stdexcept>
#include <unordered_set>

namespace irrbase {

std::optional<std::vector<GroupElement>> enumerate_elements(const std::vector<GroupElement>& gens, std::size_t limit) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  std::vector<GroupElement> out{identity_like(gens.front())};
  std::unordered_set<GroupElement, GroupElementHash> seen{out.front()};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& s : gens) {
      GroupElement g = compose(out[k], s);
      if (seen.insert(g).second) {
        if (out.size() >= limit) return std::nullopt;
        out.push_back(std::move(g));
      }
    }
  }
  return out;
}

}  // namespace irrbase
