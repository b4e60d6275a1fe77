#pragma once

#include <vector>

#include "tvsum/complexes.hpp"

namespace tvsum {

using GLabeling = std::vector<int>;     // region -> group element
using GaugeElement = std::vector<int>;  // ball -> group element

// All labelings satisfying the product condition, in lexicographic order.
std::vector<GLabeling> enumerate_labelings(const Skeleton& s, const FiniteGroup& g);

// (lambda l)(r) = lambda(r_-) l(r) lambda(r_+)^-1
GLabeling gauge_act(const Skeleton& s, const FiniteGroup& g, const GaugeElement& lambda, const GLabeling& l);

struct GaugeOrbit {
  GLabeling representative;  // lexicographically least member
  std::vector<int> members;  // indices into the input list, ascending
};

// Orbits sorted by representative. Throws DomainError if the list is not closed under the action.
std::vector<GaugeOrbit> gauge_orbits(const Skeleton& s, const FiniteGroup& g, const std::vector<GLabeling>& labelings);

}  // namespace tvsum
