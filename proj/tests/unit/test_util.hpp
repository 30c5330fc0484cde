#pragma once

#include "ringcodes/ringcodes.hpp"

#include <map>
#include <memory>
#include <random>

namespace testutil {

inline std::shared_ptr<const ringcodes::TowerRing> tower(int m, int s) {
  static std::map<std::pair<int, int>, std::shared_ptr<const ringcodes::TowerRing>> cache;
  auto& slot = cache[{m, s}];
  if (!slot) slot = std::make_shared<const ringcodes::TowerRing>(ringcodes::RingParams{m, s});
  return slot;
}

inline ringcodes::Digits random_digits(std::size_t n, const ringcodes::Zmod& zm, std::mt19937_64& rng) {
  ringcodes::Digits d(n);
  for (auto& x : d) x = zm.reduce(rng());
  return d;
}

inline ringcodes::SubsetPoly random_subset(unsigned vars, unsigned s, std::mt19937_64& rng) {
  return ringcodes::SubsetPoly(vars, s, random_digits(std::size_t{1} << vars, ringcodes::Zmod::for_s(s), rng));
}

inline ringcodes::TowerElement random_tower(ringcodes::RingParams p, std::mt19937_64& rng) {
  return ringcodes::TowerElement(p, random_digits(p.tower_dim(), ringcodes::Zmod::for_s(static_cast<unsigned>(p.s)), rng));
}

}  // namespace testutil
