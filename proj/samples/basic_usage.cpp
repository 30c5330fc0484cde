// Builds a small block code over R^{1,4}, then prints its size, the size
// predicted by the block product, its blockwise dual and its Gray image.

#include "ringcodes/ringcodes.hpp"

#include <iostream>
#include <memory>

int main() {
  using namespace ringcodes;
  const RingParams p{4, 1};
  auto ring = std::make_shared<const TowerRing>(p);

  ComponentSpec spec(p, 2);
  const std::uint64_t repetition[] = {1, 1};
  const std::uint64_t even[] = {2, 0};
  spec.add_row(1, 0, repetition);  // kappa_1 eta_0 (1, 1)
  spec.add_row(3, 0b001, even);    // eta_{1} (2, 0)
  spec.add_row(2, 0b011, repetition);  // kappa_2 eta_{12} is zero

  const RCode code(ring, spec);
  const auto card = code_cardinality(code);
  std::cout << "|C| = " << to_string(card.measured) << " (block product " << to_string(card.paper_product)
            << ", nonzero blocks " << to_string(card.nonzero_product) << ")\n";

  const RCode dual = dual_code(code);
  std::cout << "|blockwise dual| = " << to_string(dual.cardinality()) << '\n';

  const BigInt gray = span_cardinality(gray_image_generators(code));
  std::cout << "|Phi(C)| = " << to_string(gray) << '\n';

  WeightOptions wo;
  const auto w = min_weight_report(code, wo);
  std::cout << "min Hamming " << *w.min_hamming << ", min Gray " << *w.min_gray << '\n';
}
