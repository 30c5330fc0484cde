#pragma once

// The complete claim audit for one (m, s): Pierce system, eta system, ideal
// sizes, block idempotents, the tau statement, the block code constructions
// (cardinality, duality, Gray images) and the family length formulas.

#include "ringcodes/audit.hpp"
#include "ringcodes/code_builder.hpp"
#include "ringcodes/code_families.hpp"
#include "ringcodes/cyclic_qc.hpp"
#include "ringcodes/gray_map.hpp"
#include "ringcodes/subset_algebra.hpp"
#include "ringcodes/tower_ring.hpp"

#include <memory>

namespace ringcodes {

struct VerifyOptions {
  std::size_t n = 1;           // code length for the code-level audits
  std::uint64_t seed = 1;      // random non-idempotents for the tau converse probe
  std::size_t tau_samples = 10;
  /// Largest n * m * 2^{m-1} for which the exact ambient dual is computed.
  std::size_t ambient_dual_limit = 256;
};

/// Every block populated with the all-ones row, including blocks whose idempotent is zero.
inline ComponentSpec all_blocks_spec(RingParams p, std::size_t n) {
  ComponentSpec spec(p, n);
  const Digits ones(n, 1);
  for (std::size_t b = 0; b < spec.block_count(); ++b) spec.add_row(spec.block_l(b), spec.block_subset(b), ones);
  return spec;
}

/// Audits of the block code built from `spec`.
inline AuditReport audit_code(const RCode& code, const VerifyOptions& opt = {}) {
  AuditReport rep;
  const auto card = code_cardinality(code);
  const nlohmann::json ctx = {{"m", code.params().m},
                              {"s", code.params().s},
                              {"n", code.n()},
                              {"populated_blocks", code.spec().populated_blocks()}};

  rep.add("code.cardinality_product", "|C| equals the product of all block code sizes", card.verdict,
          {{"code", ctx}, {"cardinality", card.to_json()}});
  rep.add("code.cardinality_nonzero_blocks", "|C| equals the product over blocks with nonzero idempotent",
          status_of(card.measured == card.nonzero_product), {{"code", ctx}, {"cardinality", card.to_json()}});

  // The inner product is Z_{4^s}-bilinear, so generator pairs decide orthogonality.
  const RCode dual = dual_code(code);
  std::uint64_t pairs = 0;
  nlohmann::json witness = nullptr;
  const auto rows = code.stacked_rows();
  const auto dual_rows = dual.stacked_rows();
  for (const auto& x : dual_rows)
    for (const auto& y : rows) {
      ++pairs;
      if (!inner_product(x.word, y.word).is_zero() && witness.is_null())
        witness = {{"dual_block", {x.l, x.subset}}, {"code_block", {y.l, y.subset}}};
    }
  rep.add("code.duality", "blockwise dual codewords are orthogonal to every codeword", status_of(witness.is_null()),
          {{"code", ctx}, {"generator_pairs", pairs}, {"witness", witness}});

  if (code.n() * code.params().tower_dim() <= opt.ambient_dual_limit) {
    const BigInt blockwise = dual.cardinality();
    const BigInt ambient = ambient_dual_cardinality(code);
    rep.add("code.dual_is_full_dual", "the blockwise dual is the whole orthogonal complement in R^n",
            blockwise == ambient ? Status::pass : Status::measured_discrepancy,
            {{"code", ctx}, {"blockwise_dual", to_string(blockwise)}, {"orthogonal_complement", to_string(ambient)}});
  }

  rep.add(r_closure_audit(code));

  const BigInt gray_all = span_cardinality(gray_generator_matrix(code));
  rep.add("gray.generator_matrix", "Gray rows span Phi of the component span (Phi injective on bundles)",
          status_of(gray_all == card.paper_product),
          {{"code", ctx},
           {"gray_span", to_string(gray_all)},
           {"component_span_product", to_string(card.paper_product)}});
  const BigInt gray_image = span_cardinality(gray_image_generators(code));
  rep.add("gray.image_cardinality", "|Phi(C)| = |C|", status_of(gray_image == card.measured),
          {{"code", ctx}, {"gray_image", to_string(gray_image)}, {"code_size", to_string(card.measured)}});
  return rep;
}

inline AuditReport verify_all(RingParams p, const VerifyOptions& opt = {}) {
  auto ring = std::make_shared<const TowerRing>(p);
  AuditReport rep;
  rep.append(verify_pierce(ring->kappas()));
  rep.append(verify_eta_system(static_cast<unsigned>(p.m - 1), static_cast<unsigned>(p.s)));
  rep.append(audit_ideal_sizes(*ring));
  rep.append(verify_block_idempotents(*ring));

  TauAuditOptions lo;
  lo.seed = opt.seed;
  lo.samples = opt.tau_samples;
  if (p.m > 4) lo.lengths = {1, 3};
  rep.append(tau_idempotence_audit(*ring, lo));

  rep.append(audit_code(RCode(ring, all_blocks_spec(p, opt.n)), opt));

  rep.append(family_length_audit(p, 1));
  rep.append(family_length_audit(p, 2, 1));
  return rep;
}

}  // namespace ringcodes
