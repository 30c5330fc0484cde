#pragma once

// Linear codes over R^{s,m} assembled from per-block component codes.
//
// A code is described by one generator matrix over Z_{4^s} per block
// (l, S), l in {1,2,3}, S ⊆ {1..m-1}. Its codewords are
//     sum_{l,S} kappa_l eta_S * x_{l,S},   x_{l,S} in span(G_{l,S}),
// i.e. the Z_{4^s}-span of the block-scaled generator rows. Membership and
// counting happen in the digit expansion (n * m * 2^{m-1} coordinates).

#include "ringcodes/audit.hpp"
#include "ringcodes/bigint.hpp"
#include "ringcodes/error.hpp"
#include "ringcodes/gray_map.hpp"
#include "ringcodes/residue.hpp"
#include "ringcodes/tower_ring.hpp"
#include "ringcodes/zmodule.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <vector>

namespace ringcodes {

using Codeword = std::vector<TowerElement>;

class ComponentSpec {
 public:
  ComponentSpec(RingParams p, std::size_t n) : p_((p.validate(), p)), n_(n) {
    const Zmod zm = ring();
    blocks_.assign(3 * p.subset_dim(), ZModMatrix(zm, n));
  }

  const RingParams& params() const { return p_; }
  std::size_t n() const { return n_; }
  Zmod ring() const { return Zmod::for_s(static_cast<unsigned>(p_.s)); }
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t block_index(int l, std::size_t subset) const {
    if (l < 1 || l > 3 || subset >= p_.subset_dim()) throw ParameterError("block (l, S) out of range");
    return static_cast<std::size_t>(l - 1) * p_.subset_dim() + subset;
  }
  int block_l(std::size_t index) const { return static_cast<int>(index / p_.subset_dim()) + 1; }
  std::size_t block_subset(std::size_t index) const { return index % p_.subset_dim(); }

  const ZModMatrix& block(int l, std::size_t subset) const { return blocks_[block_index(l, subset)]; }
  const ZModMatrix& block_at(std::size_t index) const { return blocks_.at(index); }
  const std::vector<ZModMatrix>& blocks() const { return blocks_; }

  void set_block(int l, std::size_t subset, ZModMatrix rows) {
    if (rows.cols() != n_)
      throw DimensionError("block (" + std::to_string(l) + ", " + std::to_string(subset) + ") has " +
                           std::to_string(rows.cols()) + " columns, code length is " + std::to_string(n_));
    if (!(rows.ring() == ring())) throw ContextError("block matrix modulus differs from 4^s");
    blocks_[block_index(l, subset)] = std::move(rows);
  }
  void add_row(int l, std::size_t subset, std::span<const std::uint64_t> row) {
    blocks_[block_index(l, subset)].append_row(row);
  }

  /// Number of blocks with at least one generator row.
  std::size_t populated_blocks() const {
    return static_cast<std::size_t>(std::count_if(blocks_.begin(), blocks_.end(), [](const ZModMatrix& b) { return !b.empty(); }));
  }

 private:
  RingParams p_;
  std::size_t n_;
  std::vector<ZModMatrix> blocks_;
};

/// Per-block component vectors z_{l,S} (each of length n), indexed like ComponentSpec blocks.
struct Bundle {
  std::size_t n = 0;
  std::vector<Digits> components;

  static Bundle zero(std::size_t block_count, std::size_t n) { return {n, std::vector<Digits>(block_count, Digits(n, 0))}; }
  friend bool operator==(const Bundle&, const Bundle&) = default;
};

inline Digits codeword_digits(const Codeword& w) {
  Digits out;
  for (const auto& x : w) out.insert(out.end(), x.digits().begin(), x.digits().end());
  return out;
}

inline Codeword codeword_from_digits(RingParams p, std::size_t n, std::span<const std::uint64_t> digits) {
  const std::size_t dim = p.tower_dim();
  if (digits.size() != n * dim) throw DimensionError("digit vector length does not match n * m * 2^{m-1}");
  Codeword w;
  w.reserve(n);
  for (std::size_t i = 0; i < n; ++i) w.emplace_back(p, Digits(digits.begin() + static_cast<std::ptrdiff_t>(i * dim),
                                                               digits.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim)));
  return w;
}

/// sum over blocks of (kappa_l eta_S) * z_{l,S}.
inline Codeword compose(const TowerRing& ring, const Bundle& bundle) {
  if (bundle.components.size() != ring.block_count()) throw DimensionError("bundle has the wrong number of blocks");
  Codeword w(bundle.n, ring.zero());
  for (std::size_t b = 0; b < ring.block_count(); ++b) {
    const auto& z = bundle.components[b];
    if (z.size() != bundle.n) throw DimensionError("bundle component length differs from n");
    const auto& value = ring.blocks()[b].value;
    for (std::size_t p = 0; p < bundle.n; ++p)
      if (z[p] != 0) w[p] = w[p] + value.scaled(z[p]);
  }
  return w;
}

/// Triples whose letter-l monomial coefficient at S is z_{l,S}; the Gray image
/// of a bundle is phi_tuple of these.
inline std::vector<TripleRepr> bundle_triples(RingParams p, const Bundle& bundle) {
  const auto vars = static_cast<unsigned>(p.m - 1);
  const auto s = static_cast<unsigned>(p.s);
  const std::size_t dim = p.subset_dim();
  std::vector<TripleRepr> ts(bundle.n, TripleRepr::zero(vars, s));
  for (std::size_t b = 0; b < bundle.components.size(); ++b) {
    const int letter = static_cast<int>(b / dim);
    const std::size_t S = b % dim;
    for (std::size_t pos = 0; pos < bundle.n; ++pos) ts[pos].letter(letter).set(S, bundle.components[b][pos]);
  }
  return ts;
}

inline GrayVector phi_bundle(RingParams p, const Bundle& bundle) {
  const auto ts = bundle_triples(p, bundle);
  return phi_tuple(std::span<const TripleRepr>(ts));
}

struct GeneratorRow {
  int l;
  std::size_t subset;
  std::size_t row;  // index inside the block matrix
  bool degenerate;  // block idempotent is zero, so the row is zero
  Codeword word;
};

class RCode {
 public:
  RCode(std::shared_ptr<const TowerRing> ring, ComponentSpec spec)
      : ring_(std::move(ring)), spec_(std::move(spec)), digits_(spec_.ring(), spec_.n() * spec_.params().tower_dim()),
        span_(ZModMatrix(spec_.ring(), 0)) {
    if (!ring_) throw ParameterError("RCode needs a ring");
    if (!(ring_->params() == spec_.params())) throw ContextError("component spec and ring have different (m, s)");
    for (const auto& row : stacked_rows()) digits_.append_row(codeword_digits(row.word));
    span_ = RowSpan(digits_);
  }

  const TowerRing& ring() const { return *ring_; }
  std::shared_ptr<const TowerRing> ring_ptr() const { return ring_; }
  const ComponentSpec& spec() const { return spec_; }
  const RingParams& params() const { return spec_.params(); }
  std::size_t n() const { return spec_.n(); }

  /// Composed generator rows as digit vectors, one per block row.
  const ZModMatrix& generator_digits() const { return digits_; }
  const RowSpan& digit_span() const { return span_; }

  BigInt cardinality() const { return span_.cardinality(); }
  bool contains(const Codeword& w) const {
    if (w.size() != n()) throw DimensionError("word length differs from code length");
    return span_.contains(codeword_digits(w));
  }

  std::vector<GeneratorRow> stacked_rows() const {
    std::vector<GeneratorRow> rows;
    for (std::size_t b = 0; b < spec_.block_count(); ++b) {
      const auto& blk = ring_->blocks()[b];
      const auto& G = spec_.block_at(b);
      for (std::size_t r = 0; r < G.rows(); ++r) {
        Codeword w;
        w.reserve(n());
        for (std::size_t p = 0; p < n(); ++p) w.push_back(blk.value.scaled(G.at(r, p)));
        rows.push_back(GeneratorRow{blk.l, blk.subset, r, blk.zero_block(), std::move(w)});
      }
    }
    return rows;
  }

 private:
  std::shared_ptr<const TowerRing> ring_;
  ComponentSpec spec_;
  ZModMatrix digits_;
  RowSpan span_;
};

inline RCode build_code(std::shared_ptr<const TowerRing> ring, ComponentSpec spec) {
  return RCode(std::move(ring), std::move(spec));
}

/// Rows kappa_l eta_S g, blocks ordered l outer and S inner; rows from zero blocks are kept and flagged.
inline std::vector<GeneratorRow> stacked_generator(const RCode& code) { return code.stacked_rows(); }

/// Recovers the component vectors of a codeword: multiplying by kappa_l eta_S
/// isolates block (l, S), whose marker digit equals x * (marker unit).
/// Zero blocks carry no information and come back as zero vectors.
inline Bundle extract_components(const RCode& code, const Codeword& w) {
  if (!code.contains(w)) throw MembershipError("word is not a codeword of this code");
  const TowerRing& ring = code.ring();
  const Zmod zm = ring.ring();
  Bundle out = Bundle::zero(ring.block_count(), code.n());
  for (std::size_t b = 0; b < ring.block_count(); ++b) {
    const auto& blk = ring.blocks()[b];
    if (blk.zero_block()) continue;
    const std::uint64_t unit_inv = zm.inv(blk.marker->unit);
    for (std::size_t p = 0; p < code.n(); ++p) {
      const TowerElement part = w[p] * blk.value;
      out.components[b][p] = zm.mul(part.digit(blk.marker->subset, blk.marker->degree), unit_inv);
    }
  }
  return out;
}

struct CardinalityReport {
  BigInt measured;
  BigInt paper_product;    // product over all 3 * 2^{m-1} block spans
  BigInt nonzero_product;  // product over blocks with nonzero idempotent
  Status verdict = Status::fail;

  nlohmann::json to_json() const {
    return {{"measured", to_string(measured)},
            {"paper_product", to_string(paper_product)},
            {"nonzero_block_product", to_string(nonzero_product)},
            {"verdict", ringcodes::to_string(verdict)}};
  }
};

inline CardinalityReport code_cardinality(const RCode& code) {
  CardinalityReport r;
  r.measured = code.cardinality();
  r.paper_product = 1;
  r.nonzero_product = 1;
  for (std::size_t b = 0; b < code.spec().block_count(); ++b) {
    const BigInt c = span_cardinality(code.spec().block_at(b));
    r.paper_product *= c;
    if (!code.ring().blocks()[b].zero_block()) r.nonzero_product *= c;
  }
  r.verdict = r.measured == r.paper_product ? Status::pass : Status::measured_discrepancy;
  return r;
}

/// Code built from the blockwise duals of the component generator matrices.
inline RCode dual_code(const RCode& code) {
  ComponentSpec dual(code.params(), code.n());
  for (std::size_t b = 0; b < code.spec().block_count(); ++b) {
    const int l = code.spec().block_l(b);
    const std::size_t S = code.spec().block_subset(b);
    dual.set_block(l, S, dual_generators(code.spec().block_at(b), code.n()));
  }
  return RCode(code.ring_ptr(), std::move(dual));
}

/// sum_i x_i y_i in R^{s,m}.
inline TowerElement inner_product(const Codeword& x, const Codeword& y) {
  if (x.size() != y.size()) throw DimensionError("inner product of words of different length");
  if (x.empty()) throw DimensionError("inner product of empty words");
  TowerElement acc(x[0].params());
  for (std::size_t i = 0; i < x.size(); ++i) acc = acc + x[i] * y[i];
  return acc;
}

namespace detail {

inline Bundle unit_bundle(const ComponentSpec& spec, std::size_t block, std::span<const std::uint64_t> row) {
  Bundle b = Bundle::zero(spec.block_count(), spec.n());
  b.components[block].assign(row.begin(), row.end());
  return b;
}

}  // namespace detail

/// Gray image of every block generator row: the row of block (l, S) occupies
/// letter l at every subset column T ⊇ S. Rows of zero blocks are included.
inline ZModMatrix gray_generator_matrix(const RCode& code) {
  const auto& spec = code.spec();
  ZModMatrix G(spec.ring(), 3 * spec.params().subset_dim() * spec.n());
  for (std::size_t b = 0; b < spec.block_count(); ++b)
    for (std::size_t r = 0; r < spec.block_at(b).rows(); ++r)
      G.append_row(phi_bundle(spec.params(), detail::unit_bundle(spec, b, spec.block_at(b).row(r))).coords);
  return G;
}

/// Generators of Phi(C) = { Phi(extract_components(w)) : w in C }: the Gray
/// rows of the blocks whose idempotent is nonzero.
inline ZModMatrix gray_image_generators(const RCode& code) {
  const auto& spec = code.spec();
  ZModMatrix G(spec.ring(), 3 * spec.params().subset_dim() * spec.n());
  for (std::size_t b = 0; b < spec.block_count(); ++b) {
    if (code.ring().blocks()[b].zero_block()) continue;
    for (std::size_t r = 0; r < spec.block_at(b).rows(); ++r)
      G.append_row(phi_bundle(spec.params(), detail::unit_bundle(spec, b, spec.block_at(b).row(r))).coords);
  }
  return G;
}

/// Span over Z_{4^s} of { w * b : w generator row, b a digit basis element },
/// i.e. the R^{s,m}-submodule generated by the code.
inline ZModMatrix r_span_generators(const RCode& code) {
  const RingParams& p = code.params();
  ZModMatrix M(code.spec().ring(), code.n() * p.tower_dim());
  for (const auto& row : code.stacked_rows()) {
    if (row.degenerate) continue;
    for (std::size_t i = 0; i < p.tower_dim(); ++i) {
      const TowerElement basis = TowerElement::basis(p, i);
      Codeword w;
      w.reserve(row.word.size());
      for (const auto& x : row.word) w.push_back(x * basis);
      M.append_row(codeword_digits(w));
    }
  }
  return M;
}

/// Whether the Z_{4^s}-span is closed under multiplication by v_1..v_m,
/// i.e. whether it is an R^{s,m}-submodule.
inline AuditEntry r_closure_audit(const RCode& code) {
  const RingParams& p = code.params();
  const auto vars = static_cast<unsigned>(p.m - 1);
  std::vector<std::pair<std::string, TowerElement>> mults;
  for (unsigned i = 1; i <= vars; ++i)
    mults.emplace_back("v_" + std::to_string(i),
                       TowerElement::from_subset(p, SubsetPoly::variable(vars, static_cast<unsigned>(p.s), i)));
  mults.emplace_back("v_" + std::to_string(p.m), TowerElement::vm_power(p, 1));

  nlohmann::json witness = nullptr;
  for (const auto& row : code.stacked_rows()) {
    if (row.degenerate) continue;
    for (const auto& [name, v] : mults) {
      Codeword w;
      for (const auto& x : row.word) w.push_back(v * x);
      if (!code.contains(w)) {
        witness = {{"generator", {{"l", row.l}, {"subset", row.subset}, {"row", row.row}}}, {"multiplier", name}};
        break;
      }
    }
    if (!witness.is_null()) break;
  }
  const BigInt z_card = code.cardinality();
  const BigInt r_card = span_cardinality(r_span_generators(code));
  return AuditEntry{"code.r_closure", "the Z_{4^s}-span is closed under multiplication by v_1..v_m",
                    witness.is_null() ? Status::pass : Status::measured_discrepancy,
                    {{"closed", witness.is_null()},
                     {"witness", witness},
                     {"z_span_cardinality", to_string(z_card)},
                     {"r_span_cardinality", to_string(r_card)}}};
}

/// Size of the exact dual { x in R^n : <x, y> = 0 for all y in C }, computed as
/// the kernel of the Z_{4^s}-linear map x -> (<x, g>)_g over the generators.
inline BigInt ambient_dual_cardinality(const RCode& code) {
  const RingParams& p = code.params();
  const std::size_t dim = p.tower_dim();
  std::vector<Codeword> gens;
  for (auto& row : code.stacked_rows())
    if (!row.degenerate) gens.push_back(std::move(row.word));
  if (gens.empty()) return big_pow(tower_cardinality(p), code.n());

  ZModMatrix A(code.spec().ring(), gens.size() * dim);
  for (std::size_t pos = 0; pos < code.n(); ++pos) {
    for (std::size_t i = 0; i < dim; ++i) {
      const TowerElement basis = TowerElement::basis(p, i);
      Digits row;
      row.reserve(gens.size() * dim);
      for (const auto& g : gens) {
        const TowerElement prod = basis * g[pos];
        row.insert(row.end(), prod.digits().begin(), prod.digits().end());
      }
      A.append_row(row);
    }
  }
  return span_cardinality(left_kernel(A));
}

struct WeightOptions {
  BigInt budget = BigInt(1) << 20;
  std::optional<std::uint64_t> seed;  // required when sampling
  std::size_t samples = 4096;
  unsigned workers = 1;
};

struct WeightReport {
  bool exhaustive = true;
  BigInt examined = 0;
  std::optional<std::size_t> min_hamming;
  std::optional<std::uint64_t> min_gray;

  nlohmann::json to_json() const {
    nlohmann::json j = {{"method", exhaustive ? "exhaustive" : "sampled (upper bound on the minimum)"},
                        {"examined", to_string(examined)}};
    j["min_hamming"] = min_hamming ? nlohmann::json(*min_hamming) : nlohmann::json(nullptr);
    j["min_gray"] = min_gray ? nlohmann::json(*min_gray) : nlohmann::json(nullptr);
    return j;
  }
};

namespace detail {

inline std::size_t position_weight(const Digits& digits, std::size_t dim) {
  std::size_t w = 0;
  for (std::size_t start = 0; start < digits.size(); start += dim)
    w += std::any_of(digits.begin() + static_cast<std::ptrdiff_t>(start),
                     digits.begin() + static_cast<std::ptrdiff_t>(start + dim), [](auto d) { return d != 0; });
  return w;
}

/// Minimum of f over nonzero span elements, split over `workers` threads.
/// The merge takes the minimum, so the result does not depend on the split.
template <class F>
std::optional<std::uint64_t> min_over_span(const RowSpan& span, unsigned workers, F f) {
  const auto total = static_cast<std::uint64_t>(span.cardinality());
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));
  std::vector<std::optional<std::uint64_t>> best(workers);
  auto run = [&](unsigned w) {
    const std::uint64_t first = total * w / workers;
    const std::uint64_t last = total * (w + 1) / workers;
    span.for_each_in_range(first, last - first, [&](const Digits& v) {
      if (detail::is_zero(v)) return;
      const std::uint64_t x = f(v);
      if (!best[w] || x < *best[w]) best[w] = x;
    });
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  std::optional<std::uint64_t> out;
  for (const auto& b : best)
    if (b && (!out || *b < *out)) out = b;
  return out;
}

}  // namespace detail

/// Minimum Hamming weight (over R^{s,m} positions) and minimum Gray (Lee)
/// weight. Exhaustive when |C| <= budget, otherwise a seeded random sample,
/// whose minima are only upper bounds.
inline WeightReport min_weight_report(const RCode& code, const WeightOptions& opt = {}) {
  WeightReport rep;
  const BigInt card = code.cardinality();
  const RowSpan gray_span(gray_image_generators(code));
  const std::size_t dim = code.params().tower_dim();
  const Zmod zm = code.spec().ring();
  if (card <= opt.budget) {
    rep.exhaustive = true;
    rep.examined = card;
    if (auto h = detail::min_over_span(code.digit_span(), opt.workers,
                                       [&](const Digits& v) { return detail::position_weight(v, dim); }))
      rep.min_hamming = static_cast<std::size_t>(*h);
    rep.min_gray = detail::min_over_span(gray_span, opt.workers, [&](const Digits& v) { return lee_weight(zm, v); });
    return rep;
  }
  if (!opt.seed) throw ParameterError("code too large for exhaustive enumeration; a seed is required for sampling");
  rep.exhaustive = false;
  rep.examined = opt.samples;
  std::mt19937_64 rng(*opt.seed);
  auto draw = [&](const RowSpan& span) {
    BigInt idx = 0;
    const BigInt c = span.cardinality();
    // rejection-free: assemble a multiplier per basis row (bounds are powers of two)
    BigInt scale = 1;
    for (std::size_t i = 0; i < span.basis().rows(); ++i) {
      const std::uint64_t bound = span.multiplier_bound(i);
      idx += scale * (rng() & (bound - 1));
      scale *= bound;
    }
    return span.element(idx % c);
  };
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const Digits v = draw(code.digit_span());
    if (!detail::is_zero(v)) {
      const std::size_t h = detail::position_weight(v, dim);
      if (!rep.min_hamming || h < *rep.min_hamming) rep.min_hamming = h;
    }
    const Digits g = draw(gray_span);
    if (!detail::is_zero(g)) {
      const std::uint64_t lw = lee_weight(zm, g);
      if (!rep.min_gray || lw < *rep.min_gray) rep.min_gray = lw;
    }
  }
  return rep;
}

}  // namespace ringcodes
