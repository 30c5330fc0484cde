#pragma once

// The ring R^{s,m} = A_{m-1}[v_m] / (v_m^m - v_m), A_{m-1} the subset algebra
// in m-1 variables. Elements are m coefficients in A_{m-1}, one per v_m-degree.
//
// Digit layout: digit (d, S) of an element sits at index d * 2^{m-1} + S.

#include "ringcodes/audit.hpp"
#include "ringcodes/bigint.hpp"
#include "ringcodes/error.hpp"
#include "ringcodes/residue.hpp"
#include "ringcodes/subset_algebra.hpp"
#include "ringcodes/zmodule.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ringcodes {

/// Exponent of v_m^e after applying v_m^m = v_m.
inline std::uint64_t reduce_exponent(std::uint64_t e, int m) {
  if (e < static_cast<std::uint64_t>(m)) return e;
  return ((e - 1) % static_cast<std::uint64_t>(m - 1)) + 1;
}

class TowerElement {
 public:
  explicit TowerElement(RingParams p) : p_(p), digits_((p.validate(), p.tower_dim()), 0) {}
  TowerElement(RingParams p, Digits digits) : TowerElement(p) {
    if (digits.size() != p.tower_dim())
      throw DimensionError("tower element needs " + std::to_string(p.tower_dim()) + " digits, got " +
                           std::to_string(digits.size()));
    const Zmod zm = ring();
    for (std::size_t i = 0; i < digits.size(); ++i) digits_[i] = zm.reduce(digits[i]);
  }

  static TowerElement one(RingParams p) { return constant(p, 1); }
  static TowerElement constant(RingParams p, std::int64_t c) {
    TowerElement r(p);
    r.digits_[0] = r.ring().from_signed(c);
    return r;
  }
  /// Embeds a ∈ A_{m-1} at v_m-degree `degree`.
  static TowerElement from_subset(RingParams p, const SubsetPoly& a, std::uint64_t degree = 0) {
    TowerElement r(p);
    if (a.vars() != static_cast<unsigned>(p.m - 1) || a.s() != static_cast<unsigned>(p.s))
      throw ContextError("subset algebra element does not belong to A_{m-1} of this tower");
    r.set_coefficient(reduce_exponent(degree, p.m), a);
    return r;
  }
  /// v_m^e, reduced.
  static TowerElement vm_power(RingParams p, std::uint64_t e) {
    TowerElement r(p);
    r.digits_[reduce_exponent(e, p.m) * p.subset_dim()] = 1;
    return r;
  }
  /// Unit vector of the digit basis: the monomial v_S v_m^d.
  static TowerElement basis(RingParams p, std::size_t digit_index) {
    TowerElement r(p);
    r.digits_.at(digit_index) = 1;
    return r;
  }

  const RingParams& params() const { return p_; }
  Zmod ring() const { return Zmod::for_s(static_cast<unsigned>(p_.s)); }
  const Digits& digits() const { return digits_; }
  std::uint64_t digit(std::size_t subset, std::size_t degree) const {
    return digits_[degree * p_.subset_dim() + subset];
  }

  SubsetPoly coefficient(std::size_t degree) const {
    const std::size_t dim = p_.subset_dim();
    Digits c(digits_.begin() + static_cast<std::ptrdiff_t>(degree * dim),
             digits_.begin() + static_cast<std::ptrdiff_t>((degree + 1) * dim));
    return SubsetPoly(static_cast<unsigned>(p_.m - 1), static_cast<unsigned>(p_.s), std::move(c));
  }
  void set_coefficient(std::size_t degree, const SubsetPoly& a) {
    const std::size_t dim = p_.subset_dim();
    std::copy(a.coeffs().begin(), a.coeffs().end(), digits_.begin() + static_cast<std::ptrdiff_t>(degree * dim));
  }

  bool is_zero() const {
    for (auto d : digits_)
      if (d != 0) return false;
    return true;
  }

  void check_same(const TowerElement& o) const {
    if (!(p_ == o.p_))
      throw ContextError("tower ring mismatch: (m=" + std::to_string(p_.m) + ", s=" + std::to_string(p_.s) +
                         ") vs (m=" + std::to_string(o.p_.m) + ", s=" + std::to_string(o.p_.s) + ")");
  }

  friend bool operator==(const TowerElement&, const TowerElement&) = default;

  friend TowerElement operator+(const TowerElement& a, const TowerElement& b) {
    a.check_same(b);
    TowerElement r = a;
    const Zmod zm = a.ring();
    for (std::size_t i = 0; i < r.digits_.size(); ++i) r.digits_[i] = zm.add(a.digits_[i], b.digits_[i]);
    return r;
  }
  friend TowerElement operator-(const TowerElement& a, const TowerElement& b) {
    a.check_same(b);
    TowerElement r = a;
    const Zmod zm = a.ring();
    for (std::size_t i = 0; i < r.digits_.size(); ++i) r.digits_[i] = zm.sub(a.digits_[i], b.digits_[i]);
    return r;
  }
  TowerElement scaled(std::uint64_t c) const {
    TowerElement r = *this;
    const Zmod zm = ring();
    for (auto& d : r.digits_) d = zm.mul(d, c);
    return r;
  }
  friend TowerElement operator*(const TowerElement& a, const TowerElement& b);

 private:
  RingParams p_;
  Digits digits_;
};

namespace detail {

/// Product of two digit vectors of R^{s,m}. In zeta coordinates the ring is
/// 2^{m-1} copies of Z_{4^s}[y]/(y^m - y), multiplied pointwise.
inline Digits tower_product(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b, int m,
                            const Zmod& zm) {
  const std::size_t dim = a.size() / static_cast<std::size_t>(m);
  Digits za(a.begin(), a.end());
  Digits zb(b.begin(), b.end());
  for (int d = 0; d < m; ++d) {
    zeta_in_place(std::span(za).subspan(static_cast<std::size_t>(d) * dim, dim), zm);
    zeta_in_place(std::span(zb).subspan(static_cast<std::size_t>(d) * dim, dim), zm);
  }
  Digits out(a.size(), 0);
  for (int d1 = 0; d1 < m; ++d1) {
    for (int d2 = 0; d2 < m; ++d2) {
      const std::size_t e = reduce_exponent(static_cast<std::uint64_t>(d1 + d2), m);
      const std::uint64_t* pa = za.data() + static_cast<std::size_t>(d1) * dim;
      const std::uint64_t* pb = zb.data() + static_cast<std::size_t>(d2) * dim;
      std::uint64_t* po = out.data() + e * dim;
      for (std::size_t S = 0; S < dim; ++S) po[S] += pa[S] * pb[S];
    }
  }
  for (auto& x : out) x = zm.reduce(x);
  for (int d = 0; d < m; ++d) mobius_in_place(std::span(out).subspan(static_cast<std::size_t>(d) * dim, dim), zm);
  return out;
}

}  // namespace detail

inline TowerElement tower_mul(const TowerElement& a, const TowerElement& b) {
  a.check_same(b);
  return TowerElement(a.params(), detail::tower_product(a.digits(), b.digits(), a.params().m, a.ring()));
}

inline TowerElement operator*(const TowerElement& a, const TowerElement& b) { return tower_mul(a, b); }

struct KappaSystem {
  TowerElement k1;
  TowerElement k2;
  TowerElement k3;

  const TowerElement& operator[](int l) const { return l == 1 ? k1 : (l == 2 ? k2 : k3); }
};

/// Exact check of sum-to-one, idempotency and pairwise orthogonality.
inline AuditReport verify_pierce(const KappaSystem& ks) {
  const RingParams p = ks.k1.params();
  const TowerElement one = TowerElement::one(p);
  const nlohmann::json ctx = {{"m", p.m}, {"s", p.s}};
  AuditReport report;

  const TowerElement sum = ks.k1 + ks.k2 + ks.k3;
  report.add("pierce.sum_to_one", "kappa_1 + kappa_2 + kappa_3 = 1", status_of(sum == one), {{"ring", ctx}});

  nlohmann::json idem = nlohmann::json::object();
  bool all_idem = true;
  bool nonzero = true;
  for (int l = 1; l <= 3; ++l) {
    const bool ok = ks[l] * ks[l] == ks[l];
    idem["kappa_" + std::to_string(l)] = ok;
    all_idem = all_idem && ok;
    nonzero = nonzero && !ks[l].is_zero();
  }
  report.add("pierce.idempotent", "kappa_i^2 = kappa_i and kappa_i != 0", status_of(all_idem && nonzero),
             {{"ring", ctx}, {"idempotent", idem}, {"all_nonzero", nonzero}});

  nlohmann::json orth = nlohmann::json::object();
  bool all_orth = true;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      const bool ok = (ks[i] * ks[j]).is_zero();
      orth["kappa_" + std::to_string(i) + "*kappa_" + std::to_string(j)] = ok;
      all_orth = all_orth && ok;
    }
  report.add("pierce.orthogonal", "kappa_i * kappa_j = 0 for i != j", status_of(all_orth),
             {{"ring", ctx}, {"products_zero", orth}});
  return report;
}

/// The three orthogonal idempotents, with 1/(m-1) realized as a unit inverse:
///   kappa_1 = eta_0 * (1/(m-1)) (v_m + ... + v_m^{m-1})
///   kappa_2 = eta_0 * (-1/(m-1)) (v_m + ... + v_m^{m-2} - (m-2) v_m^{m-1})
///   kappa_3 = 1 - eta_0 * v_m^{m-1}
/// with eta_0 = prod (1 - v_i). Throws InvariantError if the system fails verification.
inline KappaSystem kappa_system(RingParams p) {
  p.validate();
  const Zmod zm = Zmod::for_s(static_cast<unsigned>(p.s));
  const auto vars = static_cast<unsigned>(p.m - 1);
  const auto s = static_cast<unsigned>(p.s);
  const SubsetPoly eta0 = eta(vars, s, 0);
  const std::uint64_t inv = zm.inv(static_cast<std::uint64_t>(p.m - 1));

  TowerElement k1(p);
  TowerElement k2(p);
  for (int t = 1; t <= p.m - 1; ++t) {
    k1.set_coefficient(static_cast<std::size_t>(t), eta0.scaled(inv));
    const std::uint64_t bracket =
        t <= p.m - 2 ? 1 : zm.neg(static_cast<std::uint64_t>(p.m - 2));
    k2.set_coefficient(static_cast<std::size_t>(t), eta0.scaled(zm.mul(zm.neg(inv), bracket)));
  }
  TowerElement k3 = TowerElement::one(p) - TowerElement::from_subset(p, eta0, static_cast<std::uint64_t>(p.m - 1));

  KappaSystem ks{std::move(k1), std::move(k2), std::move(k3)};
  if (!verify_pierce(ks).all_pass())
    throw InvariantError("kappa system failed verification at m=" + std::to_string(p.m) + ", s=" +
                         std::to_string(p.s));
  return ks;
}

/// Position and unit value of the first (subset, degree) digit carrying a unit.
struct Marker {
  std::size_t subset;
  std::size_t degree;
  std::uint64_t unit;
};

struct BlockIdempotent {
  int l;               // kappa index, 1..3
  std::size_t subset;  // eta index
  TowerElement value;  // kappa_l * eta_S
  std::optional<Marker> marker;

  bool zero_block() const { return !marker.has_value(); }
};

inline std::optional<Marker> find_marker(const TowerElement& e) {
  const RingParams& p = e.params();
  const Zmod zm = e.ring();
  for (std::size_t S = 0; S < p.subset_dim(); ++S)
    for (std::size_t d = 0; d < static_cast<std::size_t>(p.m); ++d)
      if (zm.is_unit(e.digit(S, d))) return Marker{S, d, e.digit(S, d)};
  return std::nullopt;
}

/// The Z_{4^s}-span of {e * b : b a digit basis element} as a matrix of digit rows.
inline ZModMatrix multiplication_matrix(const TowerElement& e) {
  const RingParams& p = e.params();
  ZModMatrix M(e.ring(), p.tower_dim());
  for (std::size_t i = 0; i < p.tower_dim(); ++i) M.append_row((e * TowerElement::basis(p, i)).digits());
  return M;
}

/// |e * R^{s,m}| from the Howell form of the full multiplication matrix.
inline BigInt ideal_cardinality_dense(const TowerElement& e) { return span_cardinality(multiplication_matrix(e)); }

/// |e * R^{s,m}|. The zeta transform splits R^{s,m} into 2^{m-1} copies of
/// Z_{4^s}[y]/(y^m - y), so the ideal is the product of the m x m pointwise ideals.
inline BigInt ideal_cardinality(const TowerElement& e) {
  const RingParams& p = e.params();
  const Zmod zm = e.ring();
  const std::size_t dim = p.subset_dim();
  const auto m = static_cast<std::size_t>(p.m);
  Digits z = e.digits();
  for (std::size_t d = 0; d < m; ++d) zeta_in_place(std::span(z).subspan(d * dim, dim), zm);
  BigInt card = 1;
  for (std::size_t T = 0; T < dim; ++T) {
    ZModMatrix M(zm, m, m);
    for (std::size_t shift = 0; shift < m; ++shift)
      for (std::size_t d = 0; d < m; ++d) {
        const std::size_t target = reduce_exponent(d + shift, p.m);
        M.at(shift, target) = zm.add(M.at(shift, target), z[d * dim + T]);
      }
    card *= span_cardinality(M);
  }
  return card;
}

inline BigInt tower_cardinality(RingParams p) {
  return big_pow(BigInt(4), static_cast<std::uint64_t>(p.m) * static_cast<std::uint64_t>(p.s) * p.subset_dim());
}

/// A validated tower instance: its kappa system and the 3 * 2^{m-1} block
/// idempotents kappa_l * eta_S (block index (l-1) * 2^{m-1} + S). Immutable.
class TowerRing {
 public:
  explicit TowerRing(RingParams p) : p_((check_size(p), p)), kappas_(kappa_system(p)) {
    const auto vars = static_cast<unsigned>(p.m - 1);
    const auto s = static_cast<unsigned>(p.s);
    for (int l = 1; l <= 3; ++l) {
      for (std::size_t S = 0; S < p.subset_dim(); ++S) {
        TowerElement v = kappas_[l] * TowerElement::from_subset(p, eta(vars, s, S));
        if (!(v * v == v))
          throw InvariantError("block idempotent kappa_" + std::to_string(l) + " eta_" + std::to_string(S) +
                               " is not idempotent");
        auto marker = find_marker(v);
        if (!marker && !v.is_zero())
          throw InvariantError("nonzero block idempotent without a unit digit");
        blocks_.push_back(BlockIdempotent{l, S, std::move(v), marker});
      }
    }
  }

  const RingParams& params() const { return p_; }
  Zmod ring() const { return Zmod::for_s(static_cast<unsigned>(p_.s)); }
  unsigned vars() const { return static_cast<unsigned>(p_.m - 1); }
  const KappaSystem& kappas() const { return kappas_; }
  const std::vector<BlockIdempotent>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t block_index(int l, std::size_t subset) const {
    if (l < 1 || l > 3 || subset >= p_.subset_dim()) throw ParameterError("block (l, S) out of range");
    return static_cast<std::size_t>(l - 1) * p_.subset_dim() + subset;
  }
  const BlockIdempotent& block(int l, std::size_t subset) const { return blocks_[block_index(l, subset)]; }

  TowerElement one() const { return TowerElement::one(p_); }
  TowerElement zero() const { return TowerElement(p_); }
  BigInt cardinality() const { return tower_cardinality(p_); }

 private:
  // The block table holds 3 * 2^{m-1} elements of m * 2^{m-1} digits each.
  static void check_size(const RingParams& p) {
    p.validate();
    if (p.m > kMaxTowerRingM)
      throw ParameterError("the block idempotent table is limited to m <= " + std::to_string(kMaxTowerRingM) +
                           " (got m=" + std::to_string(p.m) + ")");
  }

  RingParams p_;
  KappaSystem kappas_;
  std::vector<BlockIdempotent> blocks_;
};

/// Exact checks on the block idempotents: each idempotent, distinct blocks
/// orthogonal, all blocks summing to one. The zero blocks are listed as evidence.
inline AuditReport verify_block_idempotents(const TowerRing& ring) {
  const auto& blocks = ring.blocks();
  const nlohmann::json ctx = {{"m", ring.params().m}, {"s", ring.params().s}};
  bool idem = true;
  bool orth = true;
  TowerElement sum = ring.zero();
  nlohmann::json zero_blocks = nlohmann::json::array();
  // All pairs up to 96 blocks (m <= 6); beyond that, pairs sharing l or S
  // and pairs whose subsets differ in one element.
  const bool exhaustive = blocks.size() <= 96;
  const std::size_t dim = ring.params().subset_dim();
  std::uint64_t pairs = 0;
  auto check_pair = [&](std::size_t i, std::size_t j) {
    ++pairs;
    if (!(blocks[i].value * blocks[j].value).is_zero()) orth = false;
  };
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    idem = idem && (b.value * b.value == b.value);
    sum = sum + b.value;
    if (b.zero_block()) zero_blocks.push_back({{"l", b.l}, {"subset", b.subset}});
    if (exhaustive) {
      for (std::size_t j = i + 1; j < blocks.size() && orth; ++j) check_pair(i, j);
      continue;
    }
    for (std::size_t j = i % dim + dim; j < blocks.size(); j += dim)
      if (j > i) check_pair(i, j);
    for (std::size_t bit = 1; bit < dim; bit <<= 1)
      if ((b.subset & bit) == 0) check_pair(i, i + bit);
  }
  AuditReport report;
  report.add("blocks.idempotent", "every kappa_l * eta_S is idempotent", status_of(idem),
             {{"ring", ctx}, {"blocks", blocks.size()}, {"zero_blocks", zero_blocks}});
  report.add("blocks.orthogonal", "distinct block idempotents multiply to zero", status_of(orth),
             {{"ring", ctx}, {"pairs_checked", pairs}, {"exhaustive", exhaustive}});
  report.add("blocks.sum_to_one", "block idempotents sum to one", status_of(sum == ring.one()), {{"ring", ctx}});
  return report;
}

/// Audits the decomposition claims: |k1 R| |k2 R| |k3 R| = |R| (direct sum), and
/// the stronger claim that each factor is the size of A_{m-1}.
inline AuditReport audit_ideal_sizes(const TowerRing& ring) {
  const RingParams& p = ring.params();
  const nlohmann::json ctx = {{"m", p.m}, {"s", p.s}};
  std::array<BigInt, 3> sizes;
  BigInt product = 1;
  for (int l = 1; l <= 3; ++l) {
    sizes[static_cast<std::size_t>(l - 1)] = ideal_cardinality(ring.kappas()[l]);
    product *= sizes[static_cast<std::size_t>(l - 1)];
  }
  const BigInt ring_size = ring.cardinality();
  const BigInt subset_size = big_pow(BigInt(4), static_cast<std::uint64_t>(p.s) * p.subset_dim());

  AuditReport report;
  report.add("ideal.direct_sum", "|kappa_1 R| |kappa_2 R| |kappa_3 R| = |R|", status_of(product == ring_size),
             {{"ring", ctx},
              {"product", to_string(product)},
              {"ring_size", to_string(ring_size)}});

  nlohmann::json factors = nlohmann::json::array();
  bool all_match = true;
  for (int l = 1; l <= 3; ++l) {
    const BigInt& sz = sizes[static_cast<std::size_t>(l - 1)];
    factors.push_back({{"l", l}, {"measured", to_string(sz)}, {"claimed", to_string(subset_size)}});
    all_match = all_match && sz == subset_size;
  }
  report.add("ideal.factor_sizes", "each kappa_i R has the size of A_{m-1}",
             all_match ? Status::pass : Status::measured_discrepancy,
             {{"ring", ctx}, {"factors", factors}, {"ring_size", to_string(ring_size)}});
  return report;
}

}  // namespace ringcodes
