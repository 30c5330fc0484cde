#pragma once

// The algebra A = Z_{4^s}[v_1..v_r]/(v_i^2 = v_i, v_i v_j = v_j v_i).
//
// An element is stored by its monomial coefficients, indexed by bitmask
// subsets S of {1..r} (bit i-1 set <=> v_i divides the monomial). Monomials
// multiply by union, x_S * x_T = x_{S ∪ T}, so the zeta transform over the
// subset lattice (evaluation at the 0/1 points) diagonalizes the product.

#include "ringcodes/audit.hpp"
#include "ringcodes/error.hpp"
#include "ringcodes/residue.hpp"

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ringcodes {

/// c[S] <- sum_{T ⊆ S} c[T], in place.
inline void zeta_in_place(std::span<std::uint64_t> c, const Zmod& zm) {
  const std::size_t size = c.size();
  for (std::size_t bit = 1; bit < size; bit <<= 1)
    for (std::size_t mask = 0; mask < size; ++mask)
      if (mask & bit) c[mask] = zm.add(c[mask], c[mask ^ bit]);
}

/// Inverse of zeta_in_place.
inline void mobius_in_place(std::span<std::uint64_t> c, const Zmod& zm) {
  const std::size_t size = c.size();
  for (std::size_t bit = 1; bit < size; bit <<= 1)
    for (std::size_t mask = 0; mask < size; ++mask)
      if (mask & bit) c[mask] = zm.sub(c[mask], c[mask ^ bit]);
}

class SubsetPoly {
 public:
  /// The zero element of A with `vars` idempotent variables over Z_{4^s}.
  SubsetPoly(unsigned vars, unsigned s) : vars_(vars), s_(s), coeffs_(std::size_t{1} << vars, 0) {
    Zmod::for_s(s);
    if (vars > 20) throw ParameterError("subset algebra supports at most 20 variables");
  }
  SubsetPoly(unsigned vars, unsigned s, Digits coeffs) : SubsetPoly(vars, s) {
    if (coeffs.size() != dim())
      throw DimensionError("SubsetPoly needs " + std::to_string(dim()) + " coefficients, got " +
                           std::to_string(coeffs.size()));
    const Zmod zm = ring();
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs_[i] = zm.reduce(coeffs[i]);
  }

  static SubsetPoly constant(unsigned vars, unsigned s, std::int64_t c) {
    return monomial(vars, s, 0, c);
  }
  static SubsetPoly monomial(unsigned vars, unsigned s, std::size_t subset, std::int64_t c) {
    SubsetPoly p(vars, s);
    if (subset >= p.dim()) throw ParameterError("subset bitmask out of range");
    p.coeffs_[subset] = p.ring().from_signed(c);
    return p;
  }
  /// v_i for 1 <= i <= vars.
  static SubsetPoly variable(unsigned vars, unsigned s, unsigned i) {
    if (i < 1 || i > vars) throw ParameterError("variable index out of range");
    return monomial(vars, s, std::size_t{1} << (i - 1), 1);
  }

  unsigned vars() const { return vars_; }
  unsigned s() const { return s_; }
  std::size_t dim() const { return coeffs_.size(); }
  Zmod ring() const { return Zmod::for_s(s_); }

  const Digits& coeffs() const { return coeffs_; }
  std::uint64_t operator[](std::size_t subset) const { return coeffs_[subset]; }
  void set(std::size_t subset, std::uint64_t value) { coeffs_[subset] = ring().reduce(value); }

  bool is_zero() const {
    for (auto c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  friend bool operator==(const SubsetPoly&, const SubsetPoly&) = default;

  void check_same(const SubsetPoly& o) const {
    if (vars_ != o.vars_ || s_ != o.s_)
      throw ContextError("subset algebra mismatch: (vars=" + std::to_string(vars_) + ", s=" +
                         std::to_string(s_) + ") vs (vars=" + std::to_string(o.vars_) +
                         ", s=" + std::to_string(o.s_) + ")");
  }

  friend SubsetPoly operator+(const SubsetPoly& a, const SubsetPoly& b) {
    a.check_same(b);
    SubsetPoly r = a;
    const Zmod zm = a.ring();
    for (std::size_t i = 0; i < r.dim(); ++i) r.coeffs_[i] = zm.add(a.coeffs_[i], b.coeffs_[i]);
    return r;
  }
  friend SubsetPoly operator-(const SubsetPoly& a, const SubsetPoly& b) {
    a.check_same(b);
    SubsetPoly r = a;
    const Zmod zm = a.ring();
    for (std::size_t i = 0; i < r.dim(); ++i) r.coeffs_[i] = zm.sub(a.coeffs_[i], b.coeffs_[i]);
    return r;
  }
  SubsetPoly scaled(std::uint64_t c) const {
    SubsetPoly r = *this;
    const Zmod zm = ring();
    for (auto& x : r.coeffs_) x = zm.mul(x, c);
    return r;
  }
  friend SubsetPoly operator*(const SubsetPoly& a, const SubsetPoly& b);

 private:
  unsigned vars_;
  unsigned s_;
  Digits coeffs_;
};

/// Coordinates of `a` at every 0/1 point: entry S is a evaluated at
/// v_i = 1 for i in S and v_i = 0 otherwise, i.e. sum_{T ⊆ S} a_T.
inline Digits zeta_transform(const SubsetPoly& a) {
  Digits c = a.coeffs();
  zeta_in_place(c, a.ring());
  return c;
}

inline SubsetPoly mobius_transform(std::span<const std::uint64_t> coords, unsigned vars, unsigned s) {
  if (vars > 20 || coords.size() != (std::size_t{1} << vars))
    throw DimensionError("coordinate vector has length " + std::to_string(coords.size()) +
                         ", expected 2^" + std::to_string(vars));
  Digits c(coords.begin(), coords.end());
  const Zmod zm = Zmod::for_s(s);
  for (auto& x : c) x = zm.reduce(x);
  mobius_in_place(c, zm);
  return SubsetPoly(vars, s, std::move(c));
}

/// Union product c_U = sum_{S ∪ T = U} a_S b_T, computed pointwise in zeta coordinates.
inline SubsetPoly poly_mul(const SubsetPoly& a, const SubsetPoly& b) {
  a.check_same(b);
  const Zmod zm = a.ring();
  Digits za = zeta_transform(a);
  const Digits zb = zeta_transform(b);
  for (std::size_t i = 0; i < za.size(); ++i) za[i] = zm.mul(za[i], zb[i]);
  mobius_in_place(za, zm);
  return SubsetPoly(a.vars(), a.s(), std::move(za));
}

inline SubsetPoly operator*(const SubsetPoly& a, const SubsetPoly& b) { return poly_mul(a, b); }

/// eta_S = prod_{i in S} v_i * prod_{j not in S} (1 - v_j), expanded:
/// coefficient (-1)^{|T \ S|} on every T ⊇ S.
inline SubsetPoly eta(unsigned vars, unsigned s, std::size_t subset) {
  SubsetPoly e(vars, s);
  if (subset >= e.dim()) throw ParameterError("subset bitmask out of range");
  const Zmod zm = e.ring();
  for (std::size_t t = 0; t < e.dim(); ++t) {
    if ((t & subset) != subset) continue;
    const bool odd = std::popcount(t & ~subset) % 2 == 1;
    e.set(t, odd ? zm.neg(1) : 1);
  }
  return e;
}

struct EtaSystem {
  unsigned vars;
  unsigned s;
  std::vector<SubsetPoly> etas;  // indexed by subset bitmask
};

inline EtaSystem eta_system(unsigned vars, unsigned s) {
  EtaSystem sys{vars, s, {}};
  sys.etas.reserve(std::size_t{1} << vars);
  for (std::size_t S = 0; S < (std::size_t{1} << vars); ++S) sys.etas.push_back(eta(vars, s, S));
  return sys;
}

/// Exhaustive check of the eta system: pairwise orthogonal, idempotent,
/// summing to one, and 2^vars members.
inline AuditReport verify_eta_system(unsigned vars, unsigned s) {
  const EtaSystem sys = eta_system(vars, s);
  const std::size_t count = sys.etas.size();
  const SubsetPoly one = SubsetPoly::constant(vars, s, 1);

  bool orthogonal = true;
  bool idempotent = true;
  nlohmann::json witness = nullptr;
  SubsetPoly sum(vars, s);
  for (std::size_t i = 0; i < count; ++i) {
    sum = sum + sys.etas[i];
    if (sys.etas[i] * sys.etas[i] != sys.etas[i]) {
      idempotent = false;
      if (witness.is_null()) witness = {{"non_idempotent", i}};
    }
    for (std::size_t j = i + 1; j < count; ++j) {
      if (!(sys.etas[i] * sys.etas[j]).is_zero()) {
        orthogonal = false;
        if (witness.is_null()) witness = {{"non_orthogonal_pair", {i, j}}};
      }
    }
  }
  const nlohmann::json ctx = {{"variables", vars}, {"s", s}};

  AuditReport report;
  report.add("eta.pairwise_orthogonal", "eta_S * eta_T = 0 for S != T", status_of(orthogonal),
             {{"ring", ctx}, {"pairs_checked", count * (count - 1) / 2}, {"witness", witness}});
  report.add("eta.sum_to_one", "sum over S of eta_S = 1", status_of(sum == one),
             {{"ring", ctx}, {"sum", sum.coeffs()}});
  report.add("eta.idempotent", "eta_S^2 = eta_S", status_of(idempotent),
             {{"ring", ctx}, {"checked", count}});
  report.add("eta.count", "eta system has 2^(m-1) members", status_of(count == (std::size_t{1} << vars)),
             {{"ring", ctx}, {"count", count}});
  return report;
}

}  // namespace ringcodes
