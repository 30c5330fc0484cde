#pragma once

// Gray maps from (a, b, c) triples over A_{m-1} to vectors over Z_{4^s}.
//
// psi2 sends a ∈ A_{m-1} to its partial sums (a_0, a_0 + a_1^i, ...), which is
// exactly the subset zeta transform. For n-tuples the letter blocks a/b/c are
// outermost, then the subset level S in bitmask order, and the position index
// varies fastest.

#include "ringcodes/error.hpp"
#include "ringcodes/residue.hpp"
#include "ringcodes/subset_algebra.hpp"
#include "ringcodes/tower_ring.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace ringcodes {

/// Coefficients of one ring position with respect to kappa_1, kappa_2, kappa_3.
struct TripleRepr {
  SubsetPoly a;
  SubsetPoly b;
  SubsetPoly c;

  TripleRepr(SubsetPoly a_, SubsetPoly b_, SubsetPoly c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    a.check_same(b);
    a.check_same(c);
  }
  static TripleRepr zero(unsigned vars, unsigned s) {
    return {SubsetPoly(vars, s), SubsetPoly(vars, s), SubsetPoly(vars, s)};
  }

  unsigned vars() const { return a.vars(); }
  unsigned s() const { return a.s(); }
  const SubsetPoly& letter(int l) const { return l == 0 ? a : (l == 1 ? b : c); }
  SubsetPoly& letter(int l) { return l == 0 ? a : (l == 1 ? b : c); }

  friend bool operator==(const TripleRepr&, const TripleRepr&) = default;
  friend TripleRepr operator+(const TripleRepr& x, const TripleRepr& y) { return {x.a + y.a, x.b + y.b, x.c + y.c}; }
  friend TripleRepr operator-(const TripleRepr& x, const TripleRepr& y) { return {x.a - y.a, x.b - y.b, x.c - y.c}; }
};

struct GrayVector {
  std::size_t n = 0;
  unsigned vars = 0;
  unsigned s = 1;
  Digits coords;

  static constexpr const char* order = "abc/subset/position";

  std::size_t subset_dim() const { return std::size_t{1} << vars; }
  std::size_t index(int letter, std::size_t subset, std::size_t position) const {
    return (static_cast<std::size_t>(letter) * subset_dim() + subset) * n + position;
  }
  Zmod ring() const { return Zmod::for_s(s); }

  friend bool operator==(const GrayVector&, const GrayVector&) = default;
};

inline Digits psi2(const SubsetPoly& a) { return zeta_transform(a); }

/// psi2(a) || psi2(b) || psi2(c).
inline GrayVector phi_element(const TripleRepr& t) {
  GrayVector g{1, t.vars(), t.s(), {}};
  g.coords.reserve(3 * g.subset_dim());
  for (int l = 0; l < 3; ++l) {
    const Digits z = psi2(t.letter(l));
    g.coords.insert(g.coords.end(), z.begin(), z.end());
  }
  return g;
}

inline GrayVector phi_tuple(std::span<const TripleRepr> ts) {
  if (ts.empty()) throw ParameterError("phi_tuple needs at least one position");
  const unsigned vars = ts[0].vars();
  const unsigned s = ts[0].s();
  GrayVector g{ts.size(), vars, s, {}};
  g.coords.assign(3 * g.subset_dim() * g.n, 0);
  for (std::size_t p = 0; p < ts.size(); ++p) {
    if (ts[p].vars() != vars || ts[p].s() != s)
      throw DimensionError("phi_tuple: position " + std::to_string(p) + " lives in a different algebra");
    for (int l = 0; l < 3; ++l) {
      const Digits z = psi2(ts[p].letter(l));
      for (std::size_t S = 0; S < z.size(); ++S) g.coords[g.index(l, S, p)] = z[S];
    }
  }
  return g;
}

/// Inverse of phi_tuple (Mobius transform per letter and position).
inline std::vector<TripleRepr> phi_tuple_inverse(const GrayVector& g) {
  std::vector<TripleRepr> out;
  out.reserve(g.n);
  const std::size_t dim = g.subset_dim();
  if (g.coords.size() != 3 * dim * g.n) throw DimensionError("Gray vector length does not match its header");
  for (std::size_t p = 0; p < g.n; ++p) {
    TripleRepr t = TripleRepr::zero(g.vars, g.s);
    for (int l = 0; l < 3; ++l) {
      Digits z(dim);
      for (std::size_t S = 0; S < dim; ++S) z[S] = g.coords[g.index(l, S, p)];
      t.letter(l) = mobius_transform(z, g.vars, g.s);
    }
    out.push_back(std::move(t));
  }
  return out;
}

/// Lee weight of the Gray image.
inline std::uint64_t gray_weight(const GrayVector& g) { return lee_weight(g.ring(), g.coords); }
inline std::uint64_t gray_weight(const TripleRepr& t) { return gray_weight(phi_element(t)); }
inline std::uint64_t gray_weight(std::span<const TripleRepr> ts) { return gray_weight(phi_tuple(ts)); }

inline std::uint64_t gray_distance(std::span<const TripleRepr> x, std::span<const TripleRepr> y) {
  if (x.size() != y.size()) throw DimensionError("gray_distance: tuples of different length");
  std::vector<TripleRepr> diff;
  diff.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diff.push_back(x[i] - y[i]);
  return gray_weight(std::span<const TripleRepr>(diff));
}

/// kappa_1 a + kappa_2 b + kappa_3 c.
inline TowerElement compose_triple(const TowerRing& ring, const TripleRepr& t) {
  const RingParams& p = ring.params();
  if (t.vars() != ring.vars() || t.s() != static_cast<unsigned>(p.s))
    throw ContextError("triple does not belong to this tower");
  return ring.kappas().k1 * TowerElement::from_subset(p, t.a) + ring.kappas().k2 * TowerElement::from_subset(p, t.b) +
         ring.kappas().k3 * TowerElement::from_subset(p, t.c);
}

/// Number of nonzero coordinates of a word over R^{s,m}.
inline std::size_t hamming_weight(std::span<const TowerElement> word) {
  std::size_t w = 0;
  for (const auto& x : word) w += !x.is_zero();
  return w;
}

}  // namespace ringcodes
