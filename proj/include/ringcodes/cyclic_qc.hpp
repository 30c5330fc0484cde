#pragma once

// Polynomials in C[x]/(x^n - 1) for C = Z_{4^s}, A_{m-1} or R^{s,m}, the
// idempotent tau = kappa_1 e_1 + kappa_2 e_2 + kappa_3 e_3, cyclic shifts and
// shift-invariance (quasi-cyclic) checks decided on digit expansions.

#include "ringcodes/audit.hpp"
#include "ringcodes/code_builder.hpp"
#include "ringcodes/error.hpp"
#include "ringcodes/residue.hpp"
#include "ringcodes/subset_algebra.hpp"
#include "ringcodes/tower_ring.hpp"
#include "ringcodes/zmodule.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace ringcodes {

inline bool coeff_is_zero(const Residue& x) { return x.value() == 0; }
inline bool coeff_is_zero(const SubsetPoly& x) { return x.is_zero(); }
inline bool coeff_is_zero(const TowerElement& x) { return x.is_zero(); }

inline Digits digits_of(const Residue& x) { return {x.value()}; }
inline Digits digits_of(const SubsetPoly& x) { return x.coeffs(); }
inline Digits digits_of(const TowerElement& x) { return x.digits(); }

inline Zmod modulus_of(const Residue& x) { return x.ring(); }
inline Zmod modulus_of(const SubsetPoly& x) { return x.ring(); }
inline Zmod modulus_of(const TowerElement& x) { return x.ring(); }

template <class C>
class QuotientPoly {
 public:
  explicit QuotientPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw ParameterError("C[x]/(x^n - 1) needs n >= 1");
  }
  /// The constant polynomial c in C[x]/(x^n - 1).
  static QuotientPoly constant(const C& c, std::size_t n) {
    if (n == 0) throw ParameterError("C[x]/(x^n - 1) needs n >= 1");
    std::vector<C> v(n, c - c);
    v[0] = c;
    return QuotientPoly(std::move(v));
  }
  /// c * x^e.
  static QuotientPoly monomial(const C& c, std::size_t e, std::size_t n) {
    QuotientPoly p = constant(c - c, n);
    p.c_[e % n] = c;
    return p;
  }

  std::size_t n() const { return c_.size(); }
  const std::vector<C>& coeffs() const { return c_; }
  const C& operator[](std::size_t i) const { return c_[i]; }
  C& operator[](std::size_t i) { return c_[i]; }
  C zero_coeff() const { return c_[0] - c_[0]; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!coeff_is_zero(x)) return false;
    return true;
  }

  /// Coefficient digits concatenated, degree 0 first.
  Digits digits() const {
    Digits out;
    for (const auto& x : c_) {
      const Digits d = digits_of(x);
      out.insert(out.end(), d.begin(), d.end());
    }
    return out;
  }

  friend bool operator==(const QuotientPoly&, const QuotientPoly&) = default;

  friend QuotientPoly operator+(const QuotientPoly& f, const QuotientPoly& g) {
    check_size(f, g);
    QuotientPoly r = f;
    for (std::size_t i = 0; i < f.n(); ++i) r.c_[i] = f.c_[i] + g.c_[i];
    return r;
  }
  friend QuotientPoly operator-(const QuotientPoly& f, const QuotientPoly& g) {
    check_size(f, g);
    QuotientPoly r = f;
    for (std::size_t i = 0; i < f.n(); ++i) r.c_[i] = f.c_[i] - g.c_[i];
    return r;
  }
  /// Multiplies every coefficient by c.
  QuotientPoly times(const C& c) const {
    QuotientPoly r = *this;
    for (auto& x : r.c_) x = c * x;
    return r;
  }

 private:
  static void check_size(const QuotientPoly& f, const QuotientPoly& g) {
    if (f.n() != g.n())
      throw DimensionError("quotient ring size mismatch: n=" + std::to_string(f.n()) + " vs n=" + std::to_string(g.n()));
  }

  std::vector<C> c_;
};

/// Cyclic convolution.
template <class C>
QuotientPoly<C> quotient_mul(const QuotientPoly<C>& f, const QuotientPoly<C>& g) {
  if (f.n() != g.n())
    throw DimensionError("quotient ring size mismatch: n=" + std::to_string(f.n()) + " vs n=" + std::to_string(g.n()));
  const std::size_t n = f.n();
  std::vector<C> out(n, f.zero_coeff());
  for (std::size_t i = 0; i < n; ++i) {
    if (coeff_is_zero(f[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (coeff_is_zero(g[j])) continue;
      const std::size_t k = (i + j) % n;
      out[k] = out[k] + f[i] * g[j];
    }
  }
  return QuotientPoly<C>(std::move(out));
}

template <class C>
QuotientPoly<C> operator*(const QuotientPoly<C>& f, const QuotientPoly<C>& g) {
  return quotient_mul(f, g);
}

template <class C>
bool is_idempotent(const QuotientPoly<C>& f) {
  return f * f == f;
}

/// Newton lifting e <- 3e^2 - 2e^3 of an idempotent mod 2 to one mod 4^s.
template <class C>
QuotientPoly<C> lift_idempotent(QuotientPoly<C> e) {
  for (int iter = 0; iter < 64; ++iter) {
    const auto e2 = e * e;
    if (e2 == e) return e;
    const auto e3 = e2 * e;
    QuotientPoly<C> next = e2 + e2 + e2 - e3 - e3;
    if (next == e) break;
    e = std::move(next);
  }
  if (!is_idempotent(e)) throw PreconditionError("polynomial is not idempotent modulo 2, so it does not lift");
  return e;
}

using APoly = QuotientPoly<SubsetPoly>;
using RPoly = QuotientPoly<TowerElement>;

/// Lifts coefficients from A_{m-1} into R^{s,m}.
inline RPoly embed(RingParams p, const APoly& f) {
  std::vector<TowerElement> c;
  c.reserve(f.n());
  for (const auto& x : f.coeffs()) c.push_back(TowerElement::from_subset(p, x));
  return RPoly(std::move(c));
}

/// kappa_1 e1 + kappa_2 e2 + kappa_3 e3 without any precondition check.
inline RPoly tau_compose(const TowerRing& ring, const APoly& e1, const APoly& e2, const APoly& e3) {
  const RingParams& p = ring.params();
  return embed(p, e1).times(ring.kappas().k1) + embed(p, e2).times(ring.kappas().k2) +
         embed(p, e3).times(ring.kappas().k3);
}

/// tau for idempotent e1, e2, e3; the result is checked to be idempotent.
inline RPoly tau_build(const TowerRing& ring, const APoly& e1, const APoly& e2, const APoly& e3) {
  const std::array<const APoly*, 3> es{&e1, &e2, &e3};
  for (std::size_t i = 0; i < 3; ++i)
    if (!is_idempotent(*es[i]))
      throw PreconditionError("component e" + std::to_string(i + 1) + " is not idempotent in A[x]/(x^n - 1)");
  RPoly tau = tau_compose(ring, e1, e2, e3);
  if (!is_idempotent(tau)) throw InvariantError("tau built from idempotents is not idempotent");
  return tau;
}

/// The constant choices 0, 1 and every eta_S, as polynomials of length n.
inline std::vector<APoly> tau_choices(unsigned vars, unsigned s, std::size_t n) {
  std::vector<APoly> out;
  out.push_back(APoly::constant(SubsetPoly(vars, s), n));
  out.push_back(APoly::constant(SubsetPoly::constant(vars, s, 1), n));
  for (std::size_t S = 0; S < (std::size_t{1} << vars); ++S) out.push_back(APoly::constant(eta(vars, s, S), n));
  return out;
}

/// Rotates coordinates right by d: position i moves to (i + d) mod n.
template <class T>
std::vector<T> cyclic_shift(const std::vector<T>& w, std::int64_t d) {
  if (d < 1) throw ParameterError("shift amount must be at least 1");
  const std::size_t n = w.size();
  if (n == 0) return w;
  std::vector<T> out(w);
  for (std::size_t i = 0; i < n; ++i) out[(i + static_cast<std::size_t>(d)) % n] = w[i];
  return out;
}

/// Same rotation on a flat digit vector with `width` digits per position.
inline Digits shift_digits(const Digits& v, std::size_t width, std::uint64_t d) {
  if (width == 0 || v.size() % width != 0) throw DimensionError("digit vector length is not a multiple of the width");
  const std::size_t n = v.size() / width;
  Digits out(v.size());
  for (std::size_t i = 0; i < n; ++i)
    std::copy_n(v.begin() + static_cast<std::ptrdiff_t>(i * width), width,
                out.begin() + static_cast<std::ptrdiff_t>(((i + d) % n) * width));
  return out;
}

/// A linear code of length n over some C given through its Z_{4^s}-digit
/// expansion (`width` digits per coordinate).
class DigitCode {
 public:
  DigitCode(std::size_t n, std::size_t width, ZModMatrix generators)
      : n_(n), width_(width), gens_(std::move(generators)), span_(gens_) {
    if (gens_.cols() != n * width) throw DimensionError("generator matrix width does not match n * width");
  }
  static DigitCode from(const RCode& code) {
    return DigitCode(code.n(), code.params().tower_dim(), code.generator_digits());
  }

  std::size_t n() const { return n_; }
  std::size_t width() const { return width_; }
  const ZModMatrix& generators() const { return gens_; }
  const RowSpan& span() const { return span_; }
  BigInt cardinality() const { return span_.cardinality(); }
  bool contains(std::span<const std::uint64_t> v) const { return span_.contains(v); }

 private:
  std::size_t n_;
  std::size_t width_;
  ZModMatrix gens_;
  RowSpan span_;
};

/// Whether the code is invariant under rotation by d, decided by membership
/// of every rotated generator.
inline AuditReport qc_invariance_check(const DigitCode& code, std::uint64_t d) {
  if (d < 1 || code.n() % d != 0)
    throw ParameterError("shift " + std::to_string(d) + " does not divide the length " + std::to_string(code.n()));
  nlohmann::json witness = nullptr;
  const auto& G = code.generators();
  for (std::size_t r = 0; r < G.rows() && witness.is_null(); ++r) {
    const Digits row(G.row(r).begin(), G.row(r).end());
    if (!code.contains(shift_digits(row, code.width(), d))) witness = {{"generator_row", r}};
  }
  AuditReport rep;
  rep.add("qc.shift_invariance", "span is invariant under rotation by d coordinates", status_of(witness.is_null()),
          {{"n", code.n()},
           {"d", d},
           {"generators_checked", G.rows()},
           {"invariant", witness.is_null()},
           {"witness", witness}});
  return rep;
}

inline AuditReport qc_invariance_check(const RCode& code, std::uint64_t d) {
  return qc_invariance_check(DigitCode::from(code), d);
}

/// Span of { x^{jd} g_i : 0 <= j < n/d }. No explicit multi-generator
/// construction is available, so the orbit span stands in for it; its
/// d-invariance is checked before returning.
template <class C>
DigitCode qc_from_generators(const std::vector<QuotientPoly<C>>& gs, std::uint64_t d) {
  if (gs.empty()) throw ParameterError("at least one generator is required");
  const std::size_t n = gs[0].n();
  if (d < 1 || n % d != 0) throw ParameterError("shift " + std::to_string(d) + " does not divide n = " + std::to_string(n));
  const std::size_t width = digits_of(gs[0][0]).size();
  ZModMatrix M(modulus_of(gs[0][0]), n * width);
  for (const auto& g : gs) {
    if (g.n() != n) throw DimensionError("generators have different lengths");
    Digits row = g.digits();
    for (std::size_t j = 0; j < n / d; ++j) {
      M.append_row(row);
      row = shift_digits(row, width, d);
    }
  }
  DigitCode code(n, width, std::move(M));
  if (!qc_invariance_check(code, d).all_pass()) throw InvariantError("orbit span is not invariant under its own shift");
  return code;
}

/// The ideal generated by g: span of { x^i b g } over every digit basis element b of C.
inline DigitCode ideal_code(const RPoly& g) {
  const RingParams p = g[0].params();
  const std::size_t n = g.n();
  ZModMatrix M(g[0].ring(), n * p.tower_dim());
  for (std::size_t b = 0; b < p.tower_dim(); ++b) {
    Digits row = g.times(TowerElement::basis(p, b)).digits();
    for (std::size_t i = 0; i < n; ++i) {
      M.append_row(row);
      row = shift_digits(row, p.tower_dim(), 1);
    }
  }
  return DigitCode(n, p.tower_dim(), std::move(M));
}

namespace detail {

inline SubsetPoly random_subset_poly(unsigned vars, unsigned s, std::mt19937_64& rng) {
  SubsetPoly a(vars, s);
  for (std::size_t S = 0; S < a.dim(); ++S) a.set(S, rng());
  return a;
}

inline APoly random_non_idempotent(unsigned vars, unsigned s, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    std::vector<SubsetPoly> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(random_subset_poly(vars, s, rng));
    APoly f(std::move(c));
    if (!is_idempotent(f)) return f;
  }
}

}  // namespace detail

struct ConverseCensus {
  std::uint64_t non_idempotents = 0;
  std::array<std::uint64_t, 3> tau_still_idempotent{};  // per slot, others fixed to 1
};

/// For n = 1: counts the non-idempotent a in A_{m-1} with kappa_l (a^2 - a) = 0,
/// i.e. the a that keep tau idempotent in slot l although a^2 != a.
inline ConverseCensus tau_converse_census(const TowerRing& ring) {
  const RingParams& p = ring.params();
  const auto vars = ring.vars();
  const auto s = static_cast<unsigned>(p.s);
  const Zmod zm = ring.ring();
  ConverseCensus c;
  SubsetPoly a(vars, s);
  const std::size_t dim = a.dim();
  if (dim * zm.bits() > 16) throw ParameterError("census is limited to algebras with at most 2^16 elements");
  const std::uint64_t total = std::uint64_t{1} << (dim * zm.bits());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    for (std::size_t S = 0; S < dim; ++S) a.set(S, (idx >> (S * zm.bits())) & zm.mask());
    const SubsetPoly defect = a * a - a;
    if (defect.is_zero()) continue;
    ++c.non_idempotents;
    const TowerElement t = TowerElement::from_subset(p, defect);
    for (int l = 1; l <= 3; ++l) c.tau_still_idempotent[l - 1] += (ring.kappas()[l] * t).is_zero();
  }
  return c;
}

inline nlohmann::json apoly_json(const APoly& f) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : f.coeffs()) j.push_back(x.coeffs());
  return j;
}

struct TauAuditOptions {
  std::vector<std::size_t> lengths{1, 3, 7};
  std::size_t samples = 10;
  std::uint64_t seed = 1;
  /// Above this many triples per length the forward check draws that many at random.
  std::uint64_t max_forward_triples = 4096;
};

/// Both directions of "tau idempotent <=> e1, e2, e3 idempotent".
/// Forward: every choice e_i in {0, 1, eta_S}. Converse: random
/// non-idempotents put in each slot (others drawn from the same choices)
/// must break idempotency of tau; any survivor is a counterexample.
inline AuditReport tau_idempotence_audit(const TowerRing& ring, const TauAuditOptions& opt = {}) {
  const auto vars = ring.vars();
  const auto s = static_cast<unsigned>(ring.params().s);
  AuditReport rep;

  std::mt19937_64 rng(opt.seed);
  std::uint64_t forward_checked = 0;
  bool forward_exhaustive = true;
  nlohmann::json forward_witness = nullptr;
  for (const std::size_t n : opt.lengths) {
    const auto choices = tau_choices(vars, s, n);
    const std::uint64_t c = choices.size();
    const bool all = c * c * c <= opt.max_forward_triples;
    forward_exhaustive = forward_exhaustive && all;
    const std::uint64_t count = all ? c * c * c : opt.max_forward_triples;
    for (std::uint64_t t = 0; t < count; ++t) {
      const std::uint64_t code = all ? t : rng() % (c * c * c);
      const std::size_t i = code / (c * c), j = (code / c) % c, k = code % c;
      ++forward_checked;
      if (!is_idempotent(tau_compose(ring, choices[i], choices[j], choices[k])) && forward_witness.is_null())
        forward_witness = {{"n", n}, {"choice_indices", {i, j, k}}};
    }
  }
  rep.add("tau.forward", "e1, e2, e3 idempotent in A[x]/(x^n - 1) => tau idempotent",
          status_of(forward_witness.is_null()),
          {{"lengths", opt.lengths},
           {"choices", "0, 1, eta_S"},
           {"exhaustive", forward_exhaustive},
           {"triples_checked", forward_checked},
           {"witness", forward_witness}});

  std::uint64_t converse_checked = 0;
  std::uint64_t counterexamples = 0;
  nlohmann::json per_slot = nlohmann::json::object();
  nlohmann::json converse_witness = nullptr;
  for (const std::size_t n : opt.lengths) {
    const auto choices = tau_choices(vars, s, n);
    std::array<std::uint64_t, 3> slot_hits{};
    for (std::size_t t = 0; t < opt.samples; ++t) {
      const APoly bad = detail::random_non_idempotent(vars, s, n, rng);
      for (int slot = 0; slot < 3; ++slot) {
        std::array<APoly, 3> es{choices[rng() % choices.size()], choices[rng() % choices.size()],
                                choices[rng() % choices.size()]};
        es[slot] = bad;
        ++converse_checked;
        if (is_idempotent(tau_compose(ring, es[0], es[1], es[2]))) {
          ++counterexamples;
          ++slot_hits[slot];
          if (converse_witness.is_null())
            converse_witness = {{"n", n}, {"slot", slot + 1}, {"non_idempotent", apoly_json(bad)}};
        }
      }
    }
    per_slot[std::to_string(n)] = slot_hits;
  }
  rep.add("tau.converse", "tau idempotent => e1, e2, e3 idempotent",
          counterexamples == 0 ? Status::pass : Status::measured_discrepancy,
          {{"lengths", opt.lengths},
           {"samples_per_length", opt.samples},
           {"seed", opt.seed},
           {"cases_checked", converse_checked},
           {"counterexamples", counterexamples},
           {"counterexamples_by_length_and_slot", per_slot},
           {"witness", converse_witness}});

  const std::size_t dim = std::size_t{1} << vars;
  if (dim * ring.ring().bits() <= 16) {
    const ConverseCensus c = tau_converse_census(ring);
    const std::uint64_t bad = c.tau_still_idempotent[0] + c.tau_still_idempotent[1] + c.tau_still_idempotent[2];
    rep.add("tau.converse_census", "n = 1: non-idempotent e in one slot never leaves tau idempotent",
            bad == 0 ? Status::pass : Status::measured_discrepancy,
            {{"non_idempotents", c.non_idempotents},
             {"tau_still_idempotent_by_slot", c.tau_still_idempotent},
             {"explanation", "kappa_l annihilates a^2 - a whenever its value at the empty-set point vanishes (slots 1, 2)"}});
  }
  return rep;
}

}  // namespace ringcodes
