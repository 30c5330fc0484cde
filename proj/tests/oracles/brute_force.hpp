#pragma once

// Slow reference implementations used only by the tests. They work directly
// from definitions (enumeration, polynomial expansion, evaluation at points)
// and share no code with the library beyond plain integer vectors.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::uint64_t>;

inline std::uint64_t mod(std::uint64_t x, std::uint64_t q) { return x % q; }
inline std::uint64_t lee(std::uint64_t x, std::uint64_t q) {
  const std::uint64_t r = x % q;
  return r == 0 ? 0 : std::min(r, q - r);
}

/// All Z_q-combinations of the rows, by closure under adding generators.
inline std::set<Vec> span(const std::vector<Vec>& rows, std::size_t n, std::uint64_t q) {
  std::set<Vec> seen{Vec(n, 0)};
  std::vector<Vec> frontier{Vec(n, 0)};
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& v : frontier)
      for (const auto& r : rows) {
        Vec w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = (v[i] + r[i]) % q;
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return seen;
}

inline void for_each_vector(std::size_t n, std::uint64_t q, const std::function<void(const Vec&)>& f) {
  Vec v(n, 0);
  for (;;) {
    f(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == q) v[i++] = 0;
    if (i == n) return;
  }
}

/// { x in Z_q^n : x . r = 0 for every row r }.
inline std::set<Vec> orthogonal(const std::vector<Vec>& rows, std::size_t n, std::uint64_t q) {
  std::set<Vec> out;
  for_each_vector(n, q, [&](const Vec& x) {
    for (const auto& r : rows) {
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < n; ++i) s = (s + x[i] * r[i]) % q;
      if (s != 0) return;
    }
    out.insert(x);
  });
  return out;
}

// ---- subset algebra by monomial expansion: x_S x_T = x_{S | T}

inline Vec subset_mul(const Vec& a, const Vec& b, std::uint64_t q) {
  Vec c(a.size(), 0);
  for (std::size_t S = 0; S < a.size(); ++S)
    for (std::size_t T = 0; T < b.size(); ++T) c[S | T] = (c[S | T] + a[S] * b[T]) % q;
  return c;
}

/// Value of the polynomial at the 0/1 point whose ones are the bits of `point`.
inline std::uint64_t evaluate(const Vec& a, std::size_t point, std::uint64_t q) {
  std::uint64_t v = 0;
  for (std::size_t S = 0; S < a.size(); ++S)
    if ((S & ~point) == 0) v = (v + a[S]) % q;
  return v;
}

/// eta_S as the product of v_i (i in S) and (1 - v_j) (j not in S).
inline Vec eta_by_product(unsigned vars, std::size_t subset, std::uint64_t q) {
  const std::size_t dim = std::size_t{1} << vars;
  Vec acc(dim, 0);
  acc[0] = 1;
  for (unsigned i = 0; i < vars; ++i) {
    Vec factor(dim, 0);
    if (subset >> i & 1U) {
      factor[std::size_t{1} << i] = 1;
    } else {
      factor[0] = 1;
      factor[std::size_t{1} << i] = q - 1;
    }
    acc = subset_mul(acc, factor, q);
  }
  return acc;
}

// ---- tower R^{s,m}: coefficient d of y^d in A_{m-1}, digits at d * dim + S.
// y^m = y, so y^e for e >= 1 equals y^{1 + (e - 1) mod (m - 1)}.

inline std::size_t fold(std::size_t e, std::size_t m) { return e < m ? e : 1 + (e - 1) % (m - 1); }

inline Vec tower_mul(const Vec& a, const Vec& b, std::size_t m, std::uint64_t q) {
  const std::size_t dim = a.size() / m;
  Vec c(a.size(), 0);
  for (std::size_t d1 = 0; d1 < m; ++d1)
    for (std::size_t d2 = 0; d2 < m; ++d2) {
      const Vec x(a.begin() + d1 * dim, a.begin() + (d1 + 1) * dim);
      const Vec y(b.begin() + d2 * dim, b.begin() + (d2 + 1) * dim);
      const Vec p = subset_mul(x, y, q);
      const std::size_t e = fold(d1 + d2, m);
      for (std::size_t S = 0; S < dim; ++S) c[e * dim + S] = (c[e * dim + S] + p[S]) % q;
    }
  return c;
}

/// Digits of a * y^degree for a in A_{m-1}.
inline Vec tower_from_subset(const Vec& a, std::size_t degree, std::size_t m) {
  Vec x(a.size() * m, 0);
  std::copy(a.begin(), a.end(), x.begin() + degree * a.size());
  return x;
}

/// Gray image of one triple: each letter evaluated at every 0/1 point.
inline Vec gray_triple(const Vec& a, const Vec& b, const Vec& c, std::uint64_t q) {
  Vec out;
  for (const Vec* letter : {&a, &b, &c})
    for (std::size_t T = 0; T < letter->size(); ++T) out.push_back(evaluate(*letter, T, q));
  return out;
}

inline std::uint64_t lee_weight(const Vec& v, std::uint64_t q) {
  std::uint64_t w = 0;
  for (auto x : v) w += lee(x, q);
  return w;
}

}  // namespace oracle
