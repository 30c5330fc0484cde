#pragma once

// Exact linear algebra over Z_{2^k}: Howell normal form, span cardinality,
// membership and kernels.
//
// Z_{2^k} is a chain ring, so every entry is 2^e * unit. Echelonizing with
// the minimum-valuation row as pivot, normalizing the pivot to 2^e, and
// appending the annihilator row 2^{k-e} * pivot_row after every pivot yields
// the Howell property: the rows whose pivots lie right of column j span every
// element of the row span that vanishes on columns 0..j.

#include "ringcodes/bigint.hpp"
#include "ringcodes/error.hpp"
#include "ringcodes/residue.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ringcodes {

class ZModMatrix {
 public:
  ZModMatrix(Zmod zm, std::size_t cols) : zm_(zm), cols_(cols) {}
  ZModMatrix(Zmod zm, std::size_t rows, std::size_t cols) : zm_(zm), cols_(cols), rows_(rows), data_(rows * cols, 0) {}

  static ZModMatrix from_rows(Zmod zm, std::size_t cols, const std::vector<Digits>& rows) {
    ZModMatrix m(zm, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
  }
  static ZModMatrix identity(Zmod zm, std::size_t n) {
    ZModMatrix m(zm, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  const Zmod& ring() const { return zm_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  std::uint64_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::uint64_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const std::uint64_t> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<std::uint64_t> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  void append_row(std::span<const std::uint64_t> r) {
    if (r.size() != cols_)
      throw DimensionError("row has " + std::to_string(r.size()) + " entries, matrix has " +
                           std::to_string(cols_) + " columns");
    for (auto x : r) data_.push_back(zm_.reduce(x));
    ++rows_;
  }
  void append_rows(const ZModMatrix& other) {
    if (!(other.zm_ == zm_)) throw ContextError("matrix modulus mismatch");
    for (std::size_t i = 0; i < other.rows(); ++i) append_row(other.row(i));
  }

  std::vector<Digits> to_rows() const {
    std::vector<Digits> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.emplace_back(row(i).begin(), row(i).end());
    return out;
  }

  ZModMatrix transposed() const {
    ZModMatrix t(zm_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend bool operator==(const ZModMatrix& a, const ZModMatrix& b) {
    return a.zm_ == b.zm_ && a.cols_ == b.cols_ && a.rows_ == b.rows_ && a.data_ == b.data_;
  }

 private:
  Zmod zm_;
  std::size_t cols_;
  std::size_t rows_ = 0;
  Digits data_;
};

namespace detail {

inline void axpy(Digits& dst, std::uint64_t t, const Digits& src, const Zmod& zm) {
  for (std::size_t j = 0; j < dst.size(); ++j) dst[j] = zm.sub(dst[j], zm.mul(t, src[j]));
}

inline bool is_zero(const Digits& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
}

}  // namespace detail

/// Canonical Howell form: zero rows dropped, pivots are powers of two,
/// entries above each pivot reduced below it.
inline ZModMatrix howell_form(const ZModMatrix& M) {
  const Zmod& zm = M.ring();
  const unsigned k = zm.bits();
  std::vector<Digits> rows = M.to_rows();
  std::erase_if(rows, detail::is_zero);

  std::vector<std::size_t> pivot_col;
  std::size_t p = 0;
  for (std::size_t j = 0; j < M.cols() && p < rows.size(); ++j) {
    std::size_t best = rows.size();
    unsigned best_val = k;
    for (std::size_t r = p; r < rows.size(); ++r) {
      const unsigned v = zm.valuation(rows[r][j]);
      if (v < best_val) {
        best_val = v;
        best = r;
        if (v == 0) break;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[p], rows[best]);

    const std::uint64_t unit_inv = zm.inv(rows[p][j] >> best_val);
    for (auto& x : rows[p]) x = zm.mul(x, unit_inv);

    for (std::size_t r = p + 1; r < rows.size(); ++r) {
      if (rows[r][j] == 0) continue;
      detail::axpy(rows[r], rows[r][j] >> best_val, rows[p], zm);
    }
    if (best_val > 0) {
      Digits ann = rows[p];
      const std::uint64_t scale = std::uint64_t{1} << (k - best_val);
      for (auto& x : ann) x = zm.mul(x, scale);
      if (!detail::is_zero(ann)) rows.push_back(std::move(ann));
    }
    pivot_col.push_back(j);
    ++p;
  }
  rows.resize(p);

  for (std::size_t i = 0; i < p; ++i) {
    const std::size_t c = pivot_col[i];
    const unsigned e = zm.valuation(rows[i][c]);
    for (std::size_t h = 0; h < i; ++h) {
      const std::uint64_t t = rows[h][c] >> e;
      if (t != 0) detail::axpy(rows[h], t, rows[i], zm);
    }
  }
  return ZModMatrix::from_rows(zm, M.cols(), rows);
}

/// Row span of a matrix, held in Howell form for membership, counting and enumeration.
class RowSpan {
 public:
  explicit RowSpan(const ZModMatrix& generators) : basis_(howell_form(generators)) {
    const Zmod& zm = basis_.ring();
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      std::size_t c = 0;
      while (basis_.at(i, c) == 0) ++c;
      pivot_col_.push_back(c);
      pivot_exp_.push_back(zm.valuation(basis_.at(i, c)));
    }
  }

  const ZModMatrix& basis() const { return basis_; }
  const Zmod& ring() const { return basis_.ring(); }
  std::size_t cols() const { return basis_.cols(); }

  /// Number of distinct multipliers for basis row i; combinations with
  /// multipliers below these bounds enumerate the span without repetition.
  std::uint64_t multiplier_bound(std::size_t i) const {
    return std::uint64_t{1} << (ring().bits() - pivot_exp_[i]);
  }

  BigInt cardinality() const {
    BigInt c = 1;
    for (std::size_t i = 0; i < basis_.rows(); ++i) c *= multiplier_bound(i);
    return c;
  }

  bool contains(std::span<const std::uint64_t> v) const {
    if (v.size() != cols())
      throw DimensionError("vector has " + std::to_string(v.size()) + " entries, span lives in dimension " +
                           std::to_string(cols()));
    const Zmod& zm = ring();
    Digits w(v.begin(), v.end());
    for (auto& x : w) x = zm.reduce(x);
    std::size_t col = 0;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      const std::size_t c = pivot_col_[i];
      for (; col < c; ++col)
        if (w[col] != 0) return false;
      const std::uint64_t x = w[c];
      if (x & ((std::uint64_t{1} << pivot_exp_[i]) - 1)) return false;
      const std::uint64_t t = x >> pivot_exp_[i];
      if (t != 0) {
        const auto r = basis_.row(i);
        for (std::size_t j = c; j < w.size(); ++j) w[j] = zm.sub(w[j], zm.mul(t, r[j]));
      }
      col = c + 1;
    }
    for (; col < w.size(); ++col)
      if (w[col] != 0) return false;
    return true;
  }

  bool contains_all(const ZModMatrix& M) const {
    for (std::size_t i = 0; i < M.rows(); ++i)
      if (!contains(M.row(i))) return false;
    return true;
  }

  /// The span element with mixed-radix index `index` (0 <= index < cardinality()).
  Digits element(BigInt index) const {
    const Zmod& zm = ring();
    Digits out(cols(), 0);
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      const std::uint64_t bound = multiplier_bound(i);
      const auto t = static_cast<std::uint64_t>(index % bound);
      index /= bound;
      if (t == 0) continue;
      const auto r = basis_.row(i);
      for (std::size_t j = 0; j < out.size(); ++j) out[j] = zm.add(out[j], zm.mul(t, r[j]));
    }
    return out;
  }

  /// Calls f(element) for every span element, in mixed-radix order.
  template <class F>
  void for_each(F&& f) const {
    const BigInt card = cardinality();
    if (card > BigInt(std::numeric_limits<std::uint64_t>::max()))
      throw ParameterError("span too large to enumerate");
    for_each_in_range(0, static_cast<std::uint64_t>(card), std::forward<F>(f));
  }

  /// Calls f(element) for the `count` span elements starting at mixed-radix index `first`.
  template <class F>
  void for_each_in_range(std::uint64_t first, std::uint64_t count, F&& f) const {
    if (count == 0) return;
    const Zmod& zm = ring();
    const std::size_t r = basis_.rows();
    std::vector<std::uint64_t> mult(r, 0);
    std::uint64_t rest = first;
    for (std::size_t i = 0; i < r; ++i) {
      mult[i] = rest % multiplier_bound(i);
      rest /= multiplier_bound(i);
    }
    Digits cur = element(first);
    for (std::uint64_t done = 0;;) {
      f(static_cast<const Digits&>(cur));
      if (++done == count) return;
      std::size_t i = 0;
      for (; i < r; ++i) {
        const auto row = basis_.row(i);
        if (++mult[i] < multiplier_bound(i)) {
          for (std::size_t j = 0; j < cur.size(); ++j) cur[j] = zm.add(cur[j], row[j]);
          break;
        }
        // wrap around: remove the (bound - 1) copies accumulated so far
        const std::uint64_t back = zm.reduce(multiplier_bound(i) - 1);
        for (std::size_t j = 0; j < cur.size(); ++j) cur[j] = zm.sub(cur[j], zm.mul(back, row[j]));
        mult[i] = 0;
      }
      if (i == r) return;
    }
  }

 private:
  ZModMatrix basis_;
  std::vector<std::size_t> pivot_col_;
  std::vector<unsigned> pivot_exp_;
};

inline BigInt span_cardinality(const ZModMatrix& M) { return RowSpan(M).cardinality(); }

inline bool is_member(std::span<const std::uint64_t> v, const ZModMatrix& M) { return RowSpan(M).contains(v); }

/// Generators of the left kernel {x : x * A = 0} of an r x c matrix A.
inline ZModMatrix left_kernel(const ZModMatrix& A) {
  const Zmod& zm = A.ring();
  const std::size_t r = A.rows();
  const std::size_t c = A.cols();
  ZModMatrix aug(zm, r, c + r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, c + i) = 1;
  }
  const ZModMatrix h = howell_form(aug);
  ZModMatrix ker(zm, r);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    const auto row = h.row(i);
    if (std::any_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(c), [](auto x) { return x != 0; }))
      continue;
    ker.append_row(row.subspan(c));
  }
  return howell_form(ker);
}

/// Generators (in Howell form) of {x in Z^n : <x, row> = 0 for every row of M}.
inline ZModMatrix dual_generators(const ZModMatrix& M, std::size_t n) {
  if (M.cols() != n)
    throw DimensionError("dual_generators: matrix has " + std::to_string(M.cols()) + " columns, expected " +
                         std::to_string(n));
  return left_kernel(M.transposed());
}

}  // namespace ringcodes
