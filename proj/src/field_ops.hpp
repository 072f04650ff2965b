// Raw-storage arithmetic backends shared by the dense kernels. Not installed.
#pragma once

#include "kronbrist/field.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kronbrist::detail {

struct PrimeOps {
  using value_type = std::uint32_t;
  std::uint32_t p;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p ? s - p : s);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type sub(value_type a, value_type b) const { return add(a, neg(b)); }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p);
  }
  value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("division by zero");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
      std::int64_t quot = r / new_r;
      t = std::exchange(new_t, t - quot * new_t);
      r = std::exchange(new_r, r - quot * new_r);
    }
    if (t < 0) t += p;
    return static_cast<value_type>(t);
  }
  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<value_type>(r);
  }
  /// row[k] -= factor * pivot[k] for k in [from, cols)
  void axpy_neg(value_type* row, const value_type* pivot, value_type factor, std::size_t from,
                std::size_t cols) const {
    const std::uint64_t f = p - factor;
    for (std::size_t k = from; k < cols; ++k)
      if (pivot[k]) row[k] = static_cast<value_type>((row[k] + f * pivot[k]) % p);
  }
  void scale(value_type* row, value_type factor, std::size_t from, std::size_t cols) const {
    for (std::size_t k = from; k < cols; ++k) row[k] = mul(row[k], factor);
  }
};

struct RationalOps {
  using value_type = Rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return a == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return 1 / a;
  }
  value_type from_int(long long v) const { return v; }
  void axpy_neg(value_type* row, const value_type* pivot, const value_type& factor,
                std::size_t from, std::size_t cols) const {
    for (std::size_t k = from; k < cols; ++k)
      if (pivot[k] != 0) row[k] -= factor * pivot[k];
  }
  void scale(value_type* row, const value_type& factor, std::size_t from, std::size_t cols) const {
    for (std::size_t k = from; k < cols; ++k) row[k] *= factor;
  }
};

/// In-place reduced row-echelon form of a row-major rows x cols array.
/// Pivot: first nonzero entry scanning columns left to right, rows top to
/// bottom. Returns the pivot columns.
template <class Ops>
std::vector<std::size_t> rref_in_place(const Ops& ops, std::vector<typename Ops::value_type>& a,
                                       std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t found = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!ops.is_zero(a[i * cols + c])) {
        found = i;
        break;
      }
    if (found == rows) continue;
    if (found != r)
      for (std::size_t k = c; k < cols; ++k) std::swap(a[found * cols + k], a[r * cols + k]);
    auto* prow = &a[r * cols];
    if (!(prow[c] == ops.one())) ops.scale(prow, ops.inv(prow[c]), c, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      auto* row = &a[i * cols];
      if (ops.is_zero(row[c])) continue;
      typename Ops::value_type factor = row[c];
      ops.axpy_neg(row, prow, factor, c, cols);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace kronbrist::detail
