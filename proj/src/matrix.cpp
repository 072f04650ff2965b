#include "kronbrist/matrix.hpp"

#include "field_ops.hpp"

#include <sstream>
#include <stdexcept>

namespace kronbrist {

namespace {

/// Calls fn(ops, storage) with the backend matching the matrix's field.
template <class M, class Fn>
decltype(auto) dispatch(M& m, Fn&& fn) {
  if (m.field().is_finite())
    return fn(detail::PrimeOps{m.field().characteristic()}, m.residues());
  return fn(detail::RationalOps{}, m.rationals());
}

void require_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("matrices over different fields");
}

}  // namespace

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field.is_finite())
    fp_.assign(rows * cols, 0);
  else
    q_.assign(rows * cols, Rational(0));
}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_ints(FieldSpec field, std::size_t rows, std::size_t cols,
                         std::span<const long long> entries) {
  if (entries.size() != rows * cols) throw std::invalid_argument("entry count does not match shape");
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i / cols, i % cols, entries[i]);
  return m;
}

Matrix Matrix::from_rows(FieldSpec field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::column(FieldSpec field, const Vector& v) {
  Matrix m(field, v.size(), 1);
  for (std::size_t r = 0; r < v.size(); ++r) m.set(r, 0, v[r]);
  return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  if (field_.is_finite()) return Scalar(field_, static_cast<long long>(fp_[r * cols_ + c]));
  return Scalar(field_, q_[r * cols_ + c]);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  if (!(value.field() == field_)) throw std::invalid_argument("scalar from a different field");
  if (field_.is_finite())
    fp_[r * cols_ + c] = value.residue();
  else
    q_[r * cols_ + c] = value.rational();
}

void Matrix::set(std::size_t r, std::size_t c, long long value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  if (field_.is_finite())
    fp_[r * cols_ + c] = detail::PrimeOps{field_.characteristic()}.from_int(value);
  else
    q_[r * cols_ + c] = value;
}

bool Matrix::is_zero_at(std::size_t r, std::size_t c) const {
  return field_.is_finite() ? fp_[r * cols_ + c] == 0 : q_[r * cols_ + c] == 0;
}

bool Matrix::is_zero() const {
  for (std::size_t i = 0; i < rows_ * cols_; ++i)
    if (!is_zero_at(i / cols_, i % cols_)) return false;
  return true;
}

Vector Matrix::row(std::size_t r) const {
  Vector v;
  v.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v.push_back(at(r, c));
  return v;
}

Vector Matrix::col(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      if (field_.is_finite())
        t.fp_[c * rows_ + r] = fp_[r * cols_ + c];
      else
        t.q_[c * rows_ + r] = q_[r * cols_ + c];
    }
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_) throw std::out_of_range("block out of range");
  Matrix b(field_, nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c) {
      if (field_.is_finite())
        b.fp_[r * ncols + c] = fp_[(r0 + r) * cols_ + c0 + c];
      else
        b.q_[r * ncols + c] = q_[(r0 + r) * cols_ + c0 + c];
    }
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& src) {
  require_field(*this, src);
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) throw std::out_of_range("block out of range");
  for (std::size_t r = 0; r < src.rows_; ++r)
    for (std::size_t c = 0; c < src.cols_; ++c) {
      if (field_.is_finite())
        fp_[(r0 + r) * cols_ + c0 + c] = src.fp_[r * src.cols_ + c];
      else
        q_[(r0 + r) * cols_ + c0 + c] = src.q_[r * src.cols_ + c];
    }
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
  Matrix m(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) m.set_block(i, 0, block(idx[i], 0, 1, cols_));
  return m;
}

Matrix Matrix::select_cols(std::span<const std::size_t> idx) const {
  Matrix m(field_, rows_, idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) m.set_block(0, i, block(0, idx[i], rows_, 1));
  return m;
}

Matrix Matrix::hstack(const std::vector<Matrix>& parts, FieldSpec field, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows_ != rows) throw std::invalid_argument("hstack: row count mismatch");
    cols += p.cols_;
  }
  Matrix m(field, rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    m.set_block(0, c, p);
    c += p.cols_;
  }
  return m;
}

Matrix Matrix::vstack(const std::vector<Matrix>& parts, FieldSpec field, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols_ != cols) throw std::invalid_argument("vstack: column count mismatch");
    rows += p.rows_;
  }
  Matrix m(field, rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    m.set_block(r, 0, p);
    r += p.rows_;
  }
  return m;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
  require_field(a, b);
  Matrix m(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  m.set_block(0, 0, a);
  m.set_block(a.rows_, a.cols_, b);
  return m;
}

Matrix Matrix::kronecker(const Matrix& a, const Matrix& b) {
  require_field(a, b);
  Matrix m(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
  dispatch(m, [&](const auto& ops, auto& dst) {
    using Store = std::decay_t<decltype(dst)>;
    const Store* as;
    const Store* bs;
    if constexpr (std::is_same_v<Store, std::vector<std::uint32_t>>) {
      as = &a.fp_;
      bs = &b.fp_;
    } else {
      as = &a.q_;
      bs = &b.q_;
    }
    const std::size_t cols = a.cols_ * b.cols_;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        const auto& aij = (*as)[i * a.cols_ + j];
        if (ops.is_zero(aij)) continue;
        for (std::size_t k = 0; k < b.rows_; ++k)
          for (std::size_t l = 0; l < b.cols_; ++l)
            dst[(i * b.rows_ + k) * cols + j * b.cols_ + l] = ops.mul(aij, (*bs)[k * b.cols_ + l]);
      }
  });
  return m;
}

Matrix Matrix::vec() const {
  Matrix v(field_, rows_ * cols_, 1);
  for (std::size_t c = 0; c < cols_; ++c) v.set_block(c * rows_, 0, block(0, c, rows_, 1));
  return v;
}

Matrix Matrix::unvec(const Matrix& column, std::size_t rows, std::size_t cols) {
  if (column.cols_ != 1 || column.rows_ != rows * cols) throw std::invalid_argument("unvec: bad shape");
  Matrix m(column.field_, rows, cols);
  for (std::size_t c = 0; c < cols; ++c) m.set_block(0, c, column.block(c * rows, 0, rows, 1));
  return m;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: vector length mismatch");
  return (*this * column(field_, v)).col(0);
}

Matrix Matrix::scaled(const Scalar& s) const {
  if (!(s.field() == field_)) throw std::invalid_argument("scalar from a different field");
  Matrix m = *this;
  dispatch(m, [&](const auto& ops, auto& data) {
    using T = typename std::decay_t<decltype(ops)>::value_type;
    T factor;
    if constexpr (std::is_same_v<T, std::uint32_t>)
      factor = s.residue();
    else
      factor = s.rational();
    for (auto& x : data) x = ops.mul(x, factor);
  });
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_field(a, b);
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: inner dimension mismatch");
  Matrix m(a.field_, a.rows_, b.cols_);
  if (a.field_.is_finite()) {
    const std::uint64_t p = a.field_.characteristic();
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const std::uint64_t aik = a.fp_[i * a.cols_ + k];
        if (!aik) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          acc[j] = (acc[j] + aik * b.fp_[k * b.cols_ + j]) % p;
      }
      for (std::size_t j = 0; j < b.cols_; ++j) m.fp_[i * b.cols_ + j] = static_cast<std::uint32_t>(acc[j]);
    }
  } else {
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a.q_[i * a.cols_ + k];
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m.q_[i * b.cols_ + j] += aik * b.q_[k * b.cols_ + j];
      }
  }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_field(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix m = a;
  dispatch(m, [&](const auto& ops, auto& data) {
    using Store = std::decay_t<decltype(data)>;
    const Store* other;
    if constexpr (std::is_same_v<Store, std::vector<std::uint32_t>>)
      other = &b.fp_;
    else
      other = &b.q_;
    for (std::size_t i = 0; i < data.size(); ++i) data[i] = ops.add(data[i], (*other)[i]);
  });
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  dispatch(m, [](const auto& ops, auto& data) {
    for (auto& x : data) x = ops.neg(x);
  });
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.fp_ == b.fp_ &&
         a.q_ == b.q_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c).to_string();
    os << "]\n";
  }
  return os.str();
}

RrefResult rref(const Matrix& a) {
  Matrix r = a;
  std::vector<std::size_t> pivots = dispatch(r, [&](const auto& ops, auto& data) {
    return detail::rref_in_place(ops, data, a.rows(), a.cols());
  });
  const std::size_t rk = pivots.size();
  return RrefResult{std::move(r), std::move(pivots), rk};
}

std::size_t rank(const Matrix& a) { return rref(a).rank; }

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows())
    throw std::invalid_argument("solve: right-hand side has length " + std::to_string(b.size()) +
                                ", expected " + std::to_string(a.rows()));
  Matrix aug = Matrix::hstack({a, Matrix::column(a.field(), b)}, a.field(), a.rows());
  RrefResult rr = rref(aug);
  if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == a.cols()) return std::nullopt;
  Vector x = zero_vector(a.field(), a.cols());
  for (std::size_t k = 0; k < rr.rank; ++k) x[rr.pivot_cols[k]] = rr.reduced.at(k, a.cols());
  return x;
}

bool is_invertible(const Matrix& a) { return a.rows() == a.cols() && rank(a) == a.rows(); }

}  // namespace kronbrist
