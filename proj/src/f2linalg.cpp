#include "uhqft/f2linalg.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "uhqft/errors.hpp"

namespace uhqft::f2 {

namespace {

void xor_into(std::span<Word> dst, std::span<const Word> src, std::size_t from_word) {
  for (std::size_t w = from_word; w < dst.size(); ++w) dst[w] ^= src[w];
}

}  // namespace

Vector::Vector(std::initializer_list<int> bits) : Vector(bits.size()) {
  std::size_t i = 0;
  for (int b : bits) set(i++, b != 0);
}

Vector Vector::from_string(std::string_view bits) {
  std::vector<bool> tmp;
  for (char c : bits) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c != '0' && c != '1') throw InputError(std::string("bad bit character '") + c + "'");
    tmp.push_back(c == '1');
  }
  Vector v(tmp.size());
  for (std::size_t i = 0; i < tmp.size(); ++i) v.set(i, tmp[i]);
  return v;
}

void Vector::set(std::size_t i, bool v) {
  const Word bit = Word{1} << (i % kWordBits);
  if (v)
    words_[i / kWordBits] |= bit;
  else
    words_[i / kWordBits] &= ~bit;
}

bool Vector::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t Vector::popcount() const noexcept {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t Vector::first_set() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return len_;
}

Vector& Vector::operator+=(const Vector& other) {
  if (other.len_ != len_) throw InputError("vector length mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

std::string Vector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  Matrix m(rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw InputError("ragged matrix literal");
    std::size_t c = 0;
    for (int v : row) m.set(r, c++, v != 0);
    ++r;
  }
  return m;
}

Matrix Matrix::from_row_vectors(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("row length mismatch");
    std::copy(rows[r].words().begin(), rows[r].words().end(), m.row_words(r).begin());
  }
  return m;
}

Matrix Matrix::from_column_vectors(std::span<const Vector> cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw InputError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      if (cols[c].get(r)) m.set(r, c, true);
  }
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, bool v) {
  Word& w = data_[r * stride_ + c / kWordBits];
  const Word bit = Word{1} << (c % kWordBits);
  if (v)
    w |= bit;
  else
    w &= ~bit;
}

Vector Matrix::row(std::size_t r) const {
  Vector v(cols_);
  auto src = row_words(r);
  std::copy(src.begin(), src.end(), v.words().begin());
  return v;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (get(r, c)) v.set(r, true);
  return v;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

std::size_t Matrix::nonzero_count() const noexcept {
  std::size_t n = 0;
  for (Word w : data_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto words = row_words(r);
    for (std::size_t w = 0; w < words.size(); ++w) {
      Word bits = words[w];
      while (bits != 0) {
        const std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        t.set(c, r, true);
        bits &= bits - 1;
      }
    }
  }
  return t;
}

Matrix Matrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  Matrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (get(rows[i], cols[j])) s.set(i, j, true);
  return s;
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (v.size() != m.cols()) throw InputError("matrix-vector dimension mismatch");
  Vector out(m.rows());
  auto vw = v.words();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto rw = m.row_words(r);
    Word acc = 0;
    for (std::size_t w = 0; w < rw.size(); ++w) acc ^= rw[w] & vw[w];
    if (std::popcount(acc) & 1) out.set(r, true);
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix-matrix dimension mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto dst = out.row_words(r);
    auto aw = a.row_words(r);
    for (std::size_t w = 0; w < aw.size(); ++w) {
      Word bits = aw[w];
      while (bits != 0) {
        const std::size_t k = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        xor_into(dst, b.row_words(k), 0);
        bits &= bits - 1;
      }
    }
  }
  return out;
}

RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  std::size_t next_row = 0;
  const std::size_t rows = m.rows();
  for (std::size_t c = 0; c < m.cols() && next_row < rows; ++c) {
    const std::size_t w = c / kWordBits;
    const Word bit = Word{1} << (c % kWordBits);
    std::size_t pivot = rows;
    for (std::size_t r = next_row; r < rows; ++r) {
      if (m.row_words(r)[w] & bit) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != next_row) {
      auto a = m.row_words(pivot);
      auto b = m.row_words(next_row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.row_words(next_row);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == next_row) continue;
      auto rw = m.row_words(r);
      if (rw[w] & bit) xor_into(rw, prow, w);
    }
    out.pivot_cols.push_back(c);
    ++next_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) {
  // Forward elimination only; no back substitution needed for the count.
  Matrix a = m;
  std::size_t next_row = 0;
  const std::size_t rows = a.rows();
  for (std::size_t c = 0; c < a.cols() && next_row < rows; ++c) {
    const std::size_t w = c / kWordBits;
    const Word bit = Word{1} << (c % kWordBits);
    std::size_t pivot = rows;
    for (std::size_t r = next_row; r < rows; ++r) {
      if (a.row_words(r)[w] & bit) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != next_row) {
      auto x = a.row_words(pivot);
      auto y = a.row_words(next_row);
      std::swap_ranges(x.begin(), x.end(), y.begin());
    }
    auto prow = a.row_words(next_row);
    for (std::size_t r = next_row + 1; r < rows; ++r) {
      auto rw = a.row_words(r);
      if (rw[w] & bit) xor_into(rw, prow, w);
    }
    ++next_row;
  }
  return next_row;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const RowEchelon re = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : re.pivot_cols) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v.set(f, true);
    for (std::size_t i = 0; i < re.pivot_cols.size(); ++i)
      if (re.reduced.get(i, f)) v.set(re.pivot_cols[i], true);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> image_basis(const Matrix& m) {
  const RowEchelon re = row_reduce(m.transpose());
  std::vector<Vector> basis;
  basis.reserve(re.pivot_cols.size());
  for (std::size_t i = 0; i < re.pivot_cols.size(); ++i) basis.push_back(re.reduced.row(i));
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw InputError("solve: right-hand side has length " + std::to_string(b.size()) +
                                             ", matrix has " + std::to_string(m.rows()) + " rows");
  // Augment with b as the last column and reduce.
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.get(r, c)) aug.set(r, c, true);
    if (b.get(r)) aug.set(r, m.cols(), true);
  }
  const RowEchelon re = row_reduce(std::move(aug));
  if (!re.pivot_cols.empty() && re.pivot_cols.back() == m.cols()) return std::nullopt;

  Vector x(m.cols());
  for (std::size_t i = 0; i < re.pivot_cols.size(); ++i)
    if (re.reduced.get(i, m.cols())) x.set(re.pivot_cols[i], true);
  return x;
}

}  // namespace uhqft::f2
