#pragma once

// Bit-packed linear algebra over the field with two elements.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace uhqft::f2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t len) : len_(len), words_(words_for(len), 0) {}
  Vector(std::initializer_list<int> bits);

  // "0110" -> [0,1,1,0]; whitespace is ignored.
  static Vector from_string(std::string_view bits);

  std::size_t size() const noexcept { return len_; }
  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i, bool v);
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  bool is_zero() const noexcept;
  std::size_t popcount() const noexcept;
  // Index of the lowest set bit, or size() if zero.
  std::size_t first_set() const noexcept;

  Vector& operator+=(const Vector& other);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend bool operator==(const Vector&, const Vector&) = default;

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  std::string to_string() const;

 private:
  std::size_t len_ = 0;
  std::vector<Word> words_;
};

// Row-major, each row padded to a whole number of words.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
  static Matrix from_row_vectors(std::span<const Vector> rows, std::size_t cols);
  static Matrix from_column_vectors(std::span<const Vector> cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v);
  void flip(std::size_t r, std::size_t c) { data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits); }

  std::span<const Word> row_words(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
  std::span<Word> row_words(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  bool is_zero() const noexcept;
  std::size_t nonzero_count() const noexcept;

  Matrix transpose() const;
  // Keeps the listed rows and columns, in the given order.
  Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

Vector operator*(const Matrix& m, const Vector& v);
Matrix operator*(const Matrix& a, const Matrix& b);

std::size_t rank(const Matrix& m);

// Basis of {v : Mv = 0}. One vector per non-pivot column f of the reduced
// row echelon form, with a 1 at f; stacked as columns the result is in
// reduced column echelon form.
std::vector<Vector> kernel_basis(const Matrix& m);

// Basis of the column space, in reduced echelon form (the nonzero rows of
// rref(M^T)), ordered by leading index.
std::vector<Vector> image_basis(const Matrix& m);

// Some x with Mx = b, or nullopt. Free variables are set to zero.
// Throws InputError when b.size() != m.rows().
std::optional<Vector> solve(const Matrix& m, const Vector& b);

// Reduced row echelon form; pivots are chosen column by column, taking the
// lowest-index row still available.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};
RowEchelon row_reduce(Matrix m);

}  // namespace uhqft::f2
