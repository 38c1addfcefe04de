#include <doctest.h>

#include <random>

#include "uhqft/errors.hpp"
#include "uhqft/f2linalg.hpp"

using namespace uhqft;
using namespace uhqft::f2;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::bernoulli_distribution coin(0.4);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, coin(rng));
  return m;
}

}  // namespace

TEST_CASE("vector arithmetic") {
  Vector a = Vector::from_string("1010 1");
  Vector b{0, 1, 1, 0, 1};
  CHECK(a.size() == 5);
  CHECK((a + b) == Vector::from_string("11000"));
  CHECK((a + a).is_zero());
  CHECK(a.popcount() == 3);
  CHECK(b.first_set() == 1);
  CHECK(Vector(7).first_set() == 7);
  CHECK(a.to_string() == "10101");
}

TEST_CASE("vectors crossing word boundaries") {
  Vector v(130);
  v.set(0, true);
  v.set(64, true);
  v.set(129, true);
  CHECK(v.popcount() == 3);
  v.flip(64);
  CHECK(v.first_set() == 0);
  v.flip(0);
  CHECK(v.first_set() == 129);
}

TEST_CASE("rank of small matrices") {
  CHECK(rank(Matrix(3, 4)) == 0);
  CHECK(rank(Matrix::identity(5)) == 5);
  CHECK(rank(Matrix::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})) == 2);
  CHECK(rank(Matrix::from_rows({{1, 0}, {1, 0}, {0, 1}})) == 2);
  CHECK(rank(Matrix(0, 3)) == 0);
}

TEST_CASE("product and transpose") {
  const Matrix a = Matrix::from_rows({{1, 1, 0}, {0, 1, 1}});
  const Matrix b = Matrix::from_rows({{1, 0}, {1, 1}, {0, 1}});
  CHECK(a * b == Matrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(a.transpose().transpose() == a);
  CHECK(a * Vector{1, 1, 1} == Vector{0, 0});
}

TEST_CASE("kernel and image satisfy rank-nullity") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = 1 + trial % 9, cols = 1 + (trial * 5) % 140;
    const Matrix m = random_matrix(rng, rows, cols);
    const auto kernel = kernel_basis(m);
    const auto image = image_basis(m);
    CHECK(kernel.size() + rank(m) == cols);
    CHECK(image.size() == rank(m));
    for (const Vector& v : kernel) CHECK((m * v).is_zero());
    if (!kernel.empty()) CHECK(rank(Matrix::from_column_vectors(kernel, cols)) == kernel.size());
  }
}

TEST_CASE("image basis is reduced") {
  const Matrix m = Matrix::from_rows({{1, 1}, {1, 1}, {0, 1}});
  const auto image = image_basis(m);
  REQUIRE(image.size() == 2);
  CHECK(image[0] == Vector{1, 1, 0});
  CHECK(image[1] == Vector{0, 0, 1});
}

TEST_CASE("solve") {
  const Matrix m = Matrix::from_rows({{1, 1, 0}, {0, 1, 1}});
  const auto x = solve(m, Vector{1, 0});
  REQUIRE(x.has_value());
  CHECK(m * *x == Vector{1, 0});
  CHECK_FALSE(solve(Matrix::from_rows({{1, 0}, {1, 0}}), Vector{1, 0}).has_value());
  CHECK_THROWS_AS(solve(m, Vector{1, 0, 0}), InputError);
}

TEST_CASE("row reduction pivots") {
  const RowEchelon r = row_reduce(Matrix::from_rows({{0, 1, 1}, {1, 1, 0}, {1, 0, 1}}));
  CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1});
  CHECK(r.reduced.row(0) == Vector{1, 0, 1});
  CHECK(r.reduced.row(1) == Vector{0, 1, 1});
  CHECK(r.reduced.row(2).is_zero());
}

TEST_CASE("submatrix") {
  const Matrix m = Matrix::from_rows({{1, 0, 1}, {0, 1, 0}});
  const std::vector<std::size_t> rows{1, 0}, cols{2, 1};
  CHECK(m.submatrix(rows, cols) == Matrix::from_rows({{0, 1}, {1, 0}}));
}
