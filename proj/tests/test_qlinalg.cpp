#include "doctest.h"
#include "fixtures.hpp"
#include "random_complex.hpp"
#include "strathom/errors.hpp"
#include "strathom/qlinalg.hpp"

#include <random>

using namespace strathom;
using namespace strathom::qlinalg;
using strathom::testing::oracle_rank;

namespace {

MatrixQ dense(std::vector<std::vector<long>> rows) {
  std::vector<Vector> data;
  for (const auto& r : rows) {
    Vector v;
    for (long x : r) v.emplace_back(x);
    data.push_back(v);
  }
  return MatrixQ::from_dense(data.size(), data.empty() ? 0 : data[0].size(), data);
}

MatrixQ random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, double density) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> den(1, 4);
  std::bernoulli_distribution keep(density);
  MatrixQ m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (keep(rng)) m.set(i, j, Rational(coeff(rng), den(rng)));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("rationals are parsed canonically") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK(parse_rational("+5") == 5);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
}

TEST_CASE("stored entries are never zero") {
  MatrixQ m(2, 2);
  m.set(0, 1, 3);
  m.set(0, 1, 0);
  CHECK(m.nonzeros() == 0);
  m.add_to(1, 1, 2);
  m.add_to(1, 1, -2);
  CHECK(m.is_zero());
  CHECK_THROWS_AS(m.set(2, 0, 1), DimensionError);
}

TEST_CASE("rank examples") {
  CHECK(rank(MatrixQ::zero(3, 3)) == 0);
  CHECK(rank(MatrixQ::identity(3)) == 3);
  CHECK(rank(dense({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(MatrixQ::identity(2)).dim() == 0);
  Subspace k = kernel_basis(dense({{1, 1}}));
  REQUIRE(k.dim() == 1);
  CHECK(k.basis[0][0] == -k.basis[0][1]);
  CHECK(k.basis[0][0] != 0);

  Subspace k2 = kernel_basis(dense({{1, 2}, {2, 4}}));
  REQUIRE(k2.dim() == 1);
  CHECK(k2.basis[0][0] == -2 * k2.basis[0][1]);
}

TEST_CASE("image examples") {
  CHECK(image_basis(MatrixQ::zero(2, 2)).dim() == 0);
  Subspace id = image_basis(MatrixQ::identity(2));
  REQUIRE(id.dim() == 2);
  CHECK(id.basis[0] == Vector{1, 0});
  CHECK(id.basis[1] == Vector{0, 1});
  Subspace col = image_basis(dense({{1}, {2}}));
  REQUIRE(col.dim() == 1);
  CHECK(col.basis[0] == Vector{1, 2});
}

TEST_CASE("sum and intersection of subspaces") {
  Subspace e1{2, {{1, 0}}};
  Subspace e2{2, {{0, 1}}};
  Subspace empty{2, {}};
  CHECK(sum_dim(e1, e2) == 2);
  CHECK(sum_dim(e1, e1) == 1);
  CHECK(sum_dim(empty, e1) == 1);
  CHECK(intersection_dim(e1, e1) == 1);
  CHECK_THROWS_AS(sum_dim(e1, Subspace{3, {}}), DimensionError);
}

TEST_CASE("solve") {
  MatrixQ m = dense({{1, 1}, {0, 2}});
  auto x = solve(m, {3, 4});
  REQUIRE(x);
  CHECK(m.apply(*x) == Vector{3, 4});
  CHECK_FALSE(solve(dense({{1}, {1}}), {1, 2}));
}

TEST_CASE("signature examples") {
  CHECK(signature_sym(dense({{1}})) == Inertia{1, 0, 0});
  CHECK(signature_sym(dense({{0, 1}, {1, 0}})) == Inertia{1, 1, 0});
  CHECK(signature_sym(dense({{2, 0, 0}, {0, -3, 0}, {0, 0, 5}})) == Inertia{2, 1, 0});
  CHECK(signature_sym(MatrixQ::zero(2, 2)) == Inertia{0, 0, 2});
  CHECK(signature_sym(MatrixQ()) == Inertia{0, 0, 0});
  CHECK_THROWS_AS(signature_sym(dense({{0, 1}, {0, 0}})), ContractError);
  CHECK_THROWS_AS(signature_sym(dense({{0, 1}})), ContractError);
}

TEST_CASE("rank agrees with an independent oracle and with its transpose") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> size(0, 9);
    MatrixQ m = random_matrix(rng, size(rng), size(rng), trial % 2 ? 0.3 : 0.8);
    const std::size_t r = rank(m);
    CHECK(r == oracle_rank(m));
    CHECK(r == rank(m.transpose()));
    CHECK(r + kernel_basis(m).dim() == m.cols());
    CHECK(image_basis(m).dim() == r);
    for (const auto& v : kernel_basis(m).basis) {
      for (const auto& x : m.apply(v)) CHECK(x == 0);
    }
  }
}

TEST_CASE("rank does not depend on row or column order") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    MatrixQ m = random_matrix(rng, 7, 6, 0.4);
    std::vector<std::size_t> rows{6, 5, 4, 3, 2, 1, 0};
    std::vector<std::size_t> cols{3, 1, 5, 0, 4, 2};
    CHECK(rank(m.select_rows(rows).select_cols(cols)) == rank(m));
  }
}

TEST_CASE("signature is a congruence invariant") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 7);
    const std::size_t n = size(rng);
    MatrixQ a = random_matrix(rng, n, n, 0.5);
    MatrixQ sym = a + a.transpose();
    MatrixQ p = strathom::testing::random_invertible(n, rng);
    Inertia base = signature_sym(sym);
    CHECK(base.pos + base.neg + base.null == n);
    CHECK(base.pos + base.neg == rank(sym));
    CHECK(signature_sym(p.transpose() * sym * p) == base);

    Inertia doubled = signature_sym(MatrixQ::block_diag(sym, -sym));
    CHECK(doubled.pos == doubled.neg);
  }
}
