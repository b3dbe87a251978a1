#include "doctest.h"
#include "spaces.hpp"
#include "strathom/errors.hpp"
#include "strathom/stratified.hpp"

using namespace strathom;
using namespace strathom::stratified;
using namespace strathom::testing;

namespace {

std::vector<std::size_t> column(const GradedVS& v, int top) { return v.to_vector(0, top); }

}  // namespace

TEST_CASE("kunneth basis dimensions") {
  CHECK(kunneth_basis_dims(s2xt2()) == betti({2, 6, 6, 2}));
  CHECK(kunneth_basis_dims(cp2_point()) == betti({1, 0, 0, 1}));
  TwoStrataSpace point_link = algebraic_space(0, 2, betti({1}), betti({1, 2, 1}), betti({1}),
                                              {{0, row_matrix({{1}})}});
  CHECK(kunneth_basis_dims(point_link) == betti({1, 2, 1}));

  auto blocks = kunneth_blocks(betti({1, 1}), betti({2, 4, 2}), 1);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].t == 0);
  CHECK(blocks[0].size() == 2);
  CHECK(blocks[1].offset == 2);
  CHECK(blocks[1].size() == 4);
}

TEST_CASE("space validation") {
  CHECK_THROWS_AS(algebraic_space(1, 0, betti({1, 1}), betti({1}), betti({1}),
                                  {{0, row_matrix({{2}})}}),
                  ContractError);
  CHECK_THROWS_AS(algebraic_space(1, 0, betti({1, 1}), betti({1}), betti({1}),
                                  {{0, row_matrix({{1, 1}})}}),
                  ContractError);
  CHECK_THROWS_AS(algebraic_space(1, 0, betti({0, 1}), betti({1}), betti({1}), {}), ContractError);
  CHECK_THROWS_AS(algebraic_space(1, 0, betti({1, 1, 1}), betti({1}), betti({1}), {}),
                  ContractError);
}

TEST_CASE("cone formula") {
  const GradedVS torus = betti({1, 2, 1});
  CHECK(cone_formula(torus, 2, 0) == betti({1, 2}));
  CHECK(cone_formula(torus, 2, 2) == GradedVS());
  CHECK(cone_formula(torus, 2, 1) == betti({1}));
  CHECK(cone_formula(torus, 2, -5) == torus);
}

TEST_CASE("IH of the conifold transition reproduces the example table") {
  const TwoStrataSpace x = s2xt2();
  CHECK(column(ih_ct_dims(x, -1), 4) == std::vector<std::size_t>{1, 3, 3, 1, 0});
  CHECK(column(ih_ct_dims(x, 0), 4) == std::vector<std::size_t>{1, 3, 2, 1, 1});
  CHECK(column(ih_ct_dims(x, 1), 4) == std::vector<std::size_t>{1, 1, 2, 3, 1});
  CHECK(column(ih_ct_dims(x, 2), 4) == std::vector<std::size_t>{0, 1, 3, 3, 1});

  CHECK(gamma_rank(x, -1, 2) == 2);
  CHECK(gamma_rank(x, 0, 2) == 0);
  CHECK(gamma_rank(x, 1, 3) == 3);

  IHTable t = ih_table(x, -1, 2);
  const std::vector<std::vector<MapKind>> expected = {
      {MapKind::Iso, MapKind::Iso, MapKind::Zero},
      {MapKind::Iso, MapKind::Surjective, MapKind::Zero},
      {MapKind::Surjective, MapKind::Zero, MapKind::Injective},
      {MapKind::Zero, MapKind::Injective, MapKind::Iso},
      {MapKind::Zero, MapKind::Iso, MapKind::Iso}};
  for (int j = 0; j <= 4; ++j) {
    CAPTURE(j);
    CHECK(t.annotations[static_cast<std::size_t>(j)] == expected[static_cast<std::size_t>(j)]);
  }
}

TEST_CASE("map classification") {
  CHECK(classify_map(2, 2, 2) == MapKind::Iso);
  CHECK(classify_map(1, 0, 0) == MapKind::Zero);
  CHECK(classify_map(2, 3, 2) == MapKind::Injective);
  CHECK(classify_map(3, 2, 2) == MapKind::Surjective);
  CHECK(classify_map(3, 3, 1) == MapKind::General);
}

TEST_CASE("IG groups of the example") {
  const TwoStrataSpace x = s2xt2();
  CHECK(ig_dims(x, {3, 0}) == 0);
  CHECK(ig_dims(x, {2, 1}) == 2);
  CHECK(ig_dims(x, {1, 2}) == 4);
  CHECK(ig_dims(x, {0, 3}) == 2);
  CHECK(ig_dims(x, {-1, 4}) == 0);
}

TEST_CASE("HI of the example and its extremes") {
  const TwoStrataSpace x = s2xt2();
  CHECK(column(hi_dims(x, {0, 2}), 4) == std::vector<std::size_t>{0, 2, 4, 2, 0});
  // Relative homology of I x S1 x T2 and the homology of the blowup itself.
  CHECK(column(hi_extreme(x, {-1, 2}), 4) == std::vector<std::size_t>{0, 1, 3, 3, 1});
  CHECK(column(hi_extreme(x, {1, 2}), 4) == std::vector<std::size_t>{1, 3, 3, 1, 0});
  CHECK_THROWS_AS(hi_extreme(x, {0, 2}), ContractError);
  CHECK_THROWS_AS(hi_dims(x, {0, 3}), ContractError);
}

TEST_CASE("S2 x T2 is a manifold, so IH at the zero perversity is its homology") {
  const TwoStrataSpace x = s2xt2();
  CHECK(ih_x_dims(x, 0) == convolve(betti({1, 0, 1}), betti({1, 2, 1})));
}

TEST_CASE("pinched torus") {
  const TwoStrataSpace x = pinched_torus();
  CHECK(column(hi_dims(x, {0, 2}), 2) == std::vector<std::size_t>{0, 2, 0});
  CHECK(column(ih_x_dims(x, 0), 2) == std::vector<std::size_t>{1, 0, 1});
  CHECK(all_pass(verify_theorem_hom(x, {0, 2}, 0, 2)));
}

TEST_CASE("CP2 with a point singularity") {
  const TwoStrataSpace x = cp2_point();
  CHECK(column(hi_dims(x, {1, 4}), 4) == std::vector<std::size_t>{0, 0, 1, 0, 0});
  CHECK(column(ih_x_dims(x, 1), 4) == std::vector<std::size_t>{1, 0, 1, 0, 1});
  CHECK(column(hi_extreme(x, {-1, 4}), 4) == std::vector<std::size_t>{0, 0, 1, 0, 1});
}

TEST_CASE("conifold transition is an involution") {
  std::mt19937 rng(3);
  std::vector<TwoStrataSpace> spaces = {s2xt2(), pinched_torus(), cp2_point(), torus_link_space()};
  for (int i = 0; i < 20; ++i) spaces.push_back(random_theorem_space(rng));
  for (const auto& x : spaces) {
    const TwoStrataSpace ct = conifold_transition(x);
    CHECK(ct.l == x.s);
    CHECK(ct.hL == x.hSigma);
    CHECK(conifold_transition(ct) == x);
    for (int q = -2; q <= 3; ++q) CHECK(ih_x_dims(ct, q) == ih_ct_dims(x, q));
  }
}

TEST_CASE("compactification to an isolated singularity") {
  const TwoStrataSpace z = compactify_to_isolated(s2xt2());
  CHECK(z.hL == betti({2, 6, 6, 2}));
  CHECK(z.s == 0);
  CHECK(z.l == 3);
  CHECK(hi_extreme(z, {-1, 4}) == hi_extreme(s2xt2(), {-1, 2}));
  CHECK(hi_extreme(z, {3, 4}) == s2xt2().hM);
  const TwoStrataSpace cz = compactify_to_isolated(cp2_point());
  CHECK(cz == cp2_point());
}

TEST_CASE("homological theorem on the example") {
  const TwoStrataSpace x = s2xt2();
  auto v = verify_theorem_hom(x, {0, 2}, 0, 4);
  REQUIRE(v.size() == 5);
  CHECK(all_pass(v));
  CHECK(v[2].lhs == 4);
  for (int p = -3; p <= 4; ++p) {
    CAPTURE(p);
    CHECK(all_pass(verify_theorem_hom(x, {p, 2}, 0, 4)));
    CHECK(all_pass(verify_theorem_coh(x, {p, 2}, 0, 4)));
  }
}

TEST_CASE("theorem sweeps on random algebraic spaces") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const TwoStrataSpace x = random_theorem_space(rng);
    CAPTURE(trial);
    for (int p = -5; p <= 7; ++p) {
      CAPTURE(p);
      CHECK(all_pass(verify_theorem_hom(x, {p, x.l + 1}, 0, x.n)));
      CHECK(all_pass(verify_theorem_coh(x, {p, x.l + 1}, 0, x.n)));
    }
  }
}

TEST_CASE("extreme perversities agree with the blowup on random spaces") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const TwoStrataSpace x = trial % 2 ? random_theorem_space(rng) : random_duality_space(rng);
    const int big = x.n + 2;
    CHECK(hi_extreme(x, {-big, x.l + 1}) == hi_dims(x, {-big, x.l + 1}));
    CHECK(hi_extreme(x, {big, x.l + 1}) == x.hM);
    CHECK(ih_ct_dims(x, -big) == *ih_extreme(x, -big));
    CHECK(ih_ct_dims(x, big) == *ih_extreme(x, big));
    CHECK(ih_extreme(x, 0).has_value() == (x.n - x.l == 1));
  }
}

TEST_CASE("gamma is onto in degree zero") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const TwoStrataSpace x = random_theorem_space(rng);
    for (int q = -3; q <= 4; ++q) CHECK(gamma_rank(x, q, 0) == ih_ct_dims(x, q + 1)[0]);
  }
}

TEST_CASE("HI Euler characteristic against the Moore truncation count") {
  // hi_dims asserts this internally; recompute it here from the output.
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const TwoStrataSpace x = random_theorem_space(rng);
    for (int p = -3; p <= x.l + 2; ++p) {
      const int k = x.l - p;
      long moore = 0;
      for (int r = 0; r < k; ++r) moore += (r % 2 ? -1 : 1) * static_cast<long>(x.hL[r]);
      CHECK(hi_dims(x, {p, x.l + 1}).euler_characteristic() ==
            x.hM.euler_characteristic() - x.hSigma.euler_characteristic() * moore);
    }
  }
}

TEST_CASE("duality") {
  CHECK(all_pass(verify_duality(s2xt2(), {0, 2})));
  CHECK(all_pass(verify_duality(pinched_torus(), {0, 2})));
  CHECK(all_pass(verify_duality(cp2_point(), {1, 4})));
  // Sphere with a marked point: everything palindromic.
  TwoStrataSpace sphere = isolated_cone(betti({1, 0, 1}), 2, betti({1}), {{0, row_matrix({{1}})}});
  for (int p = -3; p <= 4; ++p) CHECK(all_pass(verify_duality(sphere, {p, 3})));
  std::mt19937 rng(77);
  const TwoStrataSpace plain = random_theorem_space(rng);
  CHECK_THROWS_AS(verify_duality(plain, {0, plain.l + 1}), ContractError);

  for (int trial = 0; trial < 25; ++trial) {
    const TwoStrataSpace x = random_duality_space(rng);
    for (int p = -4; p <= 6; ++p) {
      CAPTURE(p);
      CHECK(all_pass(verify_duality(x, {p, x.l + 1})));
    }
  }
}

TEST_CASE("a boundary map that breaks Lefschetz duality is reported") {
  // Closed oriented flag with a degree-1 map that kills the boundary circles.
  TwoStrataSpace bad = isolated_cone(betti({2, 2}), 1, betti({1, 1}), {{0, row_matrix({{1, 1}})}});
  CHECK_THROWS_AS(ih_ct_dims(bad, 5), InternalError);
}

TEST_CASE("weights") {
  auto [a, b] = hodge_weights({0, 2}, 1, 4, 2);
  CHECK(a == 0);
  CHECK(b == 0);
  CHECK(hodge_weights({1, 4}, 3, 4, 2).first == 0);
  CHECK(hodge_weights({0, 3}, 2, 5, 1).first == qlinalg::Rational(1, 2));
  CHECK(hodge_weights({0, 3}, 2, 5, 1).second == 2);
  CHECK(lower_middle(3) == 0);
  CHECK(upper_middle(3) == 1);
  CHECK(lower_middle(1) == -1);
  CHECK(upper_middle(1) == 0);
  CHECK(lower_middle(4) == 1);
  CHECK(upper_middle(4) == 1);
}
