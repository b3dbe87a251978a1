#include "doctest.h"
#include "fixtures.hpp"
#include "random_complex.hpp"
#include "spaces.hpp"
#include "strathom/errors.hpp"
#include "strathom/signatures.hpp"

using namespace strathom;
using namespace strathom::signatures;
using namespace strathom::testing;
using simplicial::OrientedPseudomanifold;
using simplicial::make_oriented;

namespace {

PairingData pairing(std::size_t degree, std::vector<std::vector<long>> rows) {
  return {degree, rows.empty() ? qlinalg::MatrixQ(0, 0) : row_matrix(rows), ""};
}

// CP^2 oriented so that the generator squares to +1, and the same
// orientation restricted to CP^2 minus its first top simplex.
struct Cp2 {
  OrientedPseudomanifold closed;
  OrientedPseudomanifold ball_removed;
};

Cp2 positive_cp2() {
  const auto cp2 = cp2_9();
  OrientedPseudomanifold m = make_oriented(cp2);
  std::vector<int> o = m.orientation;
  if (qlinalg::signature_sym(simplicial::cup_pairing(m, 2).matrix).signature() < 0) {
    for (int& x : o) x = -x;
  }
  std::vector<int> rest(o.begin() + 1, o.end());
  return {make_oriented(cp2, std::nullopt, o),
          make_oriented(cp2_minus_simplex(), std::nullopt, rest)};
}

}  // namespace

TEST_CASE("Witt condition") {
  CHECK(witt_check(s2xt2()).reason == WittReason::LinkDimOdd);
  CHECK(witt_check(cp2_point()).is_witt);
  CHECK(witt_check(pinched_torus()).is_witt);

  const WittVerdict fail = witt_check(torus_link_space());
  CHECK_FALSE(fail.is_witt);
  CHECK(fail.reason == WittReason::Fails);
  CHECK(to_string(fail.reason) == "fails");

  // Link S^2 over a circle: l even, middle link homology zero.
  auto s2_link = stratified::suspension_product(betti({1, 0, 1}), 2, betti({1, 1}), 1);
  const WittVerdict even = witt_check(s2_link);
  CHECK(even.is_witt);
  CHECK(even.reason == WittReason::MiddleLinkHomologyZero);

  auto odd = stratified::suspension_product(betti({1, 1}), 1, betti({1, 1}), 1);
  CHECK_THROWS_AS(witt_check(odd), ContractError);
}

TEST_CASE("Novikov signature of small forms") {
  CHECK(novikov_signature(pairing(2, {})) == 0);
  CHECK(novikov_signature(pairing(2, {{0, 1}, {1, 0}})) == 0);
  CHECK(novikov_signature(pairing(2, {{1, 0}, {0, 1}})) == 2);
  CHECK(novikov_signature(pairing(2, {{1, 2}, {2, 1}})) == 0);
  CHECK(novikov_signature(pairing(4, {{-1, 0, 0}, {0, 0, 0}, {0, 0, 3}})) == 0);
  CHECK(novikov_signature(pairing(2, {{2, 1}, {1, 2}})) == 2);
  CHECK_THROWS_AS(novikov_signature(pairing(1, {{0, 1}, {-1, 0}})), ContractError);
  CHECK_THROWS_AS(novikov_signature({2, qlinalg::MatrixQ(1, 2), ""}), ContractError);
}

TEST_CASE("Novikov signature is a congruence invariant") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> sign(-1, 1);
  std::uniform_int_distribution<std::size_t> size(0, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = size(rng);
    qlinalg::MatrixQ d(n, n);
    long expected = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const int s = sign(rng);
      d.set(i, i, s);
      expected += s;
    }
    const qlinalg::MatrixQ p = random_invertible(n, rng);
    const PairingData form{2, p.transpose() * d * p, ""};
    CHECK(novikov_signature(form) == expected);
  }
}

TEST_CASE("Novikov signature of triangulated blowups") {
  const Cp2 cp2 = positive_cp2();
  const PairingData closed = simplicial::cup_pairing(cp2.closed, 2);
  const PairingData removed = simplicial::cup_pairing(cp2.ball_removed, 2);
  CHECK(novikov_signature(closed) == 1);
  CHECK(novikov_signature(removed) == 1);

  std::vector<int> flipped = cp2.ball_removed.orientation;
  for (int& x : flipped) x = -x;
  auto reversed = make_oriented(cp2_minus_simplex(), std::nullopt, flipped);
  CHECK(novikov_signature(simplicial::cup_pairing(reversed, 2)) == -1);

  auto m = make_oriented(product(product(interval(), hollow_triangle()), torus7()));
  CHECK(novikov_signature(simplicial::cup_pairing(m, 2)) == 0);
}

TEST_CASE("signature chain on S2 x T2") {
  auto m = make_oriented(product(product(interval(), hollow_triangle()), torus7()));
  const SignatureReport r = verify_theorem_sig(s2xt2(), simplicial::cup_pairing(m, 2));
  CHECK(r.all_equal);
  CHECK_FALSE(r.trivially_zero);
  CHECK(r.sigma_Mbar == 0);
  CHECK(r.sigma_HI_X == 0);
  CHECK(r.sigma_IH_X == 0);
  CHECK(r.sigma_Z == 0);
  CHECK(r.hi_middle == 4);
  CHECK(r.ih_x_middle == 2);
  CHECK(r.gamma_image == 0);
  CHECK(r.pairing_rank == 0);
  CHECK(r.rank_consistent);
}

TEST_CASE("signature chain on CP2 with a marked point") {
  const Cp2 cp2 = positive_cp2();
  const SignatureReport r = verify_theorem_sig(cp2_point(), simplicial::cup_pairing(cp2.ball_removed, 2));
  CHECK(r.all_equal);
  CHECK(r.sigma_Mbar == 1);
  CHECK(r.sigma_IH_X == 1);
  CHECK(r.hi_middle == 1);
  CHECK(r.ih_x_middle == 1);
  CHECK(r.ih_z_middle == 1);
  CHECK(r.gamma_image == 1);
  CHECK(r.rank_consistent);

  // IH of X is the cohomology of CP^2, whose form is computed on the closed triangulation.
  CHECK(r.sigma_IH_X == novikov_signature(simplicial::cup_pairing(cp2.closed, 2)));
}

TEST_CASE("signature chain preconditions") {
  CHECK_THROWS_AS(verify_theorem_sig(torus_link_space(), pairing(2, {})), ContractError);
  CHECK_THROWS_AS(verify_theorem_sig(cp2_point(), pairing(4, {{1}})), ContractError);

  const SignatureReport trivial = verify_theorem_sig(pinched_torus(), pairing(1, {{0}}));
  CHECK(trivial.trivially_zero);
  CHECK(trivial.all_equal);
  CHECK(trivial.sigma_HI_X == 0);
}

TEST_CASE("a mismatched pairing breaks rank consistency") {
  const SignatureReport r = verify_theorem_sig(s2xt2(), pairing(2, {{1, 0}, {0, -1}}));
  CHECK(r.all_equal);
  CHECK(r.sigma_Mbar == 0);
  CHECK_FALSE(r.rank_consistent);
}
