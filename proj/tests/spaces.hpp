#pragma once

// Two-strata spaces shared by the stratified, signature and acceptance tests.

#include "strathom/stratified.hpp"

#include <random>

namespace strathom::testing {

using stratified::TwoStrataSpace;

inline chains::GradedVS betti(std::vector<std::size_t> v) { return chains::GradedVS::from_vector(v); }

inline qlinalg::MatrixQ row_matrix(std::vector<std::vector<long>> rows) {
  std::vector<qlinalg::Vector> data;
  for (const auto& r : rows) {
    qlinalg::Vector v;
    for (long x : r) v.emplace_back(x);
    data.push_back(v);
  }
  return qlinalg::MatrixQ::from_dense(data.size(), data.empty() ? 0 : data[0].size(), data);
}

/// X = S^2 x T^2 stratified by two points x T^2: link S^1, Sigma two tori.
inline TwoStrataSpace s2xt2() {
  return stratified::suspension_product(betti({1, 1}), 1, betti({1, 2, 1}), 2, "S2xT2");
}

/// Torus with one meridian circle collapsed to a point.
inline TwoStrataSpace pinched_torus() {
  return stratified::isolated_cone(betti({2, 2}), 1, betti({1, 1}),
                                   {{0, row_matrix({{1, 1}})}, {1, row_matrix({{1, 1}})}}, true,
                                   "pinched torus");
}

/// CP^2 with one point declared singular: link S^3, M-bar = CP^2 minus a ball.
inline TwoStrataSpace cp2_point() {
  return stratified::isolated_cone(betti({1, 0, 0, 1}), 3, betti({1, 0, 1}),
                                   {{0, row_matrix({{1}})}}, true, "CP2 point");
}

/// S(T^2) x S^1: link dimension 2 with nonzero middle homology.
inline TwoStrataSpace torus_link_space() {
  return stratified::suspension_product(betti({1, 2, 1}), 2, betti({1, 1}), 1, "S(T2)xS1");
}

inline std::vector<std::size_t> random_betti(std::mt19937& rng, int top, bool palindromic) {
  std::uniform_int_distribution<int> d(0, 4);
  std::vector<std::size_t> v(static_cast<std::size_t>(top + 1));
  for (int i = 0; i <= top; ++i) v[static_cast<std::size_t>(i)] = static_cast<std::size_t>(d(rng));
  if (palindromic) {
    v[0] = 1;
    for (int i = 0; i <= top; ++i) v[static_cast<std::size_t>(top - i)] = v[static_cast<std::size_t>(i)];
  } else if (v[0] == 0) {
    v[0] = 1;
  }
  return v;
}

/// Algebraic space with n <= 6, Betti numbers <= 4, random integer betaT in
/// positive degrees and a component assignment in degree 0.
inline TwoStrataSpace random_theorem_space(std::mt19937& rng) {
  std::uniform_int_distribution<int> ld(0, 4);
  const int l = ld(rng);
  std::uniform_int_distribution<int> sd(0, 5 - l);
  const int s = sd(rng);
  const int n = l + s + 1;
  auto hL = betti(random_betti(rng, l, false));
  auto hS = betti(random_betti(rng, s, false));
  auto hM = betti(random_betti(rng, n - 1, false));
  const auto b = chains::convolve(hL, hS);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::map<int, qlinalg::MatrixQ> beta;
  for (int j = 0; j <= b.max_degree(); ++j) {
    qlinalg::MatrixQ m(hM[j], b[j]);
    if (m.rows() == 0 || m.cols() == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (j == 0) {
        std::uniform_int_distribution<std::size_t> comp(0, m.rows() - 1);
        m.set(comp(rng), c, 1);
      } else {
        for (std::size_t r = 0; r < m.rows(); ++r) m.set(r, c, coeff(rng));
      }
    }
    beta.emplace(j, std::move(m));
  }
  return stratified::algebraic_space(l, s, hL, hS, hM, beta, false, "random");
}

/// S(L) x Sigma0 with connected, Poincare-dual L and Sigma0, n <= 6.
inline TwoStrataSpace random_duality_space(std::mt19937& rng) {
  std::uniform_int_distribution<int> ld(1, 4);
  const int l = ld(rng);
  std::uniform_int_distribution<int> sd(0, 5 - l);
  const int s = sd(rng);
  return stratified::suspension_product(betti(random_betti(rng, l, true)), l,
                                        betti(random_betti(rng, s, true)), s, "random dual");
}

}  // namespace strathom::testing
