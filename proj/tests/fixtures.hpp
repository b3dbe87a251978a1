#pragma once

// Small triangulations and an independent dense rank used as test oracles.

#include "strathom/simplicial.hpp"

#include <string>
#include <vector>

namespace strathom::testing {

using simplicial::Simplex;
using simplicial::SimplicialComplex;

inline std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

inline SimplicialComplex two_points() { return SimplicialComplex::from_indices(numbered(2), {}); }
inline SimplicialComplex hollow_triangle() {
  return SimplicialComplex::from_indices(numbered(3), {{0, 1}, {0, 2}, {1, 2}});
}
inline SimplicialComplex solid_triangle() {
  return SimplicialComplex::from_indices(numbered(3), {{0, 1, 2}});
}
inline SimplicialComplex interval() { return SimplicialComplex::from_indices(numbered(2), {{0, 1}}); }
inline SimplicialComplex sphere2() {
  return SimplicialComplex::from_indices(numbered(4), {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}
/// Seven-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline SimplicialComplex torus7() {
  std::vector<Simplex> top;
  for (std::size_t i = 0; i < 7; ++i) {
    top.push_back({i, (i + 1) % 7, (i + 3) % 7});
    top.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex::from_indices(numbered(7), top);
}
/// Disk as a cone on a pentagon.
inline SimplicialComplex disk() {
  std::vector<Simplex> top;
  for (std::size_t i = 0; i < 5; ++i) top.push_back({5, i, (i + 1) % 5});
  return SimplicialComplex::from_indices(numbered(6), top);
}

/// Rank by dense row echelon form, written independently of the library.
inline std::size_t oracle_rank(const qlinalg::MatrixQ& m) {
  std::vector<qlinalg::Vector> a = m.to_dense();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      qlinalg::Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Betti numbers from oracle ranks of the boundary matrices.
inline std::vector<std::size_t> oracle_betti(const SimplicialComplex& s) {
  std::vector<std::size_t> ranks(static_cast<std::size_t>(s.dimension() + 2), 0);
  for (int j = 1; j <= s.dimension(); ++j) {
    ranks[static_cast<std::size_t>(j)] = oracle_rank(simplicial::boundary_matrix(s, j));
  }
  std::vector<std::size_t> out;
  for (int j = 0; j <= s.dimension(); ++j) {
    auto u = static_cast<std::size_t>(j);
    out.push_back(s.count(j) - ranks[u] - ranks[u + 1]);
  }
  return out;
}

}  // namespace strathom::testing

namespace strathom::testing {

/// A 9-vertex triangulation of the complex projective plane (1-based labels).
inline SimplicialComplex cp2_9() {
  const std::vector<std::vector<std::size_t>> facets = {
      {1, 2, 3, 4, 5}, {1, 2, 3, 4, 6}, {1, 2, 3, 5, 6}, {1, 2, 4, 5, 7}, {1, 2, 4, 6, 8},
      {1, 2, 4, 7, 8}, {1, 2, 5, 6, 7}, {1, 2, 6, 7, 9}, {1, 2, 6, 8, 9}, {1, 2, 7, 8, 9},
      {1, 3, 4, 5, 9}, {1, 3, 4, 6, 9}, {1, 3, 5, 6, 7}, {1, 3, 5, 7, 8}, {1, 3, 5, 8, 9},
      {1, 3, 6, 7, 9}, {1, 3, 7, 8, 9}, {1, 4, 5, 7, 8}, {1, 4, 5, 8, 9}, {1, 4, 6, 8, 9},
      {2, 3, 4, 5, 9}, {2, 3, 4, 6, 8}, {2, 3, 4, 7, 8}, {2, 3, 4, 7, 9}, {2, 3, 5, 6, 8},
      {2, 3, 5, 8, 9}, {2, 3, 7, 8, 9}, {2, 4, 5, 7, 9}, {2, 5, 6, 7, 9}, {2, 5, 6, 8, 9},
      {3, 4, 6, 7, 8}, {3, 4, 6, 7, 9}, {3, 5, 6, 7, 8}, {4, 5, 6, 7, 8}, {4, 5, 6, 7, 9},
      {4, 5, 6, 8, 9}};
  std::vector<std::string> labels;
  for (int i = 1; i <= 9; ++i) labels.push_back(std::to_string(i));
  std::vector<Simplex> top;
  for (const auto& f : facets) {
    Simplex s;
    for (std::size_t v : f) s.push_back(v - 1);
    top.push_back(s);
  }
  return SimplicialComplex::from_indices(labels, top);
}

/// The same complex with its first top simplex removed.
inline SimplicialComplex cp2_minus_simplex() {
  SimplicialComplex full = cp2_9();
  std::vector<Simplex> top(full.simplices(4).begin() + 1, full.simplices(4).end());
  return SimplicialComplex::from_indices(full.labels(), top);
}

}  // namespace strathom::testing
