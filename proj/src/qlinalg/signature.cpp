#include "strathom/errors.hpp"
#include "strathom/qlinalg.hpp"

namespace strathom::qlinalg {

Inertia signature_sym(const MatrixQ& m) {
  if (!is_symmetric(m)) throw ContractError("signature_sym: matrix is not square and symmetric");
  std::vector<Vector> a = m.to_dense();
  std::size_t n = a.size();
  Inertia out;
  std::size_t k = 0;  // a[k..n) x [k..n) is the block still to be diagonalised

  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
  };

  while (k < n) {
    std::size_t diag = n;
    for (std::size_t i = k; i < n; ++i) {
      if (a[i][i] != 0) {
        diag = i;
        break;
      }
    }
    if (diag != n) {
      swap_index(k, diag);
      const Rational pivot = a[k][k];
      (pivot > 0 ? out.pos : out.neg) += 1;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a[i][k] == 0) continue;
        Rational f = a[i][k] / pivot;
        for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
      }
      ++k;
      continue;
    }

    // Zero diagonal: look for an off-diagonal entry to form a hyperbolic plane.
    std::size_t pi = n;
    std::size_t pj = n;
    for (std::size_t i = k; i < n && pi == n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (a[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == n) break;  // remaining block is zero
    swap_index(k, pi);
    swap_index(k + 1, pj);
    // Block [[0, b], [b, 0]] has inverse [[0, 1/b], [1/b, 0]].
    const Rational b = a[k][k + 1];
    out.pos += 1;
    out.neg += 1;
    for (std::size_t i = k + 2; i < n; ++i) {
      const Rational u = a[i][k];
      const Rational v = a[i][k + 1];
      if (u == 0 && v == 0) continue;
      for (std::size_t j = k + 2; j < n; ++j) {
        // S = A22 - A21 * inv(B) * A12
        a[i][j] -= (u * a[k + 1][j] + v * a[k][j]) / b;
      }
    }
    k += 2;
  }
  out.null = n - out.pos - out.neg;
  return out;
}

}  // namespace strathom::qlinalg
