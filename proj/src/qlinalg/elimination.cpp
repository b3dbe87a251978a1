#include "strathom/errors.hpp"
#include "strathom/qlinalg.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace strathom::qlinalg {

namespace {

// ---------------------------------------------------------------------------
// Fraction-free sparse elimination for rank.
//
// Rows are kept as primitive integer vectors (content divided out after every
// update), so no rational arithmetic happens in the inner loop. Pivots are
// chosen by the Markowitz cost (r - 1)(c - 1) with ties broken by column then
// row index, which makes the result independent of storage order.
// ---------------------------------------------------------------------------

struct IntEntry {
  std::size_t col;
  mpz_class value;
};
using IntRow = std::vector<IntEntry>;

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& e : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.value.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& e : row) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
}

IntRow to_int_row(const MatrixQ::Row& row) {
  mpz_class lcm = 1;
  for (const auto& e : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.value.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& e : row) {
    mpz_class v = e.value.get_num() * (lcm / e.value.get_den());
    out.push_back({e.col, std::move(v)});
  }
  make_primitive(out);
  return out;
}

// target <- p * target - a * pivot, where a is target's entry in the pivot column.
void eliminate(IntRow& target, const IntRow& pivot, std::size_t pivot_col) {
  const mpz_class* pv = nullptr;
  for (const auto& e : pivot) {
    if (e.col == pivot_col) pv = &e.value;
  }
  const mpz_class* av = nullptr;
  for (const auto& e : target) {
    if (e.col == pivot_col) av = &e.value;
  }
  mpz_class g = gcd(*pv, *av);
  mpz_class p = *pv / g;
  mpz_class a = *av / g;

  IntRow out;
  out.reserve(target.size() + pivot.size());
  auto x = target.begin();
  auto y = pivot.begin();
  while (x != target.end() || y != pivot.end()) {
    if (y == pivot.end() || (x != target.end() && x->col < y->col)) {
      out.push_back({x->col, p * x->value});
      ++x;
    } else if (x == target.end() || y->col < x->col) {
      out.push_back({y->col, -a * y->value});
      ++y;
    } else {
      mpz_class v = p * x->value - a * y->value;
      if (v != 0) out.push_back({x->col, std::move(v)});
      ++x;
      ++y;
    }
  }
  make_primitive(out);
  target = std::move(out);
}

// ---------------------------------------------------------------------------
// Gauss-Jordan over Q, used where an explicit reduced form is needed
// (kernels, images, solving). Result rows have pivot entry 1 and every pivot
// column is zero in all other rows.
// ---------------------------------------------------------------------------

struct ReducedForm {
  std::vector<MatrixQ::Row> rows;
  std::vector<std::size_t> pivot_cols;  // pivot_cols[i] belongs to rows[i]
};

void axpy(MatrixQ::Row& dst, const MatrixQ::Row& src, const Rational& factor) {
  MatrixQ::Row out;
  out.reserve(dst.size() + src.size());
  auto a = dst.begin();
  auto b = src.begin();
  while (a != dst.end() || b != src.end()) {
    if (b == src.end() || (a != dst.end() && a->col < b->col)) {
      out.push_back(std::move(*a++));
    } else if (a == dst.end() || b->col < a->col) {
      out.push_back({b->col, factor * b->value});
      ++b;
    } else {
      Rational v = a->value + factor * b->value;
      if (v != 0) out.push_back({a->col, std::move(v)});
      ++a;
      ++b;
    }
  }
  dst = std::move(out);
}

const Rational* find_entry(const MatrixQ::Row& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const MatrixQ::Entry& e, std::size_t c) { return e.col < c; });
  return (it != row.end() && it->col == col) ? &it->value : nullptr;
}

ReducedForm gauss_jordan(const MatrixQ& m) {
  std::vector<MatrixQ::Row> work;
  work.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!m.row(r).empty()) work.push_back(m.row(r));
  }
  std::vector<bool> used(work.size(), false);
  std::vector<std::size_t> pivot_rows;
  ReducedForm out;
  for (std::size_t col = 0; col < m.cols(); ++col) {
    // Among unused rows with a nonzero in this column prefer the sparsest.
    std::size_t best = work.size();
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (used[r] || find_entry(work[r], col) == nullptr) continue;
      if (best == work.size() || work[r].size() < work[best].size()) best = r;
    }
    if (best == work.size()) continue;
    used[best] = true;
    Rational inv = 1 / *find_entry(work[best], col);
    for (auto& e : work[best]) e.value *= inv;
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r == best) continue;
      if (const Rational* v = find_entry(work[r], col)) {
        Rational f = -*v;
        axpy(work[r], work[best], f);
      }
    }
    pivot_rows.push_back(best);
    out.pivot_cols.push_back(col);
  }
  for (std::size_t r : pivot_rows) out.rows.push_back(std::move(work[r]));
  return out;
}

}  // namespace

std::size_t rank(const MatrixQ& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!m.row(r).empty()) rows.push_back(to_int_row(m.row(r)));
  }
  std::vector<std::set<std::size_t>> col_rows(m.cols());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& e : rows[r]) col_rows[e.col].insert(r);
  }

  std::size_t result = 0;
  while (true) {
    std::size_t best_col = m.cols();
    std::size_t best_row = 0;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t c = 0; c < m.cols() && best_cost > 0; ++c) {
      const auto& rs = col_rows[c];
      if (rs.empty()) continue;
      for (std::size_t r : rs) {
        std::size_t cost = (rows[r].size() - 1) * (rs.size() - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_col = c;
          best_row = r;
          if (cost == 0) break;
        }
      }
    }
    if (best_col == m.cols()) break;
    ++result;

    const IntRow pivot = rows[best_row];
    for (const auto& e : pivot) col_rows[e.col].erase(best_row);

    std::vector<std::size_t> targets(col_rows[best_col].begin(), col_rows[best_col].end());
    for (std::size_t r : targets) {
      for (const auto& e : rows[r]) col_rows[e.col].erase(r);
      eliminate(rows[r], pivot, best_col);
      for (const auto& e : rows[r]) col_rows[e.col].insert(r);
    }
    rows[best_row].clear();
  }
  return result;
}

Subspace kernel_basis(const MatrixQ& m) {
  ReducedForm red = gauss_jordan(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : red.pivot_cols) is_pivot[c] = true;

  Subspace ker{m.cols(), {}};
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < red.rows.size(); ++i) {
      if (const Rational* x = find_entry(red.rows[i], free)) v[red.pivot_cols[i]] = -*x;
    }
    ker.basis.push_back(std::move(v));
  }
  return ker;
}

Subspace image_basis(const MatrixQ& m) {
  ReducedForm red = gauss_jordan(m);
  std::vector<std::size_t> cols = red.pivot_cols;
  std::sort(cols.begin(), cols.end());
  Subspace img{m.rows(), {}};
  for (std::size_t c : cols) img.basis.push_back(m.column(c));
  return img;
}

std::size_t sum_dim(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim != b.ambient_dim) {
    throw DimensionError("sum_dim: ambient dimensions differ (" + std::to_string(a.ambient_dim) +
                         " vs " + std::to_string(b.ambient_dim) + ")");
  }
  std::vector<Vector> cols = a.basis;
  cols.insert(cols.end(), b.basis.begin(), b.basis.end());
  return rank(MatrixQ::from_columns(a.ambient_dim, cols));
}

std::size_t intersection_dim(const Subspace& a, const Subspace& b) {
  return a.dim() + b.dim() - sum_dim(a, b);
}

std::optional<Vector> solve(const MatrixQ& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionError("solve: right-hand side length mismatch");
  MatrixQ aug = MatrixQ::hstack(m, MatrixQ::from_columns(m.rows(), std::span<const Vector>(&b, 1)));
  ReducedForm red = gauss_jordan(aug);
  Vector x(m.cols());
  for (std::size_t i = 0; i < red.rows.size(); ++i) {
    if (red.pivot_cols[i] == m.cols()) return std::nullopt;
    if (const Rational* v = find_entry(red.rows[i], m.cols())) x[red.pivot_cols[i]] = *v;
  }
  return x;
}

}  // namespace strathom::qlinalg
