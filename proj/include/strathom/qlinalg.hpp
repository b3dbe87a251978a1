#pragma once

// Exact linear algebra over the rationals.
//
// Everything in this header is value-typed and immutable once built; the free
// functions are pure, so independent matrices may be processed concurrently.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strathom::qlinalg {

/// Arbitrary precision rational, always kept canonical (lowest terms,
/// positive denominator, zero is 0/1).
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "n", "-n" or "n/d". Throws InputError on anything else or d == 0.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

/// Sparse rational matrix. Rows are stored as column-sorted entry lists and
/// no stored entry is ever zero. Entries are canonicalized on the way in.
class MatrixQ {
 public:
  struct Entry {
    std::size_t col;
    Rational value;
  };
  using Row = std::vector<Entry>;

  MatrixQ() = default;
  MatrixQ(std::size_t rows, std::size_t cols);

  static MatrixQ identity(std::size_t n);
  static MatrixQ zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  /// Row-major dense data; every row must have exactly `cols` entries.
  static MatrixQ from_dense(std::size_t rows, std::size_t cols,
                            const std::vector<std::vector<Rational>>& data);
  static MatrixQ from_columns(std::size_t rows, std::span<const Vector> columns);
  static MatrixQ diagonal(std::span<const Rational> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  void add_to(std::size_t r, std::size_t c, const Rational& value);
  const Row& row(std::size_t r) const { return data_.at(r); }

  MatrixQ transpose() const;
  Vector apply(const Vector& v) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> to_dense() const;

  MatrixQ select_rows(std::span<const std::size_t> which) const;
  MatrixQ select_cols(std::span<const std::size_t> which) const;

  static MatrixQ vstack(const MatrixQ& top, const MatrixQ& bottom);
  static MatrixQ hstack(const MatrixQ& left, const MatrixQ& right);
  static MatrixQ block_diag(const MatrixQ& a, const MatrixQ& b);

  friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);
  friend MatrixQ operator+(const MatrixQ& a, const MatrixQ& b);
  friend MatrixQ operator-(const MatrixQ& a);
  friend MatrixQ operator*(const Rational& s, const MatrixQ& m);
  friend bool operator==(const MatrixQ& a, const MatrixQ& b);

 private:
  void check_index(std::size_t r, std::size_t c) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

/// A linear subspace of Q^ambient_dim given by linearly independent vectors.
struct Subspace {
  std::size_t ambient_dim = 0;
  std::vector<Vector> basis;

  std::size_t dim() const { return basis.size(); }
};

/// Rank over Q. Uses fraction-free sparse elimination with Markowitz pivoting.
std::size_t rank(const MatrixQ& m);

/// Basis of {v : m v = 0}; its size is cols - rank.
Subspace kernel_basis(const MatrixQ& m);

/// Basis of the column space, taken from the columns of m itself.
Subspace image_basis(const MatrixQ& m);

/// dim(a + b). Throws DimensionError on ambient mismatch.
std::size_t sum_dim(const Subspace& a, const Subspace& b);
std::size_t intersection_dim(const Subspace& a, const Subspace& b);

/// Some x with m x = b, or an empty optional when the system is inconsistent.
std::optional<Vector> solve(const MatrixQ& m, const Vector& b);

/// Inertia of a symmetric form.
struct Inertia {
  std::size_t pos = 0;
  std::size_t neg = 0;
  std::size_t null = 0;

  long signature() const { return static_cast<long>(pos) - static_cast<long>(neg); }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Congruence diagonalisation with symmetric pivoting; a 2x2 hyperbolic block
/// is split off whenever the remaining diagonal vanishes. Throws
/// ContractError if m is not square and symmetric.
Inertia signature_sym(const MatrixQ& m);

bool is_symmetric(const MatrixQ& m);

}  // namespace strathom::qlinalg
