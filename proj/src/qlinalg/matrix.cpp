#include "strathom/errors.hpp"
#include "strathom/qlinalg.hpp"

#include <algorithm>
#include <cctype>

namespace strathom::qlinalg {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) {
    return std::isdigit(ch) != 0;
  });
}

// Merges `src` scaled by `factor` into `dst`, dropping cancelled entries.
void axpy_row(MatrixQ::Row& dst, const MatrixQ::Row& src, const Rational& factor) {
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

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw InputError("not a rational literal: '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  if (den.front() == '+') den.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

MatrixQ::MatrixQ(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

MatrixQ MatrixQ::identity(std::size_t n) {
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, Rational(1)});
  return m;
}

MatrixQ MatrixQ::from_dense(std::size_t rows, std::size_t cols,
                            const std::vector<std::vector<Rational>>& data) {
  if (data.size() != rows) throw DimensionError("dense matrix: wrong row count");
  MatrixQ m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (data[r].size() != cols) throw DimensionError("dense matrix: ragged row");
    for (std::size_t c = 0; c < cols; ++c) {
      Rational v = data[r][c];
      v.canonicalize();
      if (v != 0) m.data_[r].push_back({c, std::move(v)});
    }
  }
  return m;
}

MatrixQ MatrixQ::from_columns(std::size_t rows, std::span<const Vector> columns) {
  MatrixQ m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) {
      Rational v = columns[c][r];
      v.canonicalize();
      if (v != 0) m.data_[r].push_back({c, std::move(v)});
    }
  }
  return m;
}

MatrixQ MatrixQ::diagonal(std::span<const Rational> diag) {
  MatrixQ m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) {
    Rational v = diag[i];
    v.canonicalize();
    if (v != 0) m.data_[i].push_back({i, std::move(v)});
  }
  return m;
}

std::size_t MatrixQ::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

void MatrixQ::check_index(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
}

Rational MatrixQ::at(std::size_t r, std::size_t c) const {
  check_index(r, c);
  const auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->value;
  return Rational(0);
}

void MatrixQ::set(std::size_t r, std::size_t c, const Rational& raw) {
  check_index(r, c);
  Rational value = raw;
  value.canonicalize();
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  const bool present = it != row.end() && it->col == c;
  if (value == 0) {
    if (present) row.erase(it);
  } else if (present) {
    it->value = value;
  } else {
    row.insert(it, Entry{c, value});
  }
}

void MatrixQ::add_to(std::size_t r, std::size_t c, const Rational& value) {
  if (value == 0) return;
  set(r, c, at(r, c) + value);
}

MatrixQ MatrixQ::transpose() const {
  MatrixQ t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) t.data_[e.col].push_back({r, e.value});
  }
  return t;
}

Vector MatrixQ::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) out[r] += e.value * v[e.col];
  }
  return out;
}

Vector MatrixQ::column(std::size_t c) const {
  if (c >= cols_) throw DimensionError("column index out of range");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

std::vector<Vector> MatrixQ::to_dense() const {
  std::vector<Vector> out(rows_, Vector(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) out[r][e.col] = e.value;
  }
  return out;
}

MatrixQ MatrixQ::select_rows(std::span<const std::size_t> which) const {
  MatrixQ m(which.size(), cols_);
  for (std::size_t i = 0; i < which.size(); ++i) m.data_[i] = data_.at(which[i]);
  return m;
}

MatrixQ MatrixQ::select_cols(std::span<const std::size_t> which) const {
  std::vector<std::ptrdiff_t> remap(cols_, -1);
  for (std::size_t i = 0; i < which.size(); ++i) {
    if (which[i] >= cols_) throw DimensionError("column index out of range");
    remap[which[i]] = static_cast<std::ptrdiff_t>(i);
  }
  MatrixQ m(rows_, which.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) {
      if (remap[e.col] >= 0) m.data_[r].push_back({static_cast<std::size_t>(remap[e.col]), e.value});
    }
    std::sort(m.data_[r].begin(), m.data_[r].end(),
              [](const Entry& a, const Entry& b) { return a.col < b.col; });
  }
  return m;
}

MatrixQ MatrixQ::vstack(const MatrixQ& top, const MatrixQ& bottom) {
  if (top.cols_ != bottom.cols_) throw DimensionError("vstack: column mismatch");
  MatrixQ m(top.rows_ + bottom.rows_, top.cols_);
  std::copy(top.data_.begin(), top.data_.end(), m.data_.begin());
  std::copy(bottom.data_.begin(), bottom.data_.end(), m.data_.begin() + top.rows_);
  return m;
}

MatrixQ MatrixQ::hstack(const MatrixQ& left, const MatrixQ& right) {
  if (left.rows_ != right.rows_) throw DimensionError("hstack: row mismatch");
  MatrixQ m(left.rows_, left.cols_ + right.cols_);
  for (std::size_t r = 0; r < left.rows_; ++r) {
    m.data_[r] = left.data_[r];
    for (const auto& e : right.data_[r]) m.data_[r].push_back({e.col + left.cols_, e.value});
  }
  return m;
}

MatrixQ MatrixQ::block_diag(const MatrixQ& a, const MatrixQ& b) {
  MatrixQ m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) m.data_[r] = a.data_[r];
  for (std::size_t r = 0; r < b.rows_; ++r) {
    for (const auto& e : b.data_[r]) m.data_[a.rows_ + r].push_back({e.col + a.cols_, e.value});
  }
  return m;
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  MatrixQ m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    MatrixQ::Row acc;
    for (const auto& e : a.data_[r]) axpy_row(acc, b.data_[e.col], e.value);
    m.data_[r] = std::move(acc);
  }
  return m;
}

MatrixQ operator+(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
  MatrixQ m = a;
  for (std::size_t r = 0; r < a.rows_; ++r) axpy_row(m.data_[r], b.data_[r], Rational(1));
  return m;
}

MatrixQ operator-(const MatrixQ& a) {
  MatrixQ m = a;
  for (auto& row : m.data_) {
    for (auto& e : row) e.value = -e.value;
  }
  return m;
}

MatrixQ operator*(const Rational& s, const MatrixQ& a) {
  if (s == 0) return MatrixQ(a.rows_, a.cols_);
  MatrixQ m = a;
  for (auto& row : m.data_) {
    for (auto& e : row) e.value *= s;
  }
  return m;
}

bool operator==(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    const auto& x = a.data_[r];
    const auto& y = b.data_[r];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].col != y[i].col || x[i].value != y[i].value) return false;
    }
  }
  return true;
}

bool is_symmetric(const MatrixQ& m) { return m.rows() == m.cols() && m == m.transpose(); }

}  // namespace strathom::qlinalg
