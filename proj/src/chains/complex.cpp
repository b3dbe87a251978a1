#include "strathom/chains.hpp"
#include "strathom/errors.hpp"

#include <string>

namespace strathom::chains {

namespace {

std::string shape(const MatrixQ& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

// Copies `src` into `dst` with its top-left corner at (r0, c0).
void place(MatrixQ& dst, const MatrixQ& src, std::size_t r0, std::size_t c0,
           const Rational& scale = 1) {
  for (std::size_t r = 0; r < src.rows(); ++r) {
    for (const auto& e : src.row(r)) dst.set(r0 + r, c0 + e.col, scale * e.value);
  }
}

}  // namespace

ChainComplex::ChainComplex(GradedVS spaces, std::map<int, MatrixQ> differentials)
    : spaces_(std::move(spaces)) {
  for (auto& [j, m] : differentials) {
    if (m.rows() != spaces_[j - 1] || m.cols() != spaces_[j]) {
      throw DimensionError("differential d_" + std::to_string(j) + " has shape " + shape(m) +
                           ", expected " + std::to_string(spaces_[j - 1]) + "x" +
                           std::to_string(spaces_[j]));
    }
    if (!m.is_zero()) d_.emplace(j, std::move(m));
  }
  for (const auto& [j, m] : d_) {
    auto below = d_.find(j - 1);
    if (below != d_.end() && !(below->second * m).is_zero()) {
      throw ContractError("d_" + std::to_string(j - 1) + " d_" + std::to_string(j) + " != 0");
    }
  }
}

MatrixQ ChainComplex::differential(int degree) const {
  auto it = d_.find(degree);
  if (it != d_.end()) return it->second;
  return MatrixQ::zero(spaces_[degree - 1], spaces_[degree]);
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::map<int, MatrixQ> blocks)
    : source_(std::move(source)), target_(std::move(target)) {
  for (auto& [j, m] : blocks) {
    if (m.rows() != target_.dim(j) || m.cols() != source_.dim(j)) {
      throw DimensionError("chain map block in degree " + std::to_string(j) + " has shape " +
                           shape(m));
    }
    if (!m.is_zero()) blocks_.emplace(j, std::move(m));
  }
  const int lo = std::min(source_.min_degree(), target_.min_degree());
  const int hi = std::max(source_.max_degree(), target_.max_degree());
  for (int j = lo; j <= hi + 1; ++j) {
    if (source_.dim(j) == 0) continue;
    MatrixQ left = block(j - 1) * source_.differential(j);
    MatrixQ right = target_.differential(j) * block(j);
    if (!(left == right)) {
      throw ContractError("chain map does not commute with differentials in degree " +
                          std::to_string(j));
    }
  }
}

MatrixQ ChainMap::block(int degree) const {
  auto it = blocks_.find(degree);
  if (it != blocks_.end()) return it->second;
  return MatrixQ::zero(target_.dim(degree), source_.dim(degree));
}

ChainMap identity_map(const ChainComplex& c) {
  std::map<int, MatrixQ> blocks;
  for (const auto& [j, dim] : c.spaces().dims()) blocks.emplace(j, MatrixQ::identity(dim));
  return ChainMap(c, c, std::move(blocks));
}

ChainComplex mapping_cone(const ChainMap& f) {
  const ChainComplex& s = f.source();
  const ChainComplex& t = f.target();
  GradedVS spaces;
  const int lo = std::min(s.min_degree() + 1, t.min_degree());
  const int hi = std::max(s.max_degree() + 1, t.max_degree());
  for (int j = lo; j <= hi; ++j) spaces.set(j, s.dim(j - 1) + t.dim(j));

  std::map<int, MatrixQ> d;
  for (int j = lo; j <= hi; ++j) {
    MatrixQ m(spaces[j - 1], spaces[j]);
    // Column blocks: s_{j-1} then t_j. Row blocks: s_{j-2} then t_{j-1}.
    const std::size_t s_rows = s.dim(j - 2);
    const std::size_t s_cols = s.dim(j - 1);
    place(m, s.differential(j - 1), 0, 0, -1);
    place(m, f.block(j - 1), s_rows, 0);
    place(m, t.differential(j), s_rows, s_cols);
    d.emplace(j, std::move(m));
  }
  return ChainComplex(std::move(spaces), std::move(d));
}

ChainComplex tensor_complex(const ChainComplex& a, const ChainComplex& b) {
  if (a.spaces().empty() || b.spaces().empty()) return ChainComplex();
  const int alo = a.min_degree(), ahi = a.max_degree();
  const int blo = b.min_degree(), bhi = b.max_degree();

  // offset[{j, q}] is where the block a_{j-q} (x) b_q starts inside degree j.
  std::map<std::pair<int, int>, std::size_t> offset;
  GradedVS spaces;
  for (int j = alo + blo; j <= ahi + bhi; ++j) {
    std::size_t pos = 0;
    for (int q = blo; q <= bhi; ++q) {
      offset[{j, q}] = pos;
      pos += a.dim(j - q) * b.dim(q);
    }
    spaces.set(j, pos);
  }

  std::map<int, MatrixQ> d;
  for (int j = alo + blo; j <= ahi + bhi; ++j) {
    MatrixQ m(spaces[j - 1], spaces[j]);
    for (int q = blo; q <= bhi; ++q) {
      const int p = j - q;
      const std::size_t na = a.dim(p), nb = b.dim(q);
      if (na == 0 || nb == 0) continue;
      const std::size_t col0 = offset[{j, q}];
      // d(x) (x) y lands in block (p-1, q).
      if (a.dim(p - 1) > 0) {
        const MatrixQ da = a.differential(p);
        const std::size_t row0 = offset[{j - 1, q}];
        for (std::size_t r = 0; r < da.rows(); ++r) {
          for (const auto& e : da.row(r)) {
            for (std::size_t y = 0; y < nb; ++y) m.add_to(row0 + r * nb + y, col0 + e.col * nb + y, e.value);
          }
        }
      }
      // (-1)^p x (x) d(y) lands in block (p, q-1).
      if (b.dim(q - 1) > 0) {
        const MatrixQ db = b.differential(q);
        const std::size_t row0 = offset[{j - 1, q - 1}];
        const std::size_t nb_low = b.dim(q - 1);
        const Rational sign = (p % 2 == 0) ? 1 : -1;
        for (std::size_t r = 0; r < db.rows(); ++r) {
          for (const auto& e : db.row(r)) {
            for (std::size_t x = 0; x < na; ++x) {
              m.add_to(row0 + x * nb_low + r, col0 + x * nb + e.col, sign * e.value);
            }
          }
        }
      }
    }
    d.emplace(j, std::move(m));
  }
  return ChainComplex(std::move(spaces), std::move(d));
}

}  // namespace strathom::chains
