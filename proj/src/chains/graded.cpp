#include "strathom/chains.hpp"
#include "strathom/errors.hpp"

#include <algorithm>
#include <string>

namespace strathom::chains {

GradedVS::GradedVS(const std::map<int, std::size_t>& dims) {
  for (const auto& [deg, dim] : dims) set(deg, dim);
}

GradedVS GradedVS::from_vector(const std::vector<std::size_t>& dims, int start) {
  GradedVS v;
  for (std::size_t i = 0; i < dims.size(); ++i) v.set(start + static_cast<int>(i), dims[i]);
  return v;
}

std::size_t GradedVS::operator[](int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

void GradedVS::set(int degree, std::size_t dim) {
  if (dim == 0) {
    dims_.erase(degree);
  } else {
    dims_[degree] = dim;
  }
}

int GradedVS::min_degree() const { return dims_.empty() ? 0 : dims_.begin()->first; }
int GradedVS::max_degree() const { return dims_.empty() ? -1 : dims_.rbegin()->first; }

std::size_t GradedVS::total() const {
  std::size_t t = 0;
  for (const auto& [deg, dim] : dims_) t += dim;
  return t;
}

long GradedVS::euler_characteristic() const {
  long chi = 0;
  for (const auto& [deg, dim] : dims_) chi += (deg % 2 == 0 ? 1 : -1) * static_cast<long>(dim);
  return chi;
}

std::vector<std::size_t> GradedVS::to_vector(int lo, int hi) const {
  std::vector<std::size_t> out;
  for (int j = lo; j <= hi; ++j) out.push_back((*this)[j]);
  return out;
}

GradedVS convolve(const GradedVS& a, const GradedVS& b) {
  std::map<int, std::size_t> out;
  for (const auto& [p, x] : a.dims()) {
    for (const auto& [q, y] : b.dims()) out[p + q] += x * y;
  }
  return GradedVS(out);
}

GradedVS shift(const GradedVS& v, int by) {
  GradedVS out;
  for (const auto& [deg, dim] : v.dims()) out.set(deg + by, dim);
  return out;
}

GradedVS truncate_graded(const GradedVS& v, Truncation mode, int cut) {
  GradedVS out;
  for (const auto& [deg, dim] : v.dims()) {
    if (mode == Truncation::AtMost ? deg <= cut : deg >= cut) out.set(deg, dim);
  }
  return out;
}

GradedMap::GradedMap(GradedVS source, GradedVS target)
    : source_(std::move(source)), target_(std::move(target)) {}

void GradedMap::set_block(int degree, MatrixQ m) {
  if (m.rows() != target_[degree] || m.cols() != source_[degree]) {
    throw DimensionError("graded map block in degree " + std::to_string(degree) + " is " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                         std::to_string(target_[degree]) + "x" + std::to_string(source_[degree]));
  }
  if (m.is_zero()) {
    blocks_.erase(degree);
  } else {
    blocks_[degree] = std::move(m);
  }
}

MatrixQ GradedMap::block(int degree) const {
  auto it = blocks_.find(degree);
  if (it != blocks_.end()) return it->second;
  return MatrixQ::zero(target_[degree], source_[degree]);
}

int GradedMap::min_degree() const {
  if (source_.empty()) return target_.min_degree();
  if (target_.empty()) return source_.min_degree();
  return std::min(source_.min_degree(), target_.min_degree());
}

int GradedMap::max_degree() const {
  return std::max(source_.max_degree(), target_.max_degree());
}

GradedVS les_third_dims(const GradedMap& beta) {
  GradedVS out;
  if (beta.source().empty() && beta.target().empty()) return out;
  const int lo = beta.min_degree();
  const int hi = beta.max_degree() + 1;
  std::map<int, std::size_t> ranks;
  for (int j = lo; j <= hi; ++j) ranks[j] = qlinalg::rank(beta.block(j));
  for (int j = lo; j <= hi; ++j) {
    std::size_t coker = beta.target()[j] - ranks[j];
    std::size_t ker_below = j - 1 >= lo ? beta.source()[j - 1] - ranks[j - 1] : 0;
    out.set(j, coker + ker_below);
  }
  return out;
}

}  // namespace strathom::chains
