#include "strathom/chains.hpp"
#include "strathom/errors.hpp"

#include <string>

namespace strathom::chains {

GradedVS homology(const ChainComplex& c) {
  GradedVS out;
  std::map<int, std::size_t> ranks;
  for (const auto& [j, dim] : c.spaces().dims()) ranks[j] = qlinalg::rank(c.differential(j));
  for (const auto& [j, dim] : c.spaces().dims()) {
    auto up = ranks.find(j + 1);
    out.set(j, dim - ranks[j] - (up == ranks.end() ? 0 : up->second));
  }
  return out;
}

std::vector<Vector> homology_representatives(const MatrixQ& incoming, const MatrixQ& outgoing,
                                             std::vector<Vector>* boundaries) {
  if (incoming.rows() != outgoing.cols()) {
    throw DimensionError("homology_representatives: composable shapes required");
  }
  qlinalg::Subspace cycles = qlinalg::kernel_basis(outgoing);
  qlinalg::Subspace bounds = qlinalg::image_basis(incoming);

  // Pivot columns are chosen left to right, so the boundary basis is kept
  // and the surviving cycle columns complete it to a basis of the cycles.
  std::vector<Vector> cols = bounds.basis;
  cols.insert(cols.end(), cycles.basis.begin(), cycles.basis.end());
  qlinalg::Subspace span = qlinalg::image_basis(MatrixQ::from_columns(outgoing.cols(), cols));

  std::vector<Vector> reps(span.basis.begin() + static_cast<std::ptrdiff_t>(bounds.dim()),
                           span.basis.end());
  if (boundaries != nullptr) *boundaries = std::move(bounds.basis);
  return reps;
}

HomologyData homology_with_representatives(const ChainComplex& c) {
  HomologyData h;
  for (const auto& [j, dim] : c.spaces().dims()) {
    std::vector<Vector> all;
    std::vector<Vector> reps =
        homology_representatives(c.differential(j + 1), c.differential(j), &all);
    h.dims.set(j, reps.size());
    all.insert(all.end(), reps.begin(), reps.end());
    h.boundary_and_reps.emplace(j, MatrixQ::from_columns(dim, all));
    h.representatives.emplace(j, std::move(reps));
  }
  return h;
}

Vector HomologyData::project(int degree, const Vector& cycle) const {
  const std::size_t hdim = dims[degree];
  auto it = boundary_and_reps.find(degree);
  if (it == boundary_and_reps.end()) {
    for (const auto& x : cycle) {
      if (x != 0) throw ContractError("projection to homology: nonzero vector in an empty degree");
    }
    return Vector(hdim);
  }
  std::optional<Vector> x = qlinalg::solve(it->second, cycle);
  if (!x) {
    throw ContractError("projection to homology: vector is not a cycle in degree " +
                        std::to_string(degree));
  }
  const std::size_t nb = x->size() - hdim;
  return Vector(x->begin() + static_cast<std::ptrdiff_t>(nb), x->end());
}

GradedVS reduced_homology(const ChainComplex& c) {
  if (c.dim(0) == 0) throw ContractError("reduced homology: augmentation undefined on C_0 = 0");
  MatrixQ d1 = c.differential(1);
  for (std::size_t col = 0; col < d1.cols(); ++col) {
    Rational sum = 0;
    for (const auto& x : d1.column(col)) sum += x;
    if (sum != 0) throw ContractError("reduced homology: augmentation does not vanish on boundaries");
  }
  GradedVS h = homology(c);
  h.set(0, h[0] - 1);
  return h;
}

GradedMap induced_on_homology(const ChainMap& f, const HomologyData& source,
                              const HomologyData& target) {
  GradedMap out(source.dims, target.dims);
  for (const auto& [j, reps] : source.representatives) {
    if (reps.empty() || target.dims[j] == 0) continue;
    MatrixQ fj = f.block(j);
    std::vector<Vector> cols;
    for (const auto& z : reps) cols.push_back(target.project(j, fj.apply(z)));
    out.set_block(j, MatrixQ::from_columns(target.dims[j], cols));
  }
  return out;
}

}  // namespace strathom::chains
