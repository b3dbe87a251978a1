#include "local.hpp"
#include "strathom/errors.hpp"

namespace strathom::stratified {

namespace detail {

GradedMap beta_hi(const TwoStrataSpace& space, int k) {
  const std::size_t b0 = space.betaT.source()[0];
  GradedVS target;
  GradedMap out;
  std::map<int, MatrixQ> blocks;

  // Degree 0: the cone point, plus a copy of B_0 when L_{<k} is empty.
  MatrixQ r0;
  if (k <= 0) {
    r0 = MatrixQ::vstack(MatrixQ(1, b0), MatrixQ::identity(b0));
  } else {
    r0 = MatrixQ(1, b0);
    for (std::size_t c = 0; c < b0; ++c) r0.set(0, c, 1);
  }
  blocks.emplace(0, MatrixQ::vstack(space.betaT.block(0), r0));
  target.set(0, space.hM[0] + r0.rows());

  // Positive degrees: Kuenneth summands with L-degree >= k.
  for (int j = 1; j <= top_degree(space); ++j) {
    MatrixQ proj = sigma_projection(space.hL, space.hSigma, j, j - k);
    target.set(j, space.hM[j] + proj.rows());
    blocks.emplace(j, MatrixQ::vstack(space.betaT.block(j), proj));
  }
  out = GradedMap(space.betaT.source(), target);
  for (auto& [j, m] : blocks) out.set_block(j, std::move(m));
  return out;
}

}  // namespace detail

namespace {

void check_perversity(const TwoStrataSpace& space, Perversity p) {
  if (p.codim != space.l + 1) {
    throw ContractError("HI perversity must sit at codimension l + 1 = " +
                        std::to_string(space.l + 1));
  }
}

// Reduced degree 0 through the augmentation kernels: cok of
// B~_0 -> T~_0 (+) R~_0, where R~_0 is B_0 for k <= 0 and 0 otherwise.
std::size_t reduced_degree_zero(const TwoStrataSpace& space, const MatrixQ& beta0, int k) {
  const std::size_t b0 = space.betaT.source()[0];
  MatrixQ eps(1, b0);
  for (std::size_t c = 0; c < b0; ++c) eps.set(0, c, 1);
  const qlinalg::Subspace kb = qlinalg::kernel_basis(eps);
  const MatrixQ kernel = MatrixQ::from_columns(b0, kb.basis);
  const std::size_t r_reduced = k <= 0 ? b0 : 0;
  return (space.hM[0] - 1) + r_reduced - qlinalg::rank(beta0 * kernel);
}

long euler_prediction(const TwoStrataSpace& space, int k) {
  long moore = 0;
  for (int r = 0; r < k; ++r) moore += (r % 2 == 0 ? 1 : -1) * static_cast<long>(space.hL[r]);
  return space.hM.euler_characteristic() - space.hSigma.euler_characteristic() * moore;
}

}  // namespace

GradedVS hi_dims(const TwoStrataSpace& space, Perversity p) {
  check_perversity(space, p);
  const int k = space.l - p.value;
  const GradedMap beta = detail::beta_hi(space, k);
  const GradedVS unreduced = chains::les_third_dims(beta);

  GradedVS out;
  out.set(0, reduced_degree_zero(space, beta.block(0), k));
  for (const auto& [j, d] : unreduced.dims()) {
    if (j >= 1) out.set(j, d);
  }
  if (out[0] + 1 != unreduced[0]) {
    throw InternalError("reduced and unreduced HI disagree in degree 0");
  }
  if (out.euler_characteristic() != euler_prediction(space, k)) {
    throw InternalError("HI Euler characteristic disagrees with the Moore truncation count");
  }
  return out;
}

GradedVS hi_extreme(const TwoStrataSpace& space, Perversity p) {
  check_perversity(space, p);
  GradedVS expected;
  if (p.value < 0) {
    expected = *ih_extreme(space, detail::ct_codim(space) - 1);
  } else if (p.value >= space.l) {
    expected = space.hM;
  } else {
    throw ContractError("hi_extreme needs p < 0 or p >= l");
  }
  if (hi_dims(space, p) != expected) {
    throw InternalError("HI at an extreme perversity differs from the blowup homology");
  }
  return expected;
}

}  // namespace strathom::stratified
