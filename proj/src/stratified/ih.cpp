#include "local.hpp"
#include "strathom/errors.hpp"

namespace strathom::stratified {

namespace detail {

GradedMap beta_ct(const TwoStrataSpace& space, int a) {
  GradedVS local;
  std::map<int, MatrixQ> blocks;
  for (int j = 0; j <= top_degree(space); ++j) {
    MatrixQ proj = sigma_projection(space.hL, space.hSigma, j, a);
    local.set(j, proj.rows());
    blocks.emplace(j, MatrixQ::vstack(space.betaT.block(j), proj));
  }
  GradedVS target;
  for (int j = 0; j <= top_degree(space); ++j) target.set(j, space.hM[j] + local[j]);
  GradedMap out(space.betaT.source(), target);
  for (auto& [j, m] : blocks) out.set_block(j, std::move(m));
  return out;
}

std::size_t kernel_dim(const GradedMap& beta, int j) {
  return beta.source()[j] - qlinalg::rank(beta.block(j));
}

}  // namespace detail

namespace {

GradedVS ih_general(const TwoStrataSpace& space, int q) {
  return chains::les_third_dims(detail::beta_ct(space, detail::ct_codim(space) - 2 - q));
}

GradedVS relative_homology(const TwoStrataSpace& space) {
  if (!space.closed_oriented) return chains::les_third_dims(space.betaT);
  // Lefschetz duality: H_j(M-bar, boundary) = H^{n-j}(M-bar).
  GradedVS out;
  for (const auto& [j, d] : space.hM.dims()) out.set(space.n - j, d);
  return out;
}

}  // namespace

std::optional<GradedVS> ih_extreme(const TwoStrataSpace& space, int q) {
  if (q < 0) return space.hM;
  if (q >= detail::ct_codim(space) - 1) return relative_homology(space);
  return std::nullopt;
}

GradedVS ih_ct_dims(const TwoStrataSpace& space, int q) {
  GradedVS out = ih_general(space, q);
  if (auto shortcut = ih_extreme(space, q); shortcut && *shortcut != out) {
    throw InternalError("IH of the conifold transition at q = " + std::to_string(q) +
                        " disagrees with the extreme-perversity value; beta_T is not a boundary "
                        "restriction of M-bar");
  }
  return out;
}

std::size_t gamma_rank(const TwoStrataSpace& space, int q, int j) {
  const int a = detail::ct_codim(space) - 2 - q;
  const MatrixQ beta = detail::beta_ct(space, a).block(j);
  const MatrixQ beta_next = detail::beta_ct(space, a - 1).block(j);
  const std::size_t t_dim = space.hM[j];
  const std::size_t i_dim = beta.rows() - t_dim;
  const std::size_t j_dim = beta_next.rows() - t_dim;

  // id (+) gamma^loc: the J blocks are the leading rows of the I blocks.
  MatrixQ local(t_dim + j_dim, t_dim + i_dim);
  for (std::size_t r = 0; r < t_dim + j_dim; ++r) local.set(r, r, 1);

  const std::size_t rank_next = qlinalg::rank(beta_next);
  const std::size_t induced =
      qlinalg::sum_dim(qlinalg::image_basis(local), qlinalg::image_basis(beta_next)) - rank_next;
  const std::size_t coker = beta.rows() - qlinalg::rank(beta);
  if (induced > coker) throw InternalError("gamma_theta has negative kernel");
  const std::size_t ker_gamma = coker - induced;
  return ih_ct_dims(space, q)[j] - ker_gamma;
}

std::size_t ig_dims(const TwoStrataSpace& space, IGRequest req) {
  const int q = req.k - 1;
  const int j = req.j;
  const std::size_t ih_q = ih_ct_dims(space, q)[j];
  const std::size_t ih_next = ih_ct_dims(space, q + 1)[j];
  const std::size_t via_gamma = ih_q + ih_next - gamma_rank(space, q, j);

  const int a = detail::ct_codim(space) - 2 - q;
  std::size_t via_kernels = ih_q;
  if (j >= 1) {
    via_kernels += detail::kernel_dim(detail::beta_ct(space, a - 1), j - 1);
    via_kernels -= detail::kernel_dim(detail::beta_ct(space, a), j - 1);
  }
  if (via_gamma != via_kernels) {
    throw InternalError("IG^(" + std::to_string(req.k) + ")_" + std::to_string(j) +
                        ": rank formula gives " + std::to_string(via_gamma) +
                        ", kernel formula gives " + std::to_string(via_kernels));
  }
  return via_gamma;
}

GradedVS ih_x_dims(const TwoStrataSpace& space, int p) {
  return ih_ct_dims(conifold_transition(space), p);
}

IHTable ih_table(const TwoStrataSpace& space, int q_lo, int q_hi) {
  if (q_hi < q_lo) throw ContractError("empty perversity range");
  IHTable t;
  t.q_lo = q_lo;
  t.q_hi = q_hi;
  t.j_hi = space.n;
  std::vector<GradedVS> columns;
  for (int q = q_lo; q <= q_hi; ++q) columns.push_back(ih_ct_dims(space, q));
  for (int j = 0; j <= t.j_hi; ++j) {
    std::vector<std::size_t> dims;
    std::vector<std::size_t> ranks;
    std::vector<MapKind> kinds;
    for (int q = q_lo; q <= q_hi; ++q) {
      const std::size_t here = columns[static_cast<std::size_t>(q - q_lo)][j];
      dims.push_back(here);
      if (q == q_hi) continue;
      const std::size_t next = columns[static_cast<std::size_t>(q - q_lo + 1)][j];
      const std::size_t r = gamma_rank(space, q, j);
      ranks.push_back(r);
      kinds.push_back(classify_map(here, next, r));
    }
    t.dims.push_back(std::move(dims));
    t.ranks.push_back(std::move(ranks));
    t.annotations.push_back(std::move(kinds));
  }
  return t;
}

}  // namespace strathom::stratified
