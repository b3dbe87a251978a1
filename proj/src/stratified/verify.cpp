#include "local.hpp"
#include "strathom/errors.hpp"

namespace strathom::stratified {

namespace {

// Cohomology of the dual sequence ... <- S^j <- T^j <- H^j <- S^{j-1} <- ...
// with restriction maps beta_j transposed.
std::size_t dual_les_dim(const GradedMap& beta, int j) {
  const std::size_t ker = beta.target()[j] - qlinalg::rank(beta.block(j).transpose());
  const std::size_t coker =
      j >= 1 ? beta.source()[j - 1] - qlinalg::rank(beta.block(j - 1).transpose()) : 0;
  return ker + coker;
}

Verdict compare(std::string check, int degree, std::size_t lhs, std::size_t rhs) {
  return {std::move(check), degree, static_cast<long>(lhs), static_cast<long>(rhs), lhs == rhs};
}

}  // namespace

std::vector<Verdict> verify_theorem_hom(const TwoStrataSpace& space, Perversity p, int lo, int hi) {
  const GradedVS hi_x = hi_dims(space, p);
  std::vector<Verdict> out;
  for (int j = lo; j <= hi; ++j) {
    const int k = space.n - 1 - p.value - j;
    out.push_back(compare("HI~_" + std::to_string(j) + " = IG^(" + std::to_string(k) + ")_" +
                              std::to_string(j),
                          j, hi_x[j], ig_dims(space, {k, j})));
  }
  return out;
}

std::vector<Verdict> verify_theorem_coh(const TwoStrataSpace& space, Perversity p, int lo, int hi) {
  if (p.codim != space.l + 1) {
    throw ContractError("HI perversity must sit at codimension l + 1");
  }
  const int c = detail::ct_codim(space);
  const int k = space.l - p.value;
  const GradedMap beta_hi = detail::beta_hi(space, k);
  // Local cohomology of the cone on Sigma survives below the cutoff q.
  auto ih_coh = [&](int q, int j) { return dual_les_dim(detail::beta_ct(space, q - 1), j); };

  std::vector<Verdict> out;
  for (int j = lo; j <= hi; ++j) {
    std::size_t hi_j = dual_les_dim(beta_hi, j);
    if (j == 0) --hi_j;
    const int q = j + 1 - k;
    // Restriction IH_(q-1) -> IH_(q) is dual to gamma at homological c - 1 - q.
    const std::size_t ig = ih_coh(q - 1, j) + ih_coh(q, j) - gamma_rank(space, c - 1 - q, j);
    out.push_back(compare("HI^" + std::to_string(j) + " = IG^" + std::to_string(j) + "_(" +
                              std::to_string(q) + ")",
                          j, hi_j, ig));
  }
  return out;
}

std::vector<Verdict> verify_duality(const TwoStrataSpace& space, Perversity p) {
  if (!space.closed_oriented) throw ContractError("duality needs a closed oriented space");
  const int n = space.n;
  const Perversity dual{space.l - 1 - p.value, p.codim};
  const GradedVS hi_p = hi_dims(space, p);
  const GradedVS hi_dual = hi_dims(space, dual);

  const int c = detail::ct_codim(space);
  const int q = p.value;
  const int q_dual = c - 2 - q;
  const GradedVS ih_q = ih_ct_dims(space, q);
  const GradedVS ih_dual = ih_ct_dims(space, q_dual);

  std::vector<Verdict> out;
  for (int j = 0; j <= n; ++j) {
    out.push_back(compare("HI~^" + std::to_string(p.value) + "_" + std::to_string(j) + " = HI~^" +
                              std::to_string(dual.value) + "_" + std::to_string(n - j),
                          j, hi_p[j], hi_dual[n - j]));
  }
  for (int j = 0; j <= n; ++j) {
    out.push_back(compare("IH^" + std::to_string(q) + "_" + std::to_string(j) + " = IH^" +
                              std::to_string(q_dual) + "_" + std::to_string(n - j),
                          j, ih_q[j], ih_dual[n - j]));
  }
  return out;
}

}  // namespace strathom::stratified
