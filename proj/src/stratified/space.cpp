#include "strathom/errors.hpp"
#include "strathom/stratified.hpp"

namespace strathom::stratified {

namespace {

void check_range(const GradedVS& v, int top, const std::string& name) {
  if (v.empty()) return;
  if (v.min_degree() < 0 || v.max_degree() > top) {
    throw ContractError(name + " must live in degrees 0.." + std::to_string(top));
  }
}

}  // namespace

void validate(const TwoStrataSpace& space) {
  if (space.l < 0 || space.s < 0) throw ContractError("l and s must be non-negative");
  if (space.n != space.l + space.s + 1) throw ContractError("n must equal l + s + 1");
  if (space.hL[0] < 1) throw ContractError("link_betti[0] must be at least 1");
  if (space.hSigma[0] < 1) throw ContractError("sigma_betti[0] must be at least 1");
  if (space.hM[0] < 1) throw ContractError("m_betti[0] must be at least 1");
  check_range(space.hL, space.l, "link_betti");
  check_range(space.hSigma, space.s, "sigma_betti");
  check_range(space.hM, space.n, "m_betti");
  if (space.betaT.source() != chains::convolve(space.hL, space.hSigma)) {
    throw ContractError("beta_T source must be the Kuenneth product of link and sigma homology");
  }
  if (space.betaT.target() != space.hM) throw ContractError("beta_T target must be m_betti");
  // A point of the boundary lands in exactly one component of M-bar.
  const MatrixQ b0 = space.betaT.block(0);
  for (std::size_t c = 0; c < b0.cols(); ++c) {
    Rational sum = 0;
    for (const auto& x : b0.column(c)) sum += x;
    if (sum != 1) throw ContractError("beta_T degree 0 must preserve the augmentation (column " +
                                      std::to_string(c) + ")");
  }
}

TwoStrataSpace algebraic_space(int l, int s, GradedVS hL, GradedVS hSigma, GradedVS hM,
                               const std::map<int, MatrixQ>& betaT, bool closed_oriented,
                               std::string label) {
  TwoStrataSpace out;
  out.l = l;
  out.s = s;
  out.n = l + s + 1;
  out.betaT = GradedMap(chains::convolve(hL, hSigma), hM);
  for (const auto& [j, m] : betaT) {
    try {
      out.betaT.set_block(j, m);
    } catch (const DimensionError& e) {
      throw ContractError("beta_T degree " + std::to_string(j) + ": " + e.what());
    }
  }
  out.hL = std::move(hL);
  out.hSigma = std::move(hSigma);
  out.hM = std::move(hM);
  out.closed_oriented = closed_oriented;
  out.label = std::move(label);
  validate(out);
  return out;
}

TwoStrataSpace suspension_product(GradedVS hL, int l, GradedVS hSigma0, int s, std::string label) {
  GradedVS hSigma;
  for (const auto& [t, d] : hSigma0.dims()) hSigma.set(t, 2 * d);
  const GradedVS hM = chains::convolve(hL, hSigma0);
  const GradedVS b = chains::convolve(hL, hSigma);
  std::map<int, MatrixQ> fold;
  for (int j = 0; j <= b.max_degree(); ++j) {
    MatrixQ m(hM[j], b[j]);
    const auto src = kunneth_blocks(hL, hSigma, j);
    const auto tgt = kunneth_blocks(hL, hSigma0, j);
    for (std::size_t i = 0; i < src.size(); ++i) {
      const std::size_t half = tgt[i].sigma_dim;
      for (std::size_t a = 0; a < src[i].link_dim; ++a) {
        for (std::size_t c = 0; c < src[i].sigma_dim; ++c) {
          m.set(tgt[i].offset + a * half + c % half, src[i].offset + a * src[i].sigma_dim + c, 1);
        }
      }
    }
    fold.emplace(j, std::move(m));
  }
  return algebraic_space(l, s, std::move(hL), std::move(hSigma), hM, fold, true, std::move(label));
}

TwoStrataSpace isolated_cone(GradedVS hL, int l, GradedVS hM, const std::map<int, MatrixQ>& betaT,
                             bool closed_oriented, std::string label) {
  return algebraic_space(l, 0, std::move(hL), GradedVS::from_vector({1}), std::move(hM), betaT,
                         closed_oriented, std::move(label));
}

std::vector<KunnethBlock> kunneth_blocks(const GradedVS& hL, const GradedVS& hSigma, int j) {
  std::vector<KunnethBlock> out;
  std::size_t offset = 0;
  for (int t = 0; t <= j; ++t) {
    KunnethBlock b{t, offset, hL[j - t], hSigma[t]};
    offset += b.size();
    out.push_back(b);
  }
  return out;
}

GradedVS kunneth_basis_dims(const TwoStrataSpace& space) {
  return chains::convolve(space.hL, space.hSigma);
}

MatrixQ sigma_projection(const GradedVS& hL, const GradedVS& hSigma, int j, int a) {
  std::vector<std::size_t> rows;
  std::size_t total = 0;
  for (const auto& b : kunneth_blocks(hL, hSigma, j)) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b.t <= a) rows.push_back(b.offset + i);
    }
    total += b.size();
  }
  return MatrixQ::identity(total).select_rows(rows);
}

GradedVS cone_formula(const GradedVS& linkH, int link_dim, int p) {
  return chains::truncate_graded(linkH, chains::Truncation::AtMost, link_dim - p - 1);
}

TwoStrataSpace conifold_transition(const TwoStrataSpace& space) {
  std::map<int, MatrixQ> swapped;
  for (int j = space.betaT.min_degree(); j <= space.betaT.max_degree(); ++j) {
    const auto old_blocks = kunneth_blocks(space.hL, space.hSigma, j);
    const auto new_blocks = kunneth_blocks(space.hSigma, space.hL, j);
    std::size_t size = 0;
    for (const auto& b : old_blocks) size += b.size();
    // perm(old, new) = 1 when both indices name the same tensor.
    MatrixQ perm(size, size);
    for (const auto& nb : new_blocks) {
      const KunnethBlock& ob = old_blocks[static_cast<std::size_t>(j - nb.t)];
      for (std::size_t x = 0; x < nb.link_dim; ++x) {
        for (std::size_t y = 0; y < nb.sigma_dim; ++y) {
          perm.set(ob.offset + y * ob.sigma_dim + x, nb.offset + x * nb.sigma_dim + y, 1);
        }
      }
    }
    MatrixQ m = space.betaT.block(j) * perm;
    if (!m.is_zero()) swapped.emplace(j, std::move(m));
  }
  return algebraic_space(space.s, space.l, space.hSigma, space.hL, space.hM, swapped,
                         space.closed_oriented, space.label);
}

TwoStrataSpace compactify_to_isolated(const TwoStrataSpace& space) {
  return isolated_cone(kunneth_basis_dims(space), space.n - 1, space.hM, space.betaT.blocks(),
                       space.closed_oriented, space.label);
}

std::pair<Rational, Rational> hodge_weights(Perversity p, int l, int n, int j) {
  const Rational c_fs = Rational(l - 1) / 2 - p.value;
  const Rational c_fc = Rational(n) / 2 - j + c_fs;
  return {c_fs, c_fc};
}

MapKind classify_map(std::size_t source, std::size_t target, std::size_t rank) {
  if (rank == source && rank == target) return MapKind::Iso;
  if (rank == 0) return MapKind::Zero;
  if (rank == source) return MapKind::Injective;
  if (rank == target) return MapKind::Surjective;
  return MapKind::General;
}

std::string symbol(MapKind kind) {
  switch (kind) {
    case MapKind::Iso: return "≅";
    case MapKind::Zero: return "0";
    case MapKind::Injective: return "↪";
    case MapKind::Surjective: return "↠";
    case MapKind::General: return "→";
  }
  return "?";
}

int lower_middle(int c) {
  const int x = c - 2;
  return x >= 0 ? x / 2 : -((-x + 1) / 2);
}

int upper_middle(int c) { return c - 2 - lower_middle(c); }

bool all_pass(const std::vector<Verdict>& verdicts) {
  for (const auto& v : verdicts) {
    if (!v.pass) return false;
  }
  return true;
}

}  // namespace strathom::stratified
