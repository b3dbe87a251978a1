#pragma once

// Homology-level model of a two-strata pseudomanifold X with product link
// bundle L x Sigma, and the dimension calculus for IH of the conifold
// transition, HI of X, the mixed groups IG and their comparison theorems.

#include "strathom/chains.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace strathom::stratified {

using chains::GradedMap;
using chains::GradedVS;
using qlinalg::MatrixQ;
using qlinalg::Rational;

/// Value of a perversity at the single codimension that matters.
struct Perversity {
  int value = 0;
  int codim = 0;
};

/// Link L (dim l), singular stratum Sigma (dim s), blowup M-bar and the map
/// betaT: H(L x Sigma) -> H(M-bar) induced by the boundary inclusion.
/// H(L x Sigma) carries the Kuenneth basis: blocks by Sigma-degree t
/// ascending, inside a block lexicographic in (L-index, Sigma-index).
struct TwoStrataSpace {
  int n = 0;
  int l = 0;
  int s = 0;
  GradedVS hL;
  GradedVS hSigma;
  GradedVS hM;
  GradedMap betaT;
  /// X closed and oriented, so M-bar satisfies Lefschetz duality.
  bool closed_oriented = false;
  std::string label;

  friend bool operator==(const TwoStrataSpace&, const TwoStrataSpace&) = default;
};

/// Throws ContractError naming the first violated condition.
void validate(const TwoStrataSpace& space);

/// Assembles and validates a space from raw data; betaT blocks by degree.
TwoStrataSpace algebraic_space(int l, int s, GradedVS hL, GradedVS hSigma, GradedVS hM,
                               const std::map<int, MatrixQ>& betaT, bool closed_oriented = false,
                               std::string label = {});

/// X = S(L) x Sigma0: Sigma is two copies of Sigma0, M-bar ~ L x Sigma0 and
/// betaT folds the two boundary copies together.
TwoStrataSpace suspension_product(GradedVS hL, int l, GradedVS hSigma0, int s,
                                  std::string label = {});

/// Isolated singularity: Sigma is a point and betaT is supplied.
TwoStrataSpace isolated_cone(GradedVS hL, int l, GradedVS hM, const std::map<int, MatrixQ>& betaT,
                             bool closed_oriented = true, std::string label = {});

/// One Sigma-degree block of the Kuenneth basis in degree j.
struct KunnethBlock {
  int t = 0;               // Sigma-degree
  std::size_t offset = 0;  // first basis index
  std::size_t link_dim = 0;
  std::size_t sigma_dim = 0;
  std::size_t size() const { return link_dim * sigma_dim; }
};

std::vector<KunnethBlock> kunneth_blocks(const GradedVS& hL, const GradedVS& hSigma, int j);
GradedVS kunneth_basis_dims(const TwoStrataSpace& space);

/// Rows of B_j lying in Sigma-degree blocks t <= a, as a coordinate projection.
MatrixQ sigma_projection(const GradedVS& hL, const GradedVS& hSigma, int j, int a);

/// IH of the open cone on a link: degrees i < link_dim - p survive, degree 0 included.
GradedVS cone_formula(const GradedVS& linkH, int link_dim, int p);

/// IH of CT(X) at q(c) with c = n - l; cross-checked against the extreme
/// shortcuts. Throws InternalError when they disagree.
GradedVS ih_ct_dims(const TwoStrataSpace& space, int q);
/// H(M-bar) for q < 0, H(M-bar, boundary) for q >= c - 1, nothing otherwise.
std::optional<GradedVS> ih_extreme(const TwoStrataSpace& space, int q);

/// Rank of IH^q_j(CT X) -> IH^{q+1}_j(CT X).
std::size_t gamma_rank(const TwoStrataSpace& space, int q, int j);

struct IGRequest {
  int k = 0;
  int j = 0;
};

/// dim IG^{(k)}_j(CT X), with q = k - 1 and q' = k. Computed from gamma_rank
/// and from ker beta'/ker beta; throws InternalError if they differ.
std::size_t ig_dims(const TwoStrataSpace& space, IGRequest req);

/// Reduced HI of X. p.codim must be l + 1.
GradedVS hi_dims(const TwoStrataSpace& space, Perversity p);
/// Requires p < 0 (gives H(M-bar, boundary)) or p >= l (gives H(M-bar));
/// checked against hi_dims.
GradedVS hi_extreme(const TwoStrataSpace& space, Perversity p);

/// Swaps the roles of L and Sigma; an involution.
TwoStrataSpace conifold_transition(const TwoStrataSpace& space);
/// One-point compactification Z of X - Sigma: link L x Sigma, Sigma a point.
TwoStrataSpace compactify_to_isolated(const TwoStrataSpace& space);
/// IH of X itself at p(l+1), via CT(CT X) = X.
GradedVS ih_x_dims(const TwoStrataSpace& space, int p);

struct Verdict {
  std::string check;
  int degree = 0;
  long lhs = 0;
  long rhs = 0;
  bool pass = false;
};

bool all_pass(const std::vector<Verdict>& verdicts);

/// dim reduced HI^p_j(X) against dim IG^{(n-1-p-j)}_j(CT X).
std::vector<Verdict> verify_theorem_hom(const TwoStrataSpace& space, Perversity p, int lo, int hi);
/// Cohomological indexing: dim HI^j(X) against dim IG^j_{(j+1-k)}(CT X),
/// k = l - p, both assembled from transposed maps.
std::vector<Verdict> verify_theorem_coh(const TwoStrataSpace& space, Perversity p, int lo, int hi);
/// HI with p + p* = l - 1 and IH of CT X with q + q* = c - 2, q = p.value.
/// Throws ContractError unless the space is closed and oriented.
std::vector<Verdict> verify_duality(const TwoStrataSpace& space, Perversity p);

/// Weights (c_fs, c_fc) of the scattering and cusp metrics matching HI^p in degree j.
std::pair<Rational, Rational> hodge_weights(Perversity p, int l, int n, int j);

enum class MapKind { Iso, Zero, Injective, Surjective, General };
MapKind classify_map(std::size_t source, std::size_t target, std::size_t rank);
std::string symbol(MapKind kind);

/// IH^q_j(CT X) for q in [q_lo, q_hi] and j in [0, n], with the maps between
/// adjacent columns.
struct IHTable {
  int q_lo = 0;
  int q_hi = 0;
  int j_hi = 0;
  std::vector<std::vector<std::size_t>> dims;       // [j][q - q_lo]
  std::vector<std::vector<std::size_t>> ranks;      // [j][q - q_lo], map q -> q + 1
  std::vector<std::vector<MapKind>> annotations;    // same shape as ranks
};

IHTable ih_table(const TwoStrataSpace& space, int q_lo, int q_hi);

/// Middle perversities at codimension c: floor((c-2)/2) and ceil((c-2)/2).
int lower_middle(int c);
int upper_middle(int c);

}  // namespace strathom::stratified
