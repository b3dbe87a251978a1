#pragma once

// Shared pieces of the Mayer-Vietoris assembly.

#include "strathom/stratified.hpp"

namespace strathom::stratified::detail {

/// Codimension of the singular stratum of CT(X).
inline int ct_codim(const TwoStrataSpace& space) { return space.n - space.l; }

/// Highest degree carried by B, hM or the local groups.
inline int top_degree(const TwoStrataSpace& space) {
  return std::max(space.hM.max_degree(), space.l + space.s);
}

/// beta_j = (betaT_j, projection onto Sigma-degree <= a) out of B_j.
GradedMap beta_ct(const TwoStrataSpace& space, int a);

/// Unreduced beta''_j = (betaT_j, beta^R_j) for k = l - p.
GradedMap beta_hi(const TwoStrataSpace& space, int k);

/// dim ker beta_j.
std::size_t kernel_dim(const GradedMap& beta, int j);

}  // namespace strathom::stratified::detail
