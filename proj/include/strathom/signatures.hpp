#pragma once

// Witt condition, Novikov signature of the blowup and the chain of
// signature equalities for two-strata spaces with product link bundle.

#include "strathom/simplicial.hpp"
#include "strathom/stratified.hpp"

#include <string>

namespace strathom::signatures {

using simplicial::PairingData;
using stratified::TwoStrataSpace;

enum class WittReason { LinkDimOdd, MiddleLinkHomologyZero, Fails };

struct WittVerdict {
  bool is_witt = false;
  WittReason reason = WittReason::Fails;
};

std::string to_string(WittReason reason);

/// Requires n even; throws ContractError otherwise.
WittVerdict witt_check(const TwoStrataSpace& space);

/// pos - neg of the middle pairing; the radical drops out. Throws
/// ContractError for non-square or non-symmetric input or odd degree.
long novikov_signature(const PairingData& pairing);

struct PerverseSignature {
  long signature = 0;
  /// dim of the image IH^m_{n/2}(CT X) -> IH^n_{n/2}(CT X), m and n the middle perversities.
  std::size_t image_dim = 0;
};

/// For product link bundles the perverse signature of CT(X) is the Novikov
/// signature of the pairing; the image dimension comes from gamma_rank.
PerverseSignature perverse_signature_ct(const TwoStrataSpace& space, const PairingData& pairing);

struct SignatureReport {
  long sigma_Mbar = 0;
  long sigma_perverse_CT = 0;
  long sigma_IH_X = 0;
  long sigma_HI_X = 0;
  long sigma_Z = 0;
  bool all_equal = true;
  /// n = 2 mod 4: every signature vanishes for degree reasons.
  bool trivially_zero = false;

  // Middle-degree dimensions computed independently of the pairing.
  std::size_t hi_middle = 0;       // HI^m_{n/2}(X)
  std::size_t ih_x_middle = 0;     // IH^m_{n/2}(X)
  std::size_t ih_z_middle = 0;     // IH^m_{n/2}(Z)
  std::size_t gamma_image = 0;     // image of IH^m -> IH^n on CT(X)
  std::size_t pairing_rank = 0;
  /// pairing_rank == gamma_image: the radical of the Novikov form matches
  /// the kernel of the middle-perversity map.
  bool rank_consistent = true;
};

/// Throws ContractError if the space is not Witt or the pairing has the wrong degree.
SignatureReport verify_theorem_sig(const TwoStrataSpace& space, const PairingData& pairing);

}  // namespace strathom::signatures
