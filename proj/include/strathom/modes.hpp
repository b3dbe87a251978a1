#pragma once

// Fourier-mode count of extended L2 harmonic forms on R x S1 x T^d with the
// product scattering metric dr^2 + (1 + r^2) dtheta^2 + flat torus.

#include "strathom/chains.hpp"

#include <array>
#include <string>
#include <vector>

namespace strathom::modes {

using chains::GradedVS;
using qlinalg::Rational;

struct ModeSpec {
  int torus_dim = 0;
  Rational weight = 0;
  int mode_cutoff = 1;  // Fourier modes 0 < |n| < mode_cutoff are examined
};

struct Rejection {
  int mode = 0;
  int degree = 0;
  std::string reason;
};

struct ModeReport {
  std::array<std::size_t, 3> surface_dims{};
  GradedVS total_dims;
  std::vector<Rejection> rejected_modes;
};

/// Whether the integral over R of (1 + r^2)^(alpha + beta * eps) is finite
/// for every small eps > 0.
bool almost_integrable(const Rational& alpha, const Rational& beta);

/// Dimensions in degrees 0, 1, 2 on the surface R x S1. Throws
/// ContractError for a nonzero weight, a negative torus dimension or a cutoff < 1.
std::array<std::size_t, 3> surface_ext_dims(const ModeSpec& spec,
                                            std::vector<Rejection>* rejected = nullptr);

/// Surface dimensions convolved with the Betti numbers of T^d.
GradedVS total_ext_dims(const ModeSpec& spec);

ModeReport mode_report(const ModeSpec& spec);

}  // namespace strathom::modes
