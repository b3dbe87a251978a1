#include "strathom/modes.hpp"

#include "strathom/errors.hpp"

namespace strathom::modes {

namespace {

struct Candidate {
  int degree;
  std::string form;
  // Squared norm against the volume form, as (1 + r^2)^alpha in r, before
  // the extension weight (1 + r^2)^(-2 eps).
  Rational alpha;
};

std::string power(const Rational& alpha) {
  return "(1+r^2)^(" + qlinalg::to_string(alpha) + "-2eps)";
}

void check(const ModeSpec& spec) {
  if (spec.weight != 0) throw ContractError("only weight 0 is supported");
  if (spec.torus_dim < 0) throw ContractError("torus dimension must be non-negative");
  if (spec.mode_cutoff < 1) throw ContractError("mode cutoff must be at least 1");
}

}  // namespace

bool almost_integrable(const Rational& alpha, const Rational& beta) {
  const Rational twice = 2 * alpha;
  return twice < -1 || (twice == -1 && beta < 0);
}

std::array<std::size_t, 3> surface_ext_dims(const ModeSpec& spec, std::vector<Rejection>* rejected) {
  check(spec);
  std::array<std::size_t, 3> dims{};

  // Zero modes: closed and coclosed forms with constant coefficients.
  const std::vector<Candidate> zero_modes = {
      {0, "1", Rational(1)},
      {1, "dtheta", Rational(-1, 2)},
      {1, "dt", Rational(-1, 2)},
      {2, "dvol", Rational(1)},
  };
  for (const auto& c : zero_modes) {
    if (almost_integrable(c.alpha, -2)) {
      ++dims[static_cast<std::size_t>(c.degree)];
    } else if (rejected) {
      rejected->push_back({0, c.degree, c.form + ": integral of " + power(c.alpha) + " dr diverges"});
    }
  }

  // Nonzero modes e^{in theta}: coefficients solve f'' = n^2 f in t = arcsinh r.
  for (int n = 1; n < spec.mode_cutoff; ++n) {
    for (int sign : {1, -1}) {
      if (rejected) {
        rejected->push_back({sign * n, 1,
                             "exp(+-" + std::to_string(n) + "t) is unbounded at one end"});
      }
    }
  }
  return dims;
}

GradedVS total_ext_dims(const ModeSpec& spec) {
  const auto s = surface_ext_dims(spec);
  GradedVS torus;
  std::size_t binom = 1;
  for (int i = 0; i <= spec.torus_dim; ++i) {
    torus.set(i, binom);
    binom = binom * static_cast<std::size_t>(spec.torus_dim - i) / static_cast<std::size_t>(i + 1);
  }
  return chains::convolve(GradedVS::from_vector({s[0], s[1], s[2]}), torus);
}

ModeReport mode_report(const ModeSpec& spec) {
  ModeReport r;
  r.surface_dims = surface_ext_dims(spec, &r.rejected_modes);
  r.total_dims = total_ext_dims(spec);
  return r;
}

}  // namespace strathom::modes
