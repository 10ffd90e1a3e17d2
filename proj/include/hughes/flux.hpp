#pragma once

#include <algorithm>
#include <string>
#include <string_view>

#include "hughes/error.hpp"

namespace hughes {

/// sup over [0,1] of |g'(rho)| = |1 - 2 rho|.
inline constexpr double kFluxSpeedBound = 1.0;

template <typename Scalar>
inline void require_unit_interval(Scalar rho, const char* what) {
  if (!(rho >= Scalar(0) && rho <= Scalar(1))) {
    throw Error(ErrorKind::DomainError,
                std::string(what) + " outside [0, 1]: " + std::to_string(double(rho)));
  }
}

/// Fundamental diagram g(rho) = rho (1 - rho), unit maximal speed.
template <typename Scalar>
Scalar fundamental_diagram(Scalar rho) {
  require_unit_interval(rho, "density");
  return rho * (Scalar(1) - rho);
}

namespace detail {

template <typename Scalar>
Scalar g(Scalar rho) {
  return rho * (Scalar(1) - rho);
}

// A(r) = integral of |1 - 2s| over [0, r], split at the sonic point 1/2.
template <typename Scalar>
Scalar abs_speed_primitive(Scalar r) {
  return r <= Scalar(0.5) ? g(r) : Scalar(0.5) - g(r);
}

}  // namespace detail

struct FluxScheme {
  enum class Kind { LaxFriedrichs, Godunov, EngquistOsher };

  Kind kind = Kind::EngquistOsher;
  /// Ratio in the Lax-Friedrichs viscosity term (1/lambda)(v - u). Unused otherwise.
  double lf_lambda = 2.0;

  static FluxScheme lax_friedrichs(double lambda) {
    if (!(lambda > 0.0)) {
      throw Error(ErrorKind::DomainError, "Lax-Friedrichs ratio must be positive");
    }
    return {Kind::LaxFriedrichs, lambda};
  }
  static FluxScheme godunov() { return {Kind::Godunov, 2.0}; }
  static FluxScheme engquist_osher() { return {Kind::EngquistOsher, 2.0}; }

  std::string_view name() const noexcept {
    switch (kind) {
      case Kind::LaxFriedrichs: return "lax-friedrichs";
      case Kind::Godunov: return "godunov";
      case Kind::EngquistOsher: return "engquist-osher";
    }
    return "";
  }
};

/// Parses "lax-friedrichs" | "godunov" | "engquist-osher".
inline FluxScheme parse_flux_scheme(std::string_view name, double lf_lambda = 2.0) {
  if (name == "lax-friedrichs") return FluxScheme::lax_friedrichs(lf_lambda);
  if (name == "godunov") return FluxScheme::godunov();
  if (name == "engquist-osher") return FluxScheme::engquist_osher();
  throw Error(ErrorKind::ScenarioInvalid, "unknown flux scheme '" + std::string(name) + "'");
}

/// Two-point numerical flux h(v, u) consistent with g: h(r, r) = g(r).
///
/// h is nonincreasing in v and nondecreasing in u, so it upwinds on its
/// second argument: h(v, u) is the flux leaving the u-side toward the v-side.
template <typename Scalar>
Scalar numerical_flux(const FluxScheme& scheme, Scalar v, Scalar u) {
  require_unit_interval(v, "flux argument v");
  require_unit_interval(u, "flux argument u");
  using detail::g;
  switch (scheme.kind) {
    case FluxScheme::Kind::LaxFriedrichs:
      return Scalar(0.5) * (g(v) + g(u)) - (v - u) / Scalar(scheme.lf_lambda);
    case FluxScheme::Kind::Godunov:
      // g is concave: its min over an interval sits at an endpoint and its
      // max at the point of the interval closest to 1/2.
      if (u <= v) return std::min(g(u), g(v));
      return g(std::clamp(Scalar(0.5), v, u));
    case FluxScheme::Kind::EngquistOsher:
      return Scalar(0.5) * (g(v) + g(u)) -
             Scalar(0.5) * (detail::abs_speed_primitive(v) - detail::abs_speed_primitive(u));
  }
  return Scalar(0);
}

/// Orientation delta_yx = sgn(u(y) - u(x)), with sgn(0) = 0. +1 means mass
/// moves from y toward x.
inline int orientation(double u_y, double u_x) noexcept {
  return (u_y > u_x) - (u_y < u_x);
}

/// Edge flux h_yx evaluated on the upstream side of the edge.
///
/// delta = +1: y is upstream, returns h(rho_x, rho_y); delta = -1: x is
/// upstream, returns h(rho_y, rho_x); delta = 0: returns 0. With this pairing
/// h_yx delta_yx + h_xy delta_xy = 0, and rho(x) + lambda * h_yx * delta_yx is
/// the contribution of edge {x, y} to the update at x.
template <typename Scalar>
Scalar oriented_flux(const FluxScheme& scheme, Scalar rho_y, Scalar rho_x, int delta_yx) {
  if (delta_yx > 0) return numerical_flux(scheme, rho_x, rho_y);
  if (delta_yx < 0) return numerical_flux(scheme, rho_y, rho_x);
  return Scalar(0);
}

}  // namespace hughes
