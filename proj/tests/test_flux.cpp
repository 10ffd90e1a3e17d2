#include <doctest.h>

#include <cmath>

#include "hughes/flux.hpp"
#include "support.hpp"

using namespace hughes;
using namespace hughes::testing;

namespace {

const FluxScheme kSchemes[] = {FluxScheme::lax_friedrichs(2.0), FluxScheme::godunov(),
                               FluxScheme::engquist_osher()};

// Midpoint quadrature of |1 - 2s| over [a, b], signed by orientation.
double abs_speed_integral(double a, double b, int steps = 200000) {
  const double h = (b - a) / steps;
  double sum = 0.0;
  for (int i = 0; i < steps; ++i) sum += std::abs(1.0 - 2.0 * (a + (i + 0.5) * h));
  return sum * h;
}

// Grid scan of g over the closed interval between u and v.
double scan_g(double lo, double hi, bool take_min) {
  double best = take_min ? 1e9 : -1e9;
  const int steps = 10000;
  for (int i = 0; i <= steps; ++i) {
    const double r = lo + (hi - lo) * i / steps;
    const double value = r * (1.0 - r);
    best = take_min ? std::min(best, value) : std::max(best, value);
  }
  return best;
}

}  // namespace

TEST_CASE("fundamental diagram values") {
  CHECK(fundamental_diagram(0.0) == 0.0);
  CHECK(fundamental_diagram(1.0) == 0.0);
  CHECK(fundamental_diagram(0.5) == 0.25);
  CHECK(fundamental_diagram(0.2) == doctest::Approx(0.16));
  CHECK_THROWS_AS(fundamental_diagram(1.5), Error);
  CHECK_THROWS_AS(fundamental_diagram(-0.1), Error);
}

TEST_CASE("consistency on a 1e-3 grid is exact") {
  for (const FluxScheme& s : kSchemes) {
    for (int i = 0; i <= 1000; ++i) {
      const double r = i / 1000.0;
      CHECK(numerical_flux(s, r, r) == r * (1.0 - r));
    }
  }
}

TEST_CASE("worked flux values") {
  CHECK(numerical_flux(FluxScheme::godunov(), 0.6, 0.2) == doctest::Approx(0.16));
  CHECK(numerical_flux(FluxScheme::engquist_osher(), 0.6, 0.2) == doctest::Approx(0.15));
  CHECK(numerical_flux(FluxScheme::lax_friedrichs(0.2), 0.3, 0.7) == doctest::Approx(2.21));
}

TEST_CASE("Godunov flux matches a grid scan of g") {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const double v = uniform(rng, 0.0, 1.0), u = uniform(rng, 0.0, 1.0);
    const double expected = u <= v ? scan_g(u, v, true) : scan_g(v, u, false);
    CHECK(numerical_flux(FluxScheme::godunov(), v, u) == doctest::Approx(expected).epsilon(1e-7));
  }
}

TEST_CASE("Engquist-Osher flux matches numeric quadrature") {
  Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const double v = uniform(rng, 0.0, 1.0), u = uniform(rng, 0.0, 1.0);
    const double g_v = v * (1 - v), g_u = u * (1 - u);
    const double expected = 0.5 * (g_v + g_u) - 0.5 * abs_speed_integral(u, v);
    CHECK(numerical_flux(FluxScheme::engquist_osher(), v, u) ==
          doctest::Approx(expected).epsilon(1e-8));
  }
}

TEST_CASE("flux is nonincreasing in v and nondecreasing in u") {
  const int n = 200;
  const double step = 1.0 / n;
  for (const FluxScheme& s : {FluxScheme::godunov(), FluxScheme::engquist_osher(),
                              FluxScheme::lax_friedrichs(1.0), FluxScheme::lax_friedrichs(2.0),
                              FluxScheme::lax_friedrichs(0.2)}) {
    int violations = 0;
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double a = i * step, b = j * step, c = (j + 1) * step;
        if (numerical_flux(s, c, a) > numerical_flux(s, b, a) + 1e-15) ++violations;
        if (numerical_flux(s, a, c) < numerical_flux(s, a, b) - 1e-15) ++violations;
      }
    }
    CHECK_MESSAGE(violations == 0, s.name(), " lambda ", s.lf_lambda);
  }
}

TEST_CASE("Lax-Friedrichs with small ratio is not monotone in u") {
  // With 1/lambda below the speed bound the u-derivative turns negative near u = 1.
  const FluxScheme s = FluxScheme::lax_friedrichs(4.0);
  CHECK(numerical_flux(s, 0.5, 1.0) < numerical_flux(s, 0.5, 0.99));
}

TEST_CASE("oriented flux pairing and antisymmetry") {
  const FluxScheme s = FluxScheme::engquist_osher();
  CHECK(oriented_flux(s, 0.3, 0.6, 1) == numerical_flux(s, 0.6, 0.3));
  CHECK(oriented_flux(s, 0.3, 0.6, -1) == numerical_flux(s, 0.3, 0.6));
  CHECK(oriented_flux(s, 0.3, 0.6, 0) == 0.0);
  Rng rng(23);
  for (const FluxScheme& scheme : kSchemes) {
    for (int trial = 0; trial < 500; ++trial) {
      const double ry = uniform(rng, 0, 1), rx = uniform(rng, 0, 1);
      for (int d : {-1, 1}) {
        const double sum = oriented_flux(scheme, ry, rx, d) * d + oriented_flux(scheme, rx, ry, -d) * -d;
        CHECK(sum == 0.0);
      }
    }
  }
}

TEST_CASE("orientation is the sign of the potential difference") {
  CHECK(orientation(2.0, 1.0) == 1);
  CHECK(orientation(1.0, 2.0) == -1);
  CHECK(orientation(1.0, 1.0) == 0);
}

TEST_CASE("scheme names round-trip") {
  for (const FluxScheme& s : kSchemes) CHECK(parse_flux_scheme(s.name()).kind == s.kind);
  CHECK_THROWS_AS(parse_flux_scheme("upwind"), Error);
  CHECK_THROWS_AS(FluxScheme::lax_friedrichs(0.0), Error);
  CHECK_THROWS_AS(numerical_flux(FluxScheme::godunov(), 1.2, 0.1), Error);
}

TEST_CASE("flux templates accept long double") {
  const long double h = numerical_flux(FluxScheme::engquist_osher(), 0.6L, 0.2L);
  CHECK(static_cast<double>(h) == doctest::Approx(0.15));
}
