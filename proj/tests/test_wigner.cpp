#include "janus/errors.hpp"
#include "janus/fock.hpp"
#include "janus/moments.hpp"
#include "janus/wigner.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace janus;

TEST_CASE("covariance") {
  const Covariance2 v0 = covariance({0.0, 1.0});
  CHECK(v0.v11 == doctest::Approx(0.5));
  CHECK(v0.v12 == doctest::Approx(0.0));
  CHECK(v0.v22 == doctest::Approx(0.5));
  // Anti-squeezed along q at θ = 0, along p at θ = π.
  const Covariance2 v1 = covariance({1.0, 0.0});
  CHECK(v1.v11 == doctest::Approx(std::exp(2.0) / 2).epsilon(1e-14));
  CHECK(v1.v22 == doctest::Approx(std::exp(-2.0) / 2).epsilon(1e-14));
  CHECK(v1.v12 == 0.0);
  const Covariance2 v2 = covariance({1.0, kPi});
  CHECK(v2.v11 == doctest::Approx(std::exp(-2.0) / 2).epsilon(1e-12));
  CHECK(v2.v22 == doctest::Approx(std::exp(2.0) / 2).epsilon(1e-12));
  CHECK(std::abs(v2.v12) < 1e-15);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) {
    const Covariance2 v = covariance({uniform(rng, 0, 2), uniform(rng, 0, kTwoPi)});
    CHECK(v.det() == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(v.v11 > 0.0);
  }
}

TEST_CASE("single-state wigner") {
  const SqueezeParam x(0.7, 1.3);
  const Displacement a({0.4, -0.9});
  const double q0 = std::sqrt(2.0) * 0.4, p0 = std::sqrt(2.0) * -0.9;
  CHECK(wigner_single(x, a, q0, p0) == doctest::Approx(1.0 / kPi).epsilon(1e-14));
  CHECK(wigner_single({0.0, 0.0}, a, q0 + 0.3, p0 - 0.5) ==
        doctest::Approx(std::exp(-(0.09 + 0.25)) / kPi).epsilon(1e-14));
  const auto v = fock::displace_fock(fock::squeezed_vacuum_fock(x, 150), a);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) {
    const double q = uniform(rng, -4, 4), p = uniform(rng, -4, 4);
    CHECK(std::abs(wigner_single(x, a, q, p) - fock::wigner_fock(v, q, p)) < 1e-8);
    CHECK(wigner_single({uniform(rng, 0, 2), uniform(rng, 0, 7)}, a, q, p) >= 0.0);
  }
}

TEST_CASE("cross wigner") {
  const SqueezeParam x(0.7, 1.0), z(0.4, 2.5);
  const Displacement a({0.3, 0.5});
  CHECK(std::abs(cross_wigner(x, x, a, 0.2, -0.4) - wigner_single(x, a, 0.2, -0.4)) < 1e-15);
  CHECK(std::abs(cross_wigner_integral(x, z, a, {-9, 9, -9, 9}, 0.05) - m0(x, z)) < 1e-6);

  const int n = 150;
  const auto kx = fock::displace_fock(fock::squeezed_vacuum_fock(x, n), a);
  const auto kz = fock::displace_fock(fock::squeezed_vacuum_fock(z, n), a);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 30; ++i) {
    const double q = uniform(rng, -4, 4), p = uniform(rng, -4, 4);
    CHECK(std::abs(cross_wigner(x, z, a, q, p) - fock::cross_wigner_fock(kz, kx, q, p)) < 1e-7);
    // Hermiticity: W_{|ζ⟩⟨ξ|} = conj(W_{|ξ⟩⟨ζ|}).
    CHECK(std::abs(cross_wigner(z, x, a, q, p) - std::conj(cross_wigner(x, z, a, q, p))) < 1e-12);
  }
}

TEST_CASE("A and B coefficients") {
  const ABCoefficients vac = ab_coefficients({0.5, 0.0, 0.5});
  CHECK(std::abs(vac.A - 2.0) < 1e-15);
  CHECK(std::abs(vac.B) < 1e-15);
  const CrossGauss same = cross_gauss({0.6, 0.0}, {0.6, 0.0}, {});
  CHECK(std::abs(same.ab.B.imag()) < 1e-15);
  CHECK(std::abs(ab_coefficients(same.sigma).B - same.ab.B) < 1e-12);
  CHECK_THROWS_AS(ab_coefficients({1.0, 1.0, 1.0}), SingularSigma);

  std::mt19937_64 rng(21);
  for (int t = 0; t < 5; ++t) {
    const JanusSpec s = random_spec(rng);
    const CrossGauss g = cross_gauss(s.xi, s.zeta, s.alpha);
    CHECK(g.ab.A.real() > 0.0);
    CHECK(std::abs(g.k11 * g.k22 - g.k12 * g.k12 - 4.0) < 1e-10);
    for (int i = 0; i < 50; ++i) {
      const double q = uniform(rng, -3, 3), p = uniform(rng, -3, 3);
      // d²β = ½ dq dp.
      CHECK(std::abs(g.evaluate(q, p) - 0.5 * g.evaluate_complex(q, p)) < 1e-10);
    }
  }
}

TEST_CASE("janus wigner") {
  JanusSpec single;
  single.xi = {0.5, 0.2};
  single.alpha = Displacement(0.7);
  CHECK(wigner_janus(single, 0.1, 0.3) == doctest::Approx(wigner_single(single.xi, single.alpha, 0.1, 0.3)));

  const JanusSpec anti = antisymmetric_spec(0.05);
  CHECK(wigner_janus(anti, 0.0, 0.0) == doctest::Approx(1.0 / kPi).epsilon(1e-2));
  const auto v = fock::build_janus_fock_auto(anti);
  CHECK(std::abs(wigner_janus(anti, 0.0, 0.0) - fock::wigner_fock(v, 0.0, 0.0)) < 1e-9);
  double radial_min = 1.0;
  for (int i = 0; i <= 400; ++i) radial_min = std::min(radial_min, wigner_janus(anti, 0.0, i * 0.005));
  CHECK(radial_min == doctest::Approx(-0.132).epsilon(0.02));

  const WignerTerms t = wigner_janus_terms(anti, 0.4, 0.1);
  CHECK(t.total == doctest::Approx(t.mixture + t.interference));
}

TEST_CASE("grids") {
  JanusSpec coh;
  coh.alpha = Displacement({1.0, 0.5});
  GridExtents e = default_extents(coh);
  const WignerGrid g = wigner_grid(coh, e, default_step(e));
  CHECK(g.q.count >= 301);
  CHECK(g.min_value >= 0.0);
  CHECK(std::abs(g.integral - 1.0) < 1e-6);

  const JanusSpec anti = antisymmetric_spec(0.05);
  e = default_extents(anti);
  const double h = default_step(e);
  const WignerDecomposition d = wigner_decomposition(anti, e, h);
  CHECK(d.total.min_value < -0.10);
  CHECK(d.total.min_value >= -1.0 / kPi - 1e-9);
  CHECK(std::abs(d.total.integral - 1.0) < 1e-6);
  CHECK(d.total.negativity_volume > 0.0);
  const double inter = 2.0 * (anti.chi * std::conj(anti.eta) * m0(anti.xi, anti.zeta)).real();
  CHECK(d.interference.integral == doctest::Approx(inter).epsilon(1e-6));
  for (std::size_t i = 0; i < d.total.values.size(); ++i)
    CHECK(d.total.values[i] == doctest::Approx(d.mixture.values[i] + d.interference.values[i]).epsilon(1e-12));

  CHECK_THROWS_AS(wigner_grid(anti, {-1, 1, -1, 1}, 0.05), GridTooCoarse);
  CHECK_THROWS_AS(wigner_grid(anti, e, 0.0), std::invalid_argument);
}

TEST_CASE("grid bound and serial reference") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 4; ++t) {
    const JanusSpec s = random_spec(rng, {1.2, 1.5});
    const GridExtents e = default_extents(s);
    const double h = default_step(e);
    const WignerGrid par = wigner_grid(s, e, h, GridPart::total, Exec::parallel);
    const WignerGrid ser = wigner_grid(s, e, h, GridPart::total, Exec::serial);
    CHECK(par.values == ser.values);
    CHECK(par.integral == ser.integral);
    CHECK(std::abs(par.integral - 1.0) < 1e-6);
    for (double w : par.values) CHECK(std::abs(w) <= 1.0 / kPi + 1e-9);
  }
}

TEST_CASE("closed form matches the oracle on a grid") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 3; ++t) {
    const JanusSpec s = random_spec(rng, {1.2, 1.5});
    const auto v = fock::build_janus_fock_auto(s);
    double worst = 0.0;
    for (int i = 0; i < 41; ++i)
      for (int j = 0; j < 41; ++j) {
        const double q = -5.0 + 0.25 * i, p = -5.0 + 0.25 * j;
        worst = std::max(worst, std::abs(wigner_janus(s, q, p) - fock::wigner_fock(v, q, p)));
      }
    CHECK(worst < 1e-6);
  }
  const JanusSpec s = antisymmetric_spec(0.3, 0.5);
  const GridExtents e{-3, 3, -3, 3};
  const auto v = fock::build_janus_fock_auto(s);
  CHECK_THROWS_AS(wigner_grid_fock(v, e, 0.5), GridTooCoarse);
  const GridExtents wide = default_extents(s);
  const WignerGrid a = wigner_grid_fock(v, wide, 0.2, Exec::parallel);
  const WignerGrid b = wigner_grid_fock(v, wide, 0.2, Exec::serial);
  CHECK(a.values == b.values);
}
