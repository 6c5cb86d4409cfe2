#include "janus/errors.hpp"
#include "janus/metrology.hpp"
#include "janus/moments.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace janus;

TEST_CASE("photon-number variance") {
  JanusSpec coh;
  coh.chi = 0.6;
  coh.eta = 0.8;
  coh.alpha = Displacement({1.2, -0.4});
  coh = normalize_weights(coh);
  CHECK(var_n(coh) == doctest::Approx(std::norm(coh.alpha.value())).epsilon(1e-12));
  CHECK(var_n(antisymmetric_spec(0.01, 1.0)) == doctest::Approx(5.0).epsilon(1e-3));
  CHECK(std::abs(var_n(antisymmetric_spec(0.01))) < 1e-6);
}

TEST_CASE("displacement-phase QFI") {
  const QfiResult r = qfi_displacement_phase(antisymmetric_spec(0.01, 1.0));
  CHECK(std::abs(r.value - 20.0) < 0.1);
  CHECK(r.method == QfiMethod::variance_formula);
  CHECK(to_string(r.parameter) == "displacement_phase");
  JanusSpec coh;
  coh.alpha = Displacement(1.7);
  CHECK(std::abs(qfi_displacement_phase(coh).value - 4 * 1.7 * 1.7) < 1e-10);

  const QfiResult n = qfi_fidelity_numeric(coh, QfiParameter::displacement_phase, 1e-3);
  CHECK(n.value == doctest::Approx(4 * 1.7 * 1.7).epsilon(1e-3));
  CHECK(n.method == QfiMethod::fidelity_numeric);

  std::mt19937_64 rng(15);
  for (int t = 0; t < 6; ++t) {
    const JanusSpec s = random_spec(rng, {1.2, 1.5});
    const double a = qfi_displacement_phase(s).value;
    const QfiResult b = qfi_fidelity_numeric(s, QfiParameter::displacement_phase, 1e-3);
    CHECK(std::abs(a - b.value) / a < 1e-3);
    CHECK(b.sensitivity < 1e-3 * a);
    CHECK(b.value >= -1e-9);
  }
}

TEST_CASE("squeezing-angle QFI") {
  CHECK(qfi_squeezing_angle_leading(1.0) == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(qfi_squeezing_angle_leading(0.1) == doctest::Approx(1e-3).epsilon(1e-14));
  CHECK(qfi_squeezing_angle_leading(0.0) == 0.0);
  const QfiResult n = qfi_fidelity_numeric(antisymmetric_spec(0.1), QfiParameter::squeezing_angle, 1e-2);
  CHECK(n.value == doctest::Approx(1e-3).epsilon(0.2));
  CHECK(n.parameter == QfiParameter::squeezing_angle);
}

TEST_CASE("fidelity QFI argument checks") {
  const JanusSpec s = antisymmetric_spec(0.2, 1.0);
  CHECK_THROWS_AS(qfi_fidelity_numeric(s, QfiParameter::displacement_phase, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(qfi_fidelity_numeric(s, QfiParameter::displacement_phase, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(qfi_fidelity_numeric(s, QfiParameter::squeezing_generator, 1e-3), std::invalid_argument);
  // The vacuum is invariant under e^{iλn̂}.
  CHECK_THROWS_AS(qfi_fidelity_numeric(JanusSpec{}, QfiParameter::displacement_phase, 1e-3), StepTooSmall);
}

TEST_CASE("quadratic generator") {
  CHECK(var_gsq(JanusSpec{}, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
  JanusSpec s;
  double prev = 0.0;
  for (double r = 0.2; r < 1.45; r += 0.2) {
    s.xi = {r, 0.9};
    const double v = var_gsq(s, 0.9);
    CHECK(v > prev);
    prev = v;
  }
  const QfiResult q = qfi_squeezing_generator(antisymmetric_spec(0.3), 0.0);
  CHECK(q.value == doctest::Approx(4 * var_gsq(antisymmetric_spec(0.3), 0.0)));
  CHECK(to_string(q.parameter) == "squeezing_generator");
}
