#include "janus/selftest.hpp"

#include "janus/fock.hpp"
#include "janus/gsp.hpp"
#include "janus/metrology.hpp"
#include "janus/moments.hpp"
#include "janus/sampling.hpp"
#include "janus/wigner.hpp"

#include <algorithm>
#include <cmath>

namespace janus {

namespace {

SelftestLine line(std::string name, double worst, double tol) {
  return {std::move(name), worst, tol, worst < tol};
}

double rel(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

}  // namespace

std::vector<SelftestLine> run_selftest() {
  std::vector<SelftestLine> out;
  std::mt19937_64 rng(20240611);

  double worst = 0.0;
  for (int t = 0; t < 60; ++t) {
    const int p = static_cast<int>(uniform01(rng) * 9), q0 = static_cast<int>(uniform01(rng) * 9);
    const int q = (q0 % 2 == p % 2) ? q0 : (q0 == 8 ? 7 : q0 + 1);
    const auto z = std::polar(uniform(rng, 0.0, 0.9), uniform(rng, 0.0, kTwoPi));
    worst = std::max(worst, rel(gsp::f_series(p, q, z), gsp::f_closed(p, q, z)));
  }
  out.push_back(line("gsp_series_vs_closed", worst, 1e-10));

  worst = 0.0;
  for (int t = 0; t < 12; ++t) {
    const JanusSpec s = random_spec(rng);
    const int n = fock::build_janus_fock_auto(s, 200).cutoff() * 3 / 2;
    const auto kx = fock::displace_fock(fock::squeezed_vacuum_fock(s.xi, n), s.alpha);
    const auto kz = fock::displace_fock(fock::squeezed_vacuum_fock(s.zeta, n), s.alpha);
    for (int k = 0; k <= 4; ++k)
      worst = std::max(worst, rel(matrix_element(k, s.xi, s.zeta, s.alpha), fock::cross_moment_fock(kz, kx, k)));
  }
  out.push_back(line("matrix_element_vs_fock", worst, 1e-8));

  worst = 0.0;
  for (int t = 0; t < 3; ++t) {
    const JanusSpec s = random_spec(rng, {1.2, 1.5});
    const auto v = fock::build_janus_fock_auto(s);
    for (int i = 0; i < 11; ++i)
      for (int j = 0; j < 11; ++j) {
        const double q = -4.0 + 0.8 * i, p = -4.0 + 0.8 * j;
        worst = std::max(worst, std::abs(wigner_janus(s, q, p) - fock::wigner_fock(v, q, p)));
      }
  }
  out.push_back(line("wigner_vs_fock", worst, 1e-6));

  worst = 0.0;
  for (int t = 0; t < 4; ++t) {
    const JanusSpec s = random_spec(rng, {1.0, 1.5});
    const double a = qfi_displacement_phase(s).value;
    const double b = qfi_fidelity_numeric(s, QfiParameter::displacement_phase, 1e-3).value;
    worst = std::max(worst, std::abs(a - b) / a);
  }
  out.push_back(line("qfi_variance_vs_fidelity", worst, 1e-3));
  return out;
}

}  // namespace janus
