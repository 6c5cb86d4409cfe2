#include "janus/metrology.hpp"

#include "janus/errors.hpp"
#include "janus/fock.hpp"
#include "janus/moments.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace janus {

namespace {

using cd = std::complex<double>;

JanusSpec shifted(const JanusSpec& spec, QfiParameter parameter, double lambda) {
  JanusSpec s = spec;
  switch (parameter) {
    case QfiParameter::displacement_phase:
      s.alpha = Displacement(spec.alpha.value() * std::polar(1.0, lambda));
      s.xi = SqueezeParam(spec.xi.r(), spec.xi.theta() + 2.0 * lambda);
      s.zeta = SqueezeParam(spec.zeta.r(), spec.zeta.theta() + 2.0 * lambda);
      return s;
    case QfiParameter::squeezing_angle:
      s.xi = SqueezeParam(spec.xi.r(), spec.xi.theta() + lambda);
      s.zeta = SqueezeParam(spec.zeta.r(), spec.zeta.theta() + lambda);
      return normalize_weights(s);
    case QfiParameter::squeezing_generator:
      break;
  }
  throw std::invalid_argument("no fidelity parameterization for squeezing_generator");
}

// 1 − |⟨u|v⟩| for normalized u, v, evaluated as ½‖u − e^{iγ}v‖².
double fidelity_deficit(const fock::FockVector& a, const fock::FockVector& b) {
  const double na = std::sqrt(a.norm_squared()), nb = std::sqrt(b.norm_squared());
  const cd ov = fock::overlap_fock(a, b);
  const cd phase = std::abs(ov) > 0.0 ? std::conj(ov) / std::abs(ov) : cd(1.0, 0.0);
  double s = 0.0;
  for (int n = 0; n <= a.cutoff(); ++n) s += std::norm(a[n] / na - phase * b[n] / nb);
  return 0.5 * s;
}

double fidelity_qfi(const JanusSpec& spec, QfiParameter parameter, double h, int cutoff) {
  const auto minus = fock::build_janus_fock(shifted(spec, parameter, -0.5 * h), cutoff);
  const auto plus = fock::build_janus_fock(shifted(spec, parameter, 0.5 * h), cutoff);
  const double deficit = fidelity_deficit(minus, plus);
  if (deficit < 1e-13)
    throw StepTooSmall("fidelity deficit " + std::to_string(deficit) + " at step " + std::to_string(h));
  return 8.0 * deficit / (h * h);
}

}  // namespace

std::string_view to_string(QfiMethod m) {
  switch (m) {
    case QfiMethod::variance_formula: return "variance_formula";
    case QfiMethod::expansion: return "expansion";
    case QfiMethod::fidelity_numeric: return "fidelity_numeric";
  }
  return "unknown";
}

std::string_view to_string(QfiParameter p) {
  switch (p) {
    case QfiParameter::displacement_phase: return "displacement_phase";
    case QfiParameter::squeezing_angle: return "squeezing_angle";
    case QfiParameter::squeezing_generator: return "squeezing_generator";
  }
  return "unknown";
}

double var_n(const JanusSpec& spec) {
  const double n1 = janus_moment(1, spec);
  return janus_moment(2, spec) + n1 - n1 * n1;
}

QfiResult qfi_displacement_phase(const JanusSpec& spec) {
  return {4.0 * var_n(spec), QfiMethod::variance_formula, QfiParameter::displacement_phase, 0.0};
}

double qfi_squeezing_angle_leading(double r) {
  const double c1 = std::sqrt(2.0) / 2.0;
  const double c3 = std::sqrt(720.0) / 48.0;
  const double ratio = c3 / c1;
  return 16.0 * ratio * ratio * r * r * r * r;
}

QfiResult qfi_fidelity_numeric(const JanusSpec& spec, QfiParameter parameter, double dl) {
  if (!(dl >= 1e-5 && dl <= 1e-2))
    throw std::invalid_argument("qfi_fidelity_numeric: step must lie in [1e-5, 1e-2]");
  if (parameter == QfiParameter::squeezing_generator)
    throw std::invalid_argument("qfi_fidelity_numeric: squeezing_generator has no fidelity path");
  // One cutoff for every state in the stencil.
  const int cutoff = fock::build_janus_fock_auto(spec).cutoff();
  const double coarse = fidelity_qfi(spec, parameter, dl, cutoff);
  const double fine = fidelity_qfi(spec, parameter, 0.5 * dl, cutoff);
  const double extrapolated = (4.0 * fine - coarse) / 3.0;
  return {extrapolated, QfiMethod::fidelity_numeric, parameter, std::abs(extrapolated - fine)};
}

double var_gsq(const JanusSpec& spec, double theta_g) {
  return fock::var_gsq_fock(fock::build_janus_fock_auto(spec), theta_g);
}

QfiResult qfi_squeezing_generator(const JanusSpec& spec, double theta_g) {
  return {4.0 * var_gsq(spec, theta_g), QfiMethod::variance_formula,
          QfiParameter::squeezing_generator, 0.0};
}

}  // namespace janus
