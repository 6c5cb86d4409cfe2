#include "janus/params.hpp"

#include "janus/errors.hpp"
#include "janus/moments.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace janus {

double reduce_angle(double angle) {
  if (!std::isfinite(angle)) throw std::invalid_argument("angle must be finite");
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

SqueezeParam::SqueezeParam(double r, double theta) : r_(r), theta_(reduce_angle(theta)) {
  if (!std::isfinite(r) || r < 0.0)
    throw std::invalid_argument("squeezing magnitude must be finite and >= 0");
}

Displacement::Displacement(std::complex<double> alpha) : alpha_(alpha) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
    throw std::invalid_argument("displacement must be finite");
}

Displacement Displacement::from_polar(double mag, double phase) {
  if (mag < 0.0) throw std::invalid_argument("displacement magnitude must be >= 0");
  return Displacement(std::polar(mag, reduce_angle(phase)));
}

double Displacement::phase() const {
  if (alpha_ == std::complex<double>(0.0, 0.0)) return 0.0;
  return reduce_angle(std::arg(alpha_));
}

CompositeZ composite_z(const SqueezeParam& xi, const SqueezeParam& zeta) {
  return {std::polar(std::tanh(xi.r()) * std::tanh(zeta.r()), xi.theta() - zeta.theta())};
}

double norm_quadratic_form(const JanusSpec& spec) {
  // |χ|² + |η|² + 2Re[η*χ] = |χ + η|², exact when η = -χ.
  const auto cross = std::conj(spec.eta) * spec.chi;
  return std::norm(spec.chi + spec.eta) + 2.0 * std::real(cross * m0_minus_one(spec.xi, spec.zeta));
}

JanusSpec normalize_weights(const JanusSpec& spec) {
  if (spec.chi == std::complex<double>(0.0) && spec.eta == std::complex<double>(0.0))
    throw DegenerateState("both weights are zero");
  const double form = norm_quadratic_form(spec);
  if (!(form > kDegenerateThreshold))
    throw DegenerateState("norm quadratic form " + std::to_string(form) + " <= 1e-14");
  JanusSpec out = spec;
  const double scale = 1.0 / std::sqrt(form);
  out.chi *= scale;
  out.eta *= scale;
  return out;
}

}  // namespace janus
