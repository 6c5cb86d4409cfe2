#pragma once

#include <complex>
#include <numbers>

namespace janus {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces an angle to [0, 2π).
double reduce_angle(double angle);

/// Squeezing parameter ξ = r e^{iθ}. The angle is stored reduced.
class SqueezeParam {
 public:
  SqueezeParam() = default;
  SqueezeParam(double r, double theta);

  double r() const noexcept { return r_; }
  double theta() const noexcept { return theta_; }

  std::complex<double> value() const { return std::polar(r_, theta_); }
  /// tanh(r) e^{iθ}: the geometric ratio of successive even Fock amplitudes.
  std::complex<double> amplitude_ratio() const {
    return std::polar(std::tanh(r_), theta_);
  }

  friend bool operator==(const SqueezeParam&, const SqueezeParam&) = default;

 private:
  double r_ = 0.0;
  double theta_ = 0.0;
};

class Displacement {
 public:
  Displacement() = default;
  Displacement(std::complex<double> alpha);  // NOLINT: implicit on purpose
  static Displacement from_polar(double mag, double phase);

  std::complex<double> value() const noexcept { return alpha_; }
  double mag() const { return std::abs(alpha_); }
  /// Phase in [0, 2π); zero for α = 0.
  double phase() const;

  friend bool operator==(const Displacement&, const Displacement&) = default;

 private:
  std::complex<double> alpha_{0.0, 0.0};
};

/// χ|ξ,α⟩ + η|ζ,α⟩ with |ξ,α⟩ = D(α)S(ξ)|0⟩.
struct JanusSpec {
  std::complex<double> chi{1.0, 0.0};
  std::complex<double> eta{0.0, 0.0};
  SqueezeParam xi;
  SqueezeParam zeta;
  Displacement alpha;

  friend bool operator==(const JanusSpec&, const JanusSpec&) = default;
};

/// z = tanh r tanh s e^{i(θ-φ)}, the interference variable of two squeezed vacua.
struct CompositeZ {
  std::complex<double> z;
};

CompositeZ composite_z(const SqueezeParam& xi, const SqueezeParam& zeta);

/// |χ|² + |η|² + 2Re[η*χ⟨ζ|ξ⟩], evaluated without cancellation when η ≈ -χ.
double norm_quadratic_form(const JanusSpec& spec);

inline constexpr double kDegenerateThreshold = 1e-14;

/// Scales (χ, η) by a common positive real so that ⟨Ψ|Ψ⟩ = 1.
/// Throws DegenerateState when the quadratic form is ≤ 1e-14.
JanusSpec normalize_weights(const JanusSpec& spec);

}  // namespace janus
