#pragma once

// Phase-space conventions: x = (q, p), β = (q + ip)/√2, measure dq dp.
// A coherent state sits at √2(Re α, Im α); the vacuum peaks at 1/π.

#include "janus/exec.hpp"
#include "janus/fock.hpp"
#include "janus/params.hpp"

#include <complex>
#include <vector>

namespace janus {

struct Covariance2 {
  double v11 = 0.5;
  double v12 = 0.0;
  double v22 = 0.5;

  double det() const noexcept { return v11 * v22 - v12 * v12; }
};

/// Quadrature covariance of S(ξ)|0⟩; det = 1/4, principal variances e^{±2r}/2.
Covariance2 covariance(const SqueezeParam& xi);

double wigner_single(const SqueezeParam& xi, const Displacement& alpha, double q, double p);

struct ABCoefficients {
  std::complex<double> A;
  std::complex<double> B;
  std::complex<double> B_bar;  // equals conj(B) only for a real kernel
};

/// A = (K₁₁+K₂₂)/2, B = (K₁₁−K₂₂−2iK₁₂)/4, B̄ = (K₁₁−K₂₂+2iK₁₂)/4 for K = Σ⁻¹.
/// Throws SingularSigma when det Σ < 1e-300.
ABCoefficients ab_coefficients(const Covariance2& sigma);
ABCoefficients ab_from_kernel(std::complex<double> k11, std::complex<double> k12,
                              std::complex<double> k22);

/// Wigner function of |ξ,α⟩⟨ζ,α|:
///   ⟨ζ|ξ⟩/π · exp(−½ δxᵀ K δx)
/// with K a complex symmetric matrix, det K = 4. K is real (and equal to the
/// inverse of the mean covariance) only when ξ = ζ.
struct CrossGauss {
  std::complex<double> overlap;
  Covariance2 sigma;  // (V_ξ + V_ζ)/2, informational
  std::complex<double> k11, k12, k22;
  ABCoefficients ab;
  double q0 = 0.0;
  double p0 = 0.0;

  /// Quadrature form, dq dp density.
  std::complex<double> evaluate(double q, double p) const;
  /// Complex form exp(−A|δβ|² − Bδβ² − B̄δβ*²) with the d²β prefactor 2⟨ζ|ξ⟩/π.
  std::complex<double> evaluate_complex(double q, double p) const;
};

CrossGauss cross_gauss(const SqueezeParam& xi, const SqueezeParam& zeta, const Displacement& alpha);

std::complex<double> cross_wigner(const SqueezeParam& xi, const SqueezeParam& zeta,
                                  const Displacement& alpha, double q, double p);

struct WignerTerms {
  double mixture = 0.0;       // |χ|² W_ξ + |η|² W_ζ
  double interference = 0.0;  // 2 Re[χ η* W_{|ξ⟩⟨ζ|}]
  double total = 0.0;
};

WignerTerms wigner_janus_terms(const JanusSpec& spec, double q, double p);
double wigner_janus(const JanusSpec& spec, double q, double p);

struct GridAxis {
  double start = 0.0;
  double step = 1.0;
  int count = 0;

  double at(int i) const noexcept { return start + step * i; }
};

struct GridExtents {
  double q_min, q_max, p_min, p_max;
};

/// Centre ± 6 standard deviations of the wider component.
GridExtents default_extents(const JanusSpec& spec);
/// Step giving at least 301 points along the longer axis.
double default_step(const GridExtents& ext);

struct WignerGrid {
  GridAxis q;
  GridAxis p;
  std::vector<double> values;  // q-major: values[i * p.count + j]
  double integral = 0.0;
  double min_value = 0.0;
  double min_q = 0.0;
  double min_p = 0.0;
  double negativity_volume = 0.0;  // ∫|W| dq dp − 1

  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * p.count + j]; }
};

enum class GridPart { total, mixture, interference };

/// Samples one part of the Janus Wigner function. For GridPart::total,
/// throws GridTooCoarse when the integral is off by more than 1e-3.
WignerGrid wigner_grid(const JanusSpec& spec, const GridExtents& ext, double step,
                       GridPart part = GridPart::total, Exec exec = Exec::parallel);

struct WignerDecomposition {
  WignerGrid mixture;
  WignerGrid interference;
  WignerGrid total;
};

WignerDecomposition wigner_decomposition(const JanusSpec& spec, const GridExtents& ext,
                                         double step, Exec exec = Exec::parallel);

/// Same sampling from the Fock-space Laguerre sum.
WignerGrid wigner_grid_fock(const fock::FockVector& state, const GridExtents& ext, double step,
                            Exec exec = Exec::parallel);

/// Riemann sum of the complex cross-Wigner function; should equal ⟨ζ|ξ⟩.
std::complex<double> cross_wigner_integral(const SqueezeParam& xi, const SqueezeParam& zeta,
                                          const Displacement& alpha, const GridExtents& ext,
                                          double step);

}  // namespace janus
