#include "janus/wigner.hpp"

#include "janus/errors.hpp"
#include "janus/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

namespace janus {

namespace {

using cd = std::complex<double>;

// Gaussian wavefunction parameter of S(ξ)|0⟩: ψ(q) ∝ exp(−a q²/2).
cd gauss_width(const SqueezeParam& xi) {
  const cd t = xi.amplitude_ratio();
  return (1.0 - t) / (1.0 + t);
}

std::pair<double, double> centre(const Displacement& alpha) {
  return {std::sqrt(2.0) * alpha.value().real(), std::sqrt(2.0) * alpha.value().imag()};
}

GridAxis make_axis(double lo, double hi, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
  if (!(hi > lo)) throw std::invalid_argument("grid extent must be nonempty");
  const int count = static_cast<int>(std::floor((hi - lo) / step + 0.5)) + 1;
  return {lo, step, count};
}

template <class Fn>
WignerGrid sample(const GridExtents& ext, double step, Exec exec, Fn&& fn) {
  WignerGrid g;
  g.q = make_axis(ext.q_min, ext.q_max, step);
  g.p = make_axis(ext.p_min, ext.p_max, step);
  const int nq = g.q.count, np = g.p.count;
  g.values.assign(static_cast<std::size_t>(nq) * np, 0.0);
  auto row = [&](int i) {
    const double q = g.q.at(i);
    for (int j = 0; j < np; ++j) g.values[static_cast<std::size_t>(i) * np + j] = fn(q, g.p.at(j));
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < nq; ++i) row(i);
  } else {
    for (int i = 0; i < nq; ++i) row(i);
  }

  double sum = 0.0, abs_sum = 0.0;
  g.min_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < nq; ++i) {
    for (int j = 0; j < np; ++j) {
      const double w = g.at(i, j);
      sum += w;
      abs_sum += std::abs(w);
      if (w < g.min_value) {
        g.min_value = w;
        g.min_q = g.q.at(i);
        g.min_p = g.p.at(j);
      }
    }
  }
  const double cell = step * step;
  g.integral = sum * cell;
  g.negativity_volume = abs_sum * cell - 1.0;
  return g;
}

void check_normalized(const WignerGrid& g) {
  if (std::abs(g.integral - 1.0) > 1e-3)
    throw GridTooCoarse("grid integral " + std::to_string(g.integral) + " deviates from 1");
}

}  // namespace

Covariance2 covariance(const SqueezeParam& xi) {
  const double c = std::cosh(2.0 * xi.r()), s = std::sinh(2.0 * xi.r());
  return {0.5 * (c + std::cos(xi.theta()) * s), 0.5 * std::sin(xi.theta()) * s,
          0.5 * (c - std::cos(xi.theta()) * s)};
}

double wigner_single(const SqueezeParam& xi, const Displacement& alpha, double q, double p) {
  const Covariance2 v = covariance(xi);
  const auto [q0, p0] = centre(alpha);
  const double dq = q - q0, dp = p - p0;
  const double det = v.det();
  const double quad = (v.v22 * dq * dq - 2.0 * v.v12 * dq * dp + v.v11 * dp * dp) / det;
  return std::exp(-0.5 * quad) / (2.0 * kPi * std::sqrt(det));
}

ABCoefficients ab_from_kernel(cd k11, cd k12, cd k22) {
  const cd i{0.0, 1.0};
  return {0.5 * (k11 + k22), 0.25 * (k11 - k22 - 2.0 * i * k12),
          0.25 * (k11 - k22 + 2.0 * i * k12)};
}

ABCoefficients ab_coefficients(const Covariance2& sigma) {
  const double det = sigma.det();
  if (det < 1e-300) throw SingularSigma("det Σ = " + std::to_string(det));
  return ab_from_kernel(sigma.v22 / det, -sigma.v12 / det, sigma.v11 / det);
}

CrossGauss cross_gauss(const SqueezeParam& xi, const SqueezeParam& zeta, const Displacement& alpha) {
  CrossGauss g;
  g.overlap = m0(xi, zeta);
  const Covariance2 a = covariance(xi), b = covariance(zeta);
  g.sigma = {0.5 * (a.v11 + b.v11), 0.5 * (a.v12 + b.v12), 0.5 * (a.v22 + b.v22)};

  const cd a1 = gauss_width(xi);
  const cd a2c = std::conj(gauss_width(zeta));
  const cd denom = a1 + a2c;
  if (std::abs(denom) < 1e-300) throw SingularSigma("cross-Wigner kernel is singular");
  const cd i{0.0, 1.0};
  const cd scale = 2.0 / denom;
  g.k11 = scale * 2.0 * a1 * a2c;
  g.k12 = -scale * i * (a1 - a2c);
  g.k22 = scale * 2.0;
  g.ab = ab_from_kernel(g.k11, g.k12, g.k22);
  std::tie(g.q0, g.p0) = centre(alpha);
  return g;
}

cd CrossGauss::evaluate(double q, double p) const {
  const double dq = q - q0, dp = p - p0;
  const cd quad = k11 * dq * dq + 2.0 * k12 * dq * dp + k22 * dp * dp;
  return overlap / kPi * std::exp(-0.5 * quad);
}

cd CrossGauss::evaluate_complex(double q, double p) const {
  const cd db = cd(q - q0, p - p0) / std::sqrt(2.0);
  const cd expo = -ab.A * std::norm(db) - ab.B * db * db - ab.B_bar * std::conj(db) * std::conj(db);
  return 2.0 * overlap / kPi * std::exp(expo);
}

cd cross_wigner(const SqueezeParam& xi, const SqueezeParam& zeta, const Displacement& alpha,
                double q, double p) {
  return cross_gauss(xi, zeta, alpha).evaluate(q, p);
}

WignerTerms wigner_janus_terms(const JanusSpec& spec, double q, double p) {
  WignerTerms t;
  t.mixture = std::norm(spec.chi) * wigner_single(spec.xi, spec.alpha, q, p);
  if (spec.eta != cd(0.0, 0.0)) {
    t.mixture += std::norm(spec.eta) * wigner_single(spec.zeta, spec.alpha, q, p);
    t.interference =
        2.0 * (spec.chi * std::conj(spec.eta) * cross_wigner(spec.xi, spec.zeta, spec.alpha, q, p)).real();
  }
  t.total = t.mixture + t.interference;
  return t;
}

double wigner_janus(const JanusSpec& spec, double q, double p) {
  return wigner_janus_terms(spec, q, p).total;
}

GridExtents default_extents(const JanusSpec& spec) {
  double r = spec.xi.r();
  if (spec.eta != cd(0.0, 0.0)) r = std::max(r, spec.zeta.r());
  const double half = 6.0 * std::exp(r) / std::sqrt(2.0);
  const auto [q0, p0] = centre(spec.alpha);
  return {q0 - half, q0 + half, p0 - half, p0 + half};
}

double default_step(const GridExtents& ext) {
  return std::max(ext.q_max - ext.q_min, ext.p_max - ext.p_min) / 300.0;
}

WignerGrid wigner_grid(const JanusSpec& spec, const GridExtents& ext, double step, GridPart part,
                       Exec exec) {
  // The Gaussian kernels do not depend on the sample point.
  const Displacement& al = spec.alpha;
  const bool two = spec.eta != cd(0.0, 0.0);
  const CrossGauss wx = cross_gauss(spec.xi, spec.xi, al);
  const CrossGauss wz = cross_gauss(spec.zeta, spec.zeta, al);
  const CrossGauss wc = cross_gauss(spec.xi, spec.zeta, al);
  const cd weight = spec.chi * std::conj(spec.eta);
  auto fn = [&](double q, double p) {
    double mix = std::norm(spec.chi) * wx.evaluate(q, p).real();
    double inter = 0.0;
    if (two) {
      mix += std::norm(spec.eta) * wz.evaluate(q, p).real();
      inter = 2.0 * (weight * wc.evaluate(q, p)).real();
    }
    switch (part) {
      case GridPart::mixture: return mix;
      case GridPart::interference: return inter;
      case GridPart::total: break;
    }
    return mix + inter;
  };
  WignerGrid g = sample(ext, step, exec, fn);
  if (part == GridPart::total) check_normalized(g);
  return g;
}

WignerDecomposition wigner_decomposition(const JanusSpec& spec, const GridExtents& ext,
                                         double step, Exec exec) {
  return {wigner_grid(spec, ext, step, GridPart::mixture, exec),
          wigner_grid(spec, ext, step, GridPart::interference, exec),
          wigner_grid(spec, ext, step, GridPart::total, exec)};
}

WignerGrid wigner_grid_fock(const fock::FockVector& state, const GridExtents& ext, double step,
                            Exec exec) {
  WignerGrid g = sample(ext, step, exec, [&](double q, double p) { return fock::wigner_fock(state, q, p); });
  check_normalized(g);
  return g;
}

cd cross_wigner_integral(const SqueezeParam& xi, const SqueezeParam& zeta, const Displacement& alpha,
                         const GridExtents& ext, double step) {
  const CrossGauss g = cross_gauss(xi, zeta, alpha);
  const GridAxis qa = make_axis(ext.q_min, ext.q_max, step);
  const GridAxis pa = make_axis(ext.p_min, ext.p_max, step);
  cd sum{0.0, 0.0};
  for (int i = 0; i < qa.count; ++i)
    for (int j = 0; j < pa.count; ++j) sum += g.evaluate(qa.at(i), pa.at(j));
  return sum * step * step;
}

}  // namespace janus
