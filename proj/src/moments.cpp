#include "janus/moments.hpp"

#include "janus/errors.hpp"
#include "janus/gsp.hpp"

#include <boost/math/tools/minima.hpp>

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace janus {

namespace {

using cd = std::complex<double>;

// (1-z)^{-h}, principal branch; Re(1-z) > 0 for |z| < 1.
cd inv_half_power(cd z, double h) { return std::exp(-h * std::log(1.0 - z)); }

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

std::vector<cd> powers(cd base, int n) {
  std::vector<cd> out(static_cast<std::size_t>(n) + 1);
  out[0] = 1.0;
  for (int i = 1; i <= n; ++i) out[i] = out[i - 1] * base;
  return out;
}

double prefactor(const SqueezeParam& xi, const SqueezeParam& zeta) {
  return 1.0 / std::sqrt(std::cosh(xi.r()) * std::cosh(zeta.r()));
}

// tanh s e^{i(2φ_α - φ)} + tanh r e^{i(θ - 2φ_α)}
cd phase_mix(const SqueezeParam& xi, const SqueezeParam& zeta, const Displacement& alpha) {
  const double va = alpha.phase();
  return std::polar(std::tanh(zeta.r()), 2.0 * va - zeta.theta()) +
         std::polar(std::tanh(xi.r()), xi.theta() - 2.0 * va);
}

void check_real(const MomentResult& m, const char* what) {
  if (m.branch_residual >= kBranchTolerance * std::max(1.0, std::abs(m.value.real())))
    throw BranchError(std::string(what) + ": imaginary residue " +
                      std::to_string(m.branch_residual) + " at k=" + std::to_string(m.k));
}

}  // namespace

cd m0(const SqueezeParam& xi, const SqueezeParam& zeta) {
  const cd w = std::cosh(xi.r()) * std::cosh(zeta.r()) -
               std::sinh(xi.r()) * std::sinh(zeta.r()) * std::polar(1.0, xi.theta() - zeta.theta());
  return 1.0 / std::sqrt(w);
}

cd m0_minus_one(const SqueezeParam& xi, const SqueezeParam& zeta) {
  const double r = xi.r(), s = zeta.r();
  const double half_sum = std::sinh(0.5 * (r + s));
  const double half_diff = std::sinh(0.5 * (r - s));
  const cd w_minus_one = half_sum * half_sum + half_diff * half_diff -
                         std::sinh(r) * std::sinh(s) * std::polar(1.0, xi.theta() - zeta.theta());
  const cd root = std::sqrt(1.0 + w_minus_one);
  return -w_minus_one / (root * (1.0 + root));
}

cd matrix_element(int k, const SqueezeParam& xi, const SqueezeParam& zeta,
                  const Displacement& alpha, int order_cap) {
  if (k < 0) throw std::invalid_argument("matrix_element: negative order");
  if (k > order_cap)
    throw OrderTooLarge("order " + std::to_string(k) + " exceeds cap " + std::to_string(order_cap));

  const cd z = composite_z(xi, zeta).z;
  const cd bra_ratio = std::conj(zeta.amplitude_ratio());  // tanh s e^{-iφ}
  const cd ket_ratio = xi.amplitude_ratio();               // tanh r e^{iθ}
  const auto a_pow = powers(alpha.value(), k);
  const auto ac_pow = powers(std::conj(alpha.value()), k);
  const auto bra_pow = powers(bra_ratio, k / 2);
  const auto ket_pow = powers(ket_ratio, k / 2);

  cd sum{0.0, 0.0};
  for (int p = 0; p <= k; ++p) {
    for (int q = p % 2; q <= k; q += 2) {
      // For p > q the symmetry F_{p,q} = z^{(p-q)/2} F_{q,p} trades the
      // negative power of tanh s for a positive power of tanh r.
      const cd g = q >= p ? bra_pow[(q - p) / 2] * gsp::f_closed(p, q, z)
                          : ket_pow[(p - q) / 2] * gsp::f_closed(q, p, z);
      sum += binomial(k, p) * binomial(k, q) * a_pow[k - p] * ac_pow[k - q] * g;
    }
  }
  return prefactor(xi, zeta) * sum;
}

cd m1_closed(const SqueezeParam& xi, const SqueezeParam& zeta, const Displacement& alpha) {
  const cd z = composite_z(xi, zeta).z;
  const double a2 = std::norm(alpha.value());
  return prefactor(xi, zeta) * inv_half_power(z, 1.5) * (a2 * (1.0 - z) + z);
}

cd m2_closed(const SqueezeParam& xi, const SqueezeParam& zeta, const Displacement& alpha) {
  const cd z = composite_z(xi, zeta).z;
  const double a2 = std::norm(alpha.value());
  const cd w = 1.0 - z;
  const cd bracket = w * w * a2 * a2 + (2.0 * z * z + z) +
                     w * a2 * (4.0 * z + phase_mix(xi, zeta, alpha));
  return prefactor(xi, zeta) * inv_half_power(z, 2.5) * bracket;
}

cd m3_closed(const SqueezeParam& xi, const SqueezeParam& zeta, const Displacement& alpha) {
  const cd z = composite_z(xi, zeta).z;
  const double a2 = std::norm(alpha.value());
  const cd w = 1.0 - z;
  const cd t = phase_mix(xi, zeta, alpha);
  const cd bracket = w * w * w * a2 * a2 * a2 + (6.0 * z * z * z + 9.0 * z * z) +
                     w * w * a2 * a2 * (9.0 * z + 3.0 * t) +
                     w * a2 * (9.0 * (2.0 * z * z + z) + 9.0 * z * t);
  return prefactor(xi, zeta) * inv_half_power(z, 3.5) * bracket;
}

double n3_closed(const SqueezeParam& xi, const Displacement& alpha) {
  const double a2 = std::norm(alpha.value());
  const double sh = std::sinh(xi.r()), ch = std::cosh(xi.r());
  const double c = std::cos(2.0 * alpha.phase() - xi.theta());
  const double sh2 = sh * sh;
  return a2 * a2 * a2 + a2 * a2 * (9.0 * sh2 + 6.0 * sh * ch * c) +
         a2 * (27.0 * sh2 * sh2 + 9.0 * sh2 + 18.0 * sh2 * sh * ch * c) +
         15.0 * sh2 * sh2 * sh2 + 9.0 * sh2 * sh2;
}

double n4_closed(const SqueezeParam& xi, const Displacement& alpha) {
  const double a2 = std::norm(alpha.value());
  const double sh = std::sinh(xi.r()), ch = std::cosh(xi.r());
  const double rel = 2.0 * alpha.phase() - xi.theta();
  const double c = std::cos(rel), c2 = std::cos(2.0 * rel);
  const double sh2 = sh * sh, sh3 = sh2 * sh, sh4 = sh2 * sh2;
  return a2 * a2 * a2 * a2 + a2 * a2 * a2 * (16.0 * sh2 + 12.0 * sh * ch * c) +
         a2 * a2 * (108.0 * sh4 + 36.0 * sh2 + 96.0 * sh3 * ch * c + 6.0 * sh2 * ch * ch * c2) +
         a2 * (240.0 * sh4 * sh2 + 144.0 * sh4 + (180.0 * sh4 * sh + 36.0 * sh3) * ch * c) +
         105.0 * sh4 * sh4 + 90.0 * sh4 * sh2 + 9.0 * sh4;
}

MomentResult single_moment_result(int k, const SqueezeParam& xi, const Displacement& alpha) {
  MomentResult m;
  m.k = k;
  m.value = matrix_element(k, xi, xi, alpha);
  m.branch_residual = std::abs(m.value.imag());
  check_real(m, "single_moment");
  return m;
}

double single_moment(int k, const SqueezeParam& xi, const Displacement& alpha) {
  if (k < 1) throw std::invalid_argument("single_moment: k >= 1 required");
  const double v = single_moment_result(k, xi, alpha).value.real();
  if (k == 3 || k == 4) {
    const double explicit_form = k == 3 ? n3_closed(xi, alpha) : n4_closed(xi, alpha);
    if (std::abs(v - explicit_form) > 1e-9 * std::max(1.0, std::abs(v)))
      throw ConsistencyError("single_moment: general and explicit forms disagree at k=" +
                             std::to_string(k));
  }
  return v;
}

MomentResult janus_moment_result(int k, const JanusSpec& spec) {
  MomentResult m;
  m.k = k;
  m.value = std::norm(spec.chi) * matrix_element(k, spec.xi, spec.xi, spec.alpha);
  if (spec.eta != cd(0.0, 0.0)) {
    const cd w = spec.chi * std::conj(spec.eta);
    m.value += std::norm(spec.eta) * matrix_element(k, spec.zeta, spec.zeta, spec.alpha);
    if (spec.chi != cd(0.0, 0.0)) {
      m.value += w * matrix_element(k, spec.xi, spec.zeta, spec.alpha) +
                 std::conj(w) * matrix_element(k, spec.zeta, spec.xi, spec.alpha);
    }
  }
  m.branch_residual = std::abs(m.value.imag());
  check_real(m, "janus_moment");
  return m;
}

double janus_moment(int k, const JanusSpec& spec) {
  return janus_moment_result(k, spec).value.real();
}

double gk(int k, const JanusSpec& spec) {
  if (k < 1) throw std::invalid_argument("gk: k >= 1 required");
  const double n1 = janus_moment(1, spec);
  if (!(n1 > 1e-12)) throw VacuumState("mean photon number " + std::to_string(n1) + " below 1e-12");
  return janus_moment(k, spec) / std::pow(n1, k);
}

double norm_deficit(const JanusSpec& spec) { return norm_quadratic_form(spec) - 1.0; }

double antisym_g2_expansion(double a, double r) {
  const double a2 = a * a, d = a2 + 2.0;
  const double r4 = r * r * r * r;
  return (a2 * a2 + 8.0 * a2 + 2.0) / (d * d) +
         5.0 * (2.0 * a2 * a2 - a2 + 10.0) / (2.0 * d * d * d) * r4;
}

double antisym_g3_expansion(double a, double r) {
  const double a2 = a * a, a4 = a2 * a2, d = a2 + 2.0;
  const double r4 = r * r * r * r;
  return (a4 * a2 + 18.0 * a4 + 18.0 * a2) / (d * d * d) +
         15.0 * (2.0 * a4 * a2 + 9.0 * a4 + 34.0 * a2 + 20.0) / (2.0 * d * d * d * d) * r4;
}

JanusSpec antisymmetric_spec(double r, std::complex<double> alpha, double ratio) {
  JanusSpec spec;
  spec.chi = ratio;
  spec.eta = -1.0;
  spec.xi = SqueezeParam(r, 0.0);
  spec.zeta = SqueezeParam(r, kPi);
  spec.alpha = Displacement(alpha);
  return normalize_weights(spec);
}

double optimized_g2_formula(double r) {
  const double x = std::sinh(r) * std::sinh(r);
  const double num = ((((12.0 * x + 40.0) * x + 51.0) * x + 28.0) * x + 11.0) * x + 2.0;
  const double den = ((((4.0 * x + 16.0) * x + 29.0) * x + 29.0) * x + 16.0) * x + 4.0;
  return num / den;
}

OptimizedG2 optimized_g2_undisplaced(double r) {
  if (!(r > 0.0)) throw std::invalid_argument("optimized_g2_undisplaced: r > 0 required");
  auto g2_at = [r](double log_ratio) { return gk(2, antisymmetric_spec(r, {}, std::exp(log_ratio))); };
  const auto [u, g] = boost::math::tools::brent_find_minima(g2_at, -8.0, 8.0, 40);
  return {optimized_g2_formula(r), std::exp(u), g};
}

}  // namespace janus
