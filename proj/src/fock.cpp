#include "janus/fock.hpp"

#include "janus/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace janus::fock {

namespace {

void require_same_cutoff(const FockVector& a, const FockVector& b) {
  if (a.cutoff() != b.cutoff()) throw std::invalid_argument("Fock vectors differ in cutoff");
}

void check_tail(const FockVector& v, const char* what) {
  const double tail = v.tail_mass();
  if (tail > kTailThreshold * std::max(v.norm_squared(), 1e-300))
    throw CutoffTooSmall(std::string(what) + ": tail mass " + std::to_string(tail) +
                         " at cutoff " + std::to_string(v.cutoff()));
}

constexpr double kRescale = 1e150;

}  // namespace

FockVector::FockVector(std::vector<cd> amps) : amps_(std::move(amps)) {}

FockVector FockVector::zeros(int cutoff) {
  return FockVector(std::vector<cd>(static_cast<std::size_t>(cutoff) + 1));
}

double FockVector::norm_squared() const {
  double s = 0.0;
  for (const cd& a : amps_) s += std::norm(a);
  return s;
}

double FockVector::tail_mass() const {
  const int n = cutoff();
  double s = 0.0;
  for (int i = std::max(n - 20, n / 2) + 1; i <= n; ++i) s += std::norm(amps_[i]);
  return s;
}

FockVector FockVector::operator*(cd w) const {
  auto out = amps_;
  for (cd& a : out) a *= w;
  return FockVector(std::move(out));
}

FockVector FockVector::operator+(const FockVector& o) const {
  require_same_cutoff(*this, o);
  auto out = amps_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += o.amps_[i];
  return FockVector(std::move(out));
}

FockVector squeezed_vacuum_fock(const SqueezeParam& xi, int cutoff) {
  if (cutoff < 2) throw std::invalid_argument("squeezed_vacuum_fock: cutoff >= 2 required");
  auto v = FockVector::zeros(cutoff);
  std::vector<cd> amps(v.amps());
  if (xi.r() == 0.0) {
    amps[0] = 1.0;
    return FockVector(std::move(amps));
  }
  const double log_t = std::log(std::tanh(xi.r()));
  const double log_pre = -0.5 * std::log(std::cosh(xi.r()));
  for (int m = 0; 2 * m <= cutoff; ++m) {
    const double log_c = 0.5 * std::lgamma(2.0 * m + 1.0) - m * std::log(2.0) - std::lgamma(m + 1.0);
    amps[2 * m] = std::polar(std::exp(log_pre + m * log_t + log_c), m * xi.theta());
  }
  FockVector out(std::move(amps));
  check_tail(out, "squeezed_vacuum_fock");
  return out;
}

FockVector coherent_fock(const Displacement& alpha, int cutoff) {
  std::vector<cd> amps(static_cast<std::size_t>(cutoff) + 1);
  const double mag = alpha.mag();
  if (mag == 0.0) {
    amps[0] = 1.0;
    return FockVector(std::move(amps));
  }
  const double log_mag = std::log(mag);
  for (int n = 0; n <= cutoff; ++n)
    amps[n] = std::polar(std::exp(-0.5 * mag * mag + n * log_mag - 0.5 * std::lgamma(n + 1.0)),
                         n * alpha.phase());
  return FockVector(std::move(amps));
}

std::vector<double> laguerre_kernel(int d, double x, int count) {
  std::vector<double> f(static_cast<std::size_t>(std::max(count, 0)));
  if (count <= 0) return f;
  if (x == 0.0) {
    if (d == 0) std::fill(f.begin(), f.end(), 1.0);
    return f;
  }
  // g_n = f_n e^{-log_scale}; the three-term recurrence is linear so the
  // scale can be moved freely between g and log_scale.
  double log_scale = 0.5 * d * std::log(x) - 0.5 * x - 0.5 * std::lgamma(d + 1.0);
  double g_prev = 0.0, g = 1.0;
  f[0] = std::exp(log_scale);
  for (int n = 0; n + 1 < count; ++n) {
    const double next = ((2.0 * n + 1.0 + d - x) * g - std::sqrt(double(n) * (n + d)) * g_prev) /
                        std::sqrt((n + 1.0) * (n + 1.0 + d));
    g_prev = g;
    g = next;
    if (std::abs(g) > kRescale) {
      g /= kRescale;
      g_prev /= kRescale;
      log_scale += std::log(kRescale);
    }
    f[n + 1] = g * std::exp(log_scale);
  }
  return f;
}

std::vector<cd> displacement_matrix(const Displacement& alpha, int cutoff) {
  const int dim = cutoff + 1;
  std::vector<cd> D(static_cast<std::size_t>(dim) * dim);
  const double x = std::norm(alpha.value());
  const double phi = alpha.phase();
  for (int d = 0; d < dim; ++d) {
    const auto k = laguerre_kernel(d, x, dim - d);
    const cd below = std::polar(1.0, d * phi);
    const cd above = (d % 2 ? -1.0 : 1.0) * std::conj(below);
    for (int n = 0; n + d < dim; ++n) {
      D[static_cast<std::size_t>(n + d) * dim + n] = below * k[n];
      if (d > 0) D[static_cast<std::size_t>(n) * dim + n + d] = above * k[n];
    }
  }
  return D;
}

FockVector displace_fock(const FockVector& v, const Displacement& alpha, Exec exec) {
  if (alpha.value() == cd(0.0, 0.0)) return v;
  const int dim = v.cutoff() + 1;
  const auto D = displacement_matrix(alpha, v.cutoff());
  std::vector<cd> out(static_cast<std::size_t>(dim));
  const auto& in = v.amps();
  auto row = [&](int m) {
    cd s{0.0, 0.0};
    const cd* Dm = D.data() + static_cast<std::size_t>(m) * dim;
    for (int n = 0; n < dim; ++n) s += Dm[n] * in[n];
    out[m] = s;
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (int m = 0; m < dim; ++m) row(m);
  } else {
    for (int m = 0; m < dim; ++m) row(m);
  }
  FockVector result(std::move(out));
  check_tail(result, "displace_fock");
  return result;
}

int default_cutoff(const JanusSpec& spec) {
  if (const char* env = std::getenv("JANUS_CUTOFF")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 2 && n <= kMaxCutoff) return static_cast<int>(n);
  }
  const double sh = std::sinh(std::max(spec.xi.r(), spec.zeta.r()));
  const double est = std::ceil(8.0 * (std::norm(spec.alpha.value()) + sh * sh) + 40.0);
  return static_cast<int>(std::max(60.0, std::min(est, double(kMaxCutoff))));
}

FockVector build_janus_fock(const JanusSpec& spec, int cutoff) {
  auto component = [&](const SqueezeParam& s) {
    return displace_fock(squeezed_vacuum_fock(s, cutoff), spec.alpha);
  };
  FockVector out = component(spec.xi) * spec.chi;
  if (spec.eta != cd(0.0, 0.0)) out = out + component(spec.zeta) * spec.eta;
  check_tail(out, "build_janus_fock");
  return out;
}

FockVector build_janus_fock_auto(const JanusSpec& spec, int min_cutoff) {
  int n = std::max(min_cutoff, default_cutoff(spec));
  for (;;) {
    try {
      return build_janus_fock(spec, n);
    } catch (const CutoffTooSmall&) {
      if (n >= kMaxCutoff) throw;
      n = std::min(kMaxCutoff, static_cast<int>(std::ceil(1.5 * n)));
    }
  }
}

FockVector annihilate(const FockVector& v, int k) {
  std::vector<cd> out(v.amps().size());
  const int n_max = v.cutoff();
  for (int n = 0; n + k <= n_max; ++n) {
    double f = 1.0;
    for (int j = 1; j <= k; ++j) f *= std::sqrt(double(n + j));
    out[n] = f * v[n + k];
  }
  return FockVector(std::move(out));
}

cd overlap_fock(const FockVector& a, const FockVector& b) {
  require_same_cutoff(a, b);
  cd s{0.0, 0.0};
  for (int n = 0; n <= a.cutoff(); ++n) s += std::conj(a[n]) * b[n];
  return s;
}

cd cross_moment_fock(const FockVector& bra, const FockVector& ket, int k) {
  require_same_cutoff(bra, ket);
  return overlap_fock(annihilate(bra, k), annihilate(ket, k));
}

cd cross_wigner_fock(const FockVector& bra, const FockVector& ket, double q, double p) {
  require_same_cutoff(bra, ket);
  const int dim = ket.cutoff() + 1;
  const double x = 2.0 * (q * q + p * p);
  const double psi = std::atan2(p, q);
  cd total{0.0, 0.0};
  for (int d = 0; d < dim; ++d) {
    const auto k = laguerre_kernel(d, x, dim - d);
    cd lower{0.0, 0.0}, upper{0.0, 0.0};
    for (int n = 0; n + d < dim; ++n) {
      const double w = (n % 2 ? -1.0 : 1.0) * k[n];
      lower += w * ket[n + d] * std::conj(bra[n]);
      if (d > 0) upper += w * ket[n] * std::conj(bra[n + d]);
    }
    total += std::polar(1.0, -d * psi) * lower + std::polar(1.0, d * psi) * upper;
  }
  return total / kPi;
}

double wigner_fock(const FockVector& state, double q, double p) {
  return cross_wigner_fock(state, state, q, p).real();
}

double var_gsq_fock(const FockVector& state, double theta_g) {
  const int n_max = state.cutoff();
  std::vector<cd> g(static_cast<std::size_t>(n_max) + 3);
  const cd lower = 0.5 * std::polar(1.0, -theta_g);
  const cd upper = 0.5 * std::polar(1.0, theta_g);
  for (int n = 0; n <= n_max; ++n) {
    const cd a = state[n];
    if (n >= 2) g[n - 2] += lower * std::sqrt(double(n) * (n - 1)) * a;
    g[n + 2] += upper * std::sqrt((n + 1.0) * (n + 2.0)) * a;
  }
  double g2 = 0.0;
  cd mean{0.0, 0.0};
  for (std::size_t n = 0; n < g.size(); ++n) {
    g2 += std::norm(g[n]);
    if (n <= static_cast<std::size_t>(n_max)) mean += std::conj(state[static_cast<int>(n)]) * g[n];
  }
  const double nrm = state.norm_squared();
  const double m = mean.real() / nrm;
  return g2 / nrm - m * m;
}

}  // namespace janus::fock
