#pragma once

// Truncated Fock-space oracle. Everything here is brute force and shares no
// code with the closed forms in moments/wigner.

#include "janus/exec.hpp"
#include "janus/params.hpp"

#include <complex>
#include <vector>

namespace janus::fock {

using cd = std::complex<double>;

class FockVector {
 public:
  FockVector() = default;
  explicit FockVector(std::vector<cd> amps);
  static FockVector zeros(int cutoff);

  int cutoff() const noexcept { return static_cast<int>(amps_.size()) - 1; }
  const std::vector<cd>& amps() const noexcept { return amps_; }
  cd operator[](int n) const { return amps_[static_cast<std::size_t>(n)]; }

  double norm_squared() const;
  /// Mass in the boundary band n > max(cutoff - 20, cutoff / 2).
  double tail_mass() const;

  FockVector operator*(cd w) const;
  FockVector operator+(const FockVector& o) const;

 private:
  std::vector<cd> amps_;
};

/// Tail mass allowed relative to the vector's norm.
inline constexpr double kTailThreshold = 1e-12;
inline constexpr int kMaxCutoff = 1000;

/// S(ξ)|0⟩ with even amplitudes (cosh r)^{-1/2} (e^{iθ} tanh r)^m √((2m)!)/(2^m m!).
FockVector squeezed_vacuum_fock(const SqueezeParam& xi, int cutoff);

/// e^{-|α|²/2} αⁿ/√(n!).
FockVector coherent_fock(const Displacement& alpha, int cutoff);

/// √(n!/(n+d)!) x^{d/2} e^{-x/2} L_n^{(d)}(x) for n = 0..count-1.
std::vector<double> laguerre_kernel(int d, double x, int count);

/// Row-major (cutoff+1)² matrix ⟨m|D(α)|n⟩.
std::vector<cd> displacement_matrix(const Displacement& alpha, int cutoff);

/// D(α)|v⟩ truncated to the same cutoff. Throws CutoffTooSmall when the
/// result leaks mass into the boundary band.
FockVector displace_fock(const FockVector& v, const Displacement& alpha,
                         Exec exec = Exec::parallel);

/// max(60, ceil(8(|α|² + sinh² r_max) + 40)), or JANUS_CUTOFF when set.
int default_cutoff(const JanusSpec& spec);

/// χ D(α)S(ξ)|0⟩ + η D(α)S(ζ)|0⟩ at a fixed cutoff.
FockVector build_janus_fock(const JanusSpec& spec, int cutoff);

/// Starts at max(min_cutoff, default_cutoff) and grows by 50% until the
/// tail invariant holds (up to kMaxCutoff).
FockVector build_janus_fock_auto(const JanusSpec& spec, int min_cutoff = 0);

/// aᵏ|v⟩.
FockVector annihilate(const FockVector& v, int k);

/// Σ conj(a_n) b_n.
cd overlap_fock(const FockVector& a, const FockVector& b);

/// ⟨bra| a†ᵏ aᵏ |ket⟩.
cd cross_moment_fock(const FockVector& bra, const FockVector& ket, int k);

/// Wigner function of |ket⟩⟨bra| at (q, p), dq dp measure, β = (q+ip)/√2.
cd cross_wigner_fock(const FockVector& bra, const FockVector& ket, double q, double p);

double wigner_fock(const FockVector& state, double q, double p);

/// Variance of ½(e^{-iθ_g} a² + e^{iθ_g} a†²).
double var_gsq_fock(const FockVector& state, double theta_g);

}  // namespace janus::fock
