#pragma once

#include "janus/params.hpp"

#include <complex>

namespace janus {

inline constexpr int kDefaultOrderCap = 12;

/// ⟨ζ|ξ⟩ = 1/sqrt(cosh r cosh s - sinh r sinh s e^{i(θ-φ)}), principal root.
std::complex<double> m0(const SqueezeParam& xi, const SqueezeParam& zeta);

/// m0 - 1 without cancellation near ξ ≈ ζ or r, s → 0.
std::complex<double> m0_minus_one(const SqueezeParam& xi, const SqueezeParam& zeta);

/// M_k = ⟨ζ,α| a†^k a^k |ξ,α⟩ from the generalized squeezing functions.
/// Throws OrderTooLarge when k exceeds order_cap.
std::complex<double> matrix_element(int k, const SqueezeParam& xi, const SqueezeParam& zeta,
                                    const Displacement& alpha,
                                    int order_cap = kDefaultOrderCap);

// Explicit low-order transcriptions, kept as regression checks on matrix_element.
std::complex<double> m1_closed(const SqueezeParam& xi, const SqueezeParam& zeta,
                               const Displacement& alpha);
std::complex<double> m2_closed(const SqueezeParam& xi, const SqueezeParam& zeta,
                               const Displacement& alpha);
std::complex<double> m3_closed(const SqueezeParam& xi, const SqueezeParam& zeta,
                               const Displacement& alpha);

/// Explicit single-state factorial moments ⟨a†^k a^k⟩ for k = 3, 4.
double n3_closed(const SqueezeParam& xi, const Displacement& alpha);
double n4_closed(const SqueezeParam& xi, const Displacement& alpha);

struct MomentResult {
  std::complex<double> value;
  int k = 0;
  /// |Im(value)|, which must vanish for a real-valued moment.
  double branch_residual = 0.0;
};

/// Tolerance for real-valued moments: |Im| < 1e-9 max(1, |Re|).
inline constexpr double kBranchTolerance = 1e-9;

MomentResult single_moment_result(int k, const SqueezeParam& xi, const Displacement& alpha);

/// ⟨ξ,α| a†^k a^k |ξ,α⟩. For k = 3, 4 the value is also checked against the
/// explicit forms (ConsistencyError on mismatch).
double single_moment(int k, const SqueezeParam& xi, const Displacement& alpha);

/// Factorial moment of the superposition,
///   |χ|² N_k(ξ) + |η|² N_k(ζ) + 2 Re[χ η* M_k(ζ, ξ)].
/// The returned complex value keeps both cross terms so that its imaginary
/// part measures any Hermiticity/branch violation.
MomentResult janus_moment_result(int k, const JanusSpec& spec);
double janus_moment(int k, const JanusSpec& spec);

/// g^(k)(0) = N_k / N_1^k. Throws VacuumState when N_1 < 1e-12.
double gk(int k, const JanusSpec& spec);

/// ⟨Ψ|Ψ⟩ - 1.
double norm_deficit(const JanusSpec& spec);

/// Small-r expansions of the antisymmetric family to O(r^4), a = |α|.
inline constexpr double kExpansionValidity = 0.3;
double antisym_g2_expansion(double a, double r);
double antisym_g3_expansion(double a, double r);

/// Normalized antisymmetric-phase state: χ = ratio, η = -1, r = s,
/// θ = 0, φ = π, shared displacement α.
JanusSpec antisymmetric_spec(double r, std::complex<double> alpha = {}, double ratio = 1.0);

/// Rational expression in x = sinh² r for the amplitude-optimized undisplaced state.
double optimized_g2_formula(double r);

struct OptimizedG2 {
  double g2 = 0.0;            // the rational formula
  double ratio = 0.0;         // |χ|/|η| minimizing g^(2) in the antisymmetric family
  double g2_minimized = 0.0;  // g^(2) at that ratio
};

OptimizedG2 optimized_g2_undisplaced(double r);

}  // namespace janus
