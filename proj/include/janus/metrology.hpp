#pragma once

#include "janus/params.hpp"

#include <string_view>

namespace janus {

enum class QfiMethod { variance_formula, expansion, fidelity_numeric };
enum class QfiParameter { displacement_phase, squeezing_angle, squeezing_generator };

std::string_view to_string(QfiMethod m);
std::string_view to_string(QfiParameter p);

struct QfiResult {
  double value = 0.0;
  QfiMethod method = QfiMethod::variance_formula;
  QfiParameter parameter = QfiParameter::displacement_phase;
  /// Fidelity method only: |Richardson value − finer-step value|.
  double sensitivity = 0.0;
};

/// N₂ + N₁ − N₁².
double var_n(const JanusSpec& spec);

/// 4 Var(n̂).
QfiResult qfi_displacement_phase(const JanusSpec& spec);

/// 16 |c₃/c₁|² r⁴ = 10 r⁴, leading order for the antisymmetric family.
double qfi_squeezing_angle_leading(double r);
inline constexpr double kLeadingOrderValidity = 0.3;

/// Pure-state QFI from the fidelity between Ψ(−h/2) and Ψ(h/2), built in
/// the Fock oracle, with Richardson extrapolation over h = dλ and dλ/2.
///   displacement_phase: α → αe^{iλ}, θ → θ+2λ, φ → φ+2λ  (= e^{iλn̂})
///   squeezing_angle:    θ → θ+λ, φ → φ+λ, weights renormalized
/// Requires dλ ∈ [1e-5, 1e-2]; throws StepTooSmall when the fidelity
/// deficit drops below 1e-13.
QfiResult qfi_fidelity_numeric(const JanusSpec& spec, QfiParameter parameter, double dl = 1e-3);

/// Var(½(e^{−iθ_g} a² + e^{iθ_g} a†²)) in the Fock oracle.
double var_gsq(const JanusSpec& spec, double theta_g);

/// 4 var_gsq.
QfiResult qfi_squeezing_generator(const JanusSpec& spec, double theta_g);

}  // namespace janus
