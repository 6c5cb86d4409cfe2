#pragma once

#include "janus/exec.hpp"
#include "janus/params.hpp"

#include <optional>
#include <string>
#include <vector>

namespace janus {

enum class ScanParam { r, s, theta, phi, alpha_mag, alpha_phase, weight_ratio };

std::string to_string(ScanParam p);
ScanParam parse_scan_param(const std::string& name);

struct ScanAxis {
  ScanParam param = ScanParam::r;
  double start = 0.0;
  double stop = 1.0;
  int count = 2;

  double at(int i) const;
};

/// "name:start:stop:count", count ≥ 2.
ScanAxis parse_axis(const std::string& text);

enum class QuantityKind { gk, moment, wigner_min, qfi_dphase, qfi_sangle, var_gsq, optimized_g2 };

struct Quantity {
  QuantityKind kind = QuantityKind::gk;
  int k = 2;  // gk and moment only
};

/// "gk:K", "moment:K", "wigner_min", "qfi_dphase", "qfi_sangle", "var_gsq", "optimized_g2".
Quantity parse_quantity(const std::string& text);
std::string to_string(const Quantity& q);
std::vector<std::string> value_columns(const Quantity& q);

struct ScanSpec {
  JanusSpec base;
  ScanAxis axis1;
  std::optional<ScanAxis> axis2;
  Quantity quantity;
};

/// Validates counts and distinct axes; throws std::invalid_argument.
void validate(const ScanSpec& spec);

/// Base spec with one parameter replaced; weights are not renormalized.
JanusSpec apply_param(const JanusSpec& base, ScanParam p, double value);

/// Quantity values at one (normalized) spec.
std::vector<double> evaluate_quantity(const JanusSpec& spec, const Quantity& q);

struct ScanTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  // axis1 outer, axis2 inner
  int failures = 0;
  std::vector<std::string> failure_kinds;  // one per failed cell, row order
};

/// Cells that throw yield NaN in every value column and count as failures.
ScanTable scan(const ScanSpec& spec, Exec exec = Exec::parallel);

/// Header row, data rows, then "# failures=N".
std::string to_csv(const ScanTable& table);

}  // namespace janus
