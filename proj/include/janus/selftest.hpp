#pragma once

#include <string>
#include <vector>

namespace janus {

struct SelftestLine {
  std::string name;
  double max_discrepancy = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Fixed-seed oracle-equivalence checks: series vs closed form, M_k vs the
/// Fock oracle, closed-form vs Laguerre-sum Wigner, and variance vs fidelity QFI.
std::vector<SelftestLine> run_selftest();

}  // namespace janus
