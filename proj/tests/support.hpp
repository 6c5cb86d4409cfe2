#pragma once

#include "janus/fock.hpp"
#include "janus/params.hpp"
#include "janus/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>

namespace janus::test {

inline double rel_err(std::complex<double> got, std::complex<double> want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

// Both displaced squeezed components at a shared cutoff with 50% headroom.
inline std::pair<fock::FockVector, fock::FockVector> oracle_components(const JanusSpec& s, int min_cutoff = 0) {
  const int n = fock::build_janus_fock_auto(s, min_cutoff).cutoff() * 3 / 2;
  return {fock::displace_fock(fock::squeezed_vacuum_fock(s.xi, n), s.alpha),
          fock::displace_fock(fock::squeezed_vacuum_fock(s.zeta, n), s.alpha)};
}

}  // namespace janus::test
