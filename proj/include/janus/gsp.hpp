#pragma once

// Generalized squeezing functions F_{p,q}(z) and their polynomial numerators
// P_{p,q}(z) = F_{p,q}(z) (1-z)^{(p+q+1)/2}.

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>
#include <vector>

namespace janus::gsp {

using Rational = boost::multiprecision::cpp_rational;

/// Exact polynomial in z with rational coefficients in ascending powers.
/// The zero polynomial has no coefficients.
class PolyZ {
 public:
  PolyZ() = default;
  PolyZ(int p, int q, std::vector<Rational> coeffs);

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Power of the first nonzero coefficient; -1 for the zero polynomial.
  int lowest_order() const;

  std::complex<double> operator()(std::complex<double> z) const;

  /// "c0;c1;..." with exact decimal (or n/d) coefficients.
  std::string coeff_string() const;

  /// Human-readable, highest power first, e.g. "2z^2 + z".
  std::string to_string() const;

  friend bool operator==(const PolyZ& a, const PolyZ& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  int p_ = 0;
  int q_ = 0;
  std::vector<Rational> coeffs_;
  std::vector<double> approx_;
};

inline constexpr int kDefaultPolyCap = 16;

/// Immutable table of P_{p,q} for 0 ≤ p,q ≤ cap, built from P_{0,0} = 1:
/// row 0 by the q-step recurrence, row 1 by the diagonal step, and every
/// later row by the three-term p-step recurrence.
class PolyTable {
 public:
  explicit PolyTable(int cap);

  int cap() const noexcept { return cap_; }
  bool covers(int p, int q) const noexcept {
    return p >= 0 && q >= 0 && p <= cap_ && q <= cap_;
  }
  const PolyZ& at(int p, int q) const;

 private:
  int cap_;
  std::vector<std::vector<PolyZ>> rows_;
};

/// Memoized P_{p,q}. Safe for concurrent callers; the table grows under a
/// lock if an index above the current cap is requested.
const PolyZ& poly(int p, int q);

/// Pre-builds the shared table up to `cap` (no-op if already covered).
void reserve_poly_table(int cap);

/// Builds P_{p,q} for q ≥ p using only the diagonal (p+1,q+1) and column
/// (p,q+2) recurrences. Independent of the table's p-step route.
PolyZ poly_rec12(int p, int q);

/// One application of each recurrence on exact coefficients.
std::vector<Rational> step_diagonal(const std::vector<Rational>& P, int p, int q);
std::vector<Rational> step_column(const std::vector<Rational>& P, int p, int q);

struct SeriesControl {
  double tol = 1e-20;
  long max_terms = 200000;
};

/// Direct summation of the defining series from n_min = max(⌈p/2⌉, (p-q)/2).
/// Accumulates in 50-digit floating point. Requires |z| < 1.
/// Throws NoConvergence when max_terms is exhausted.
std::complex<double> f_series(int p, int q, std::complex<double> z,
                              const SeriesControl& ctl = {});

/// P_{p,q}(z) / (1-z)^{(p+q+1)/2}, principal branch.
std::complex<double> f_closed(int p, int q, std::complex<double> z);

/// |P_{p,q}(z) - z^{(p-q)/2} P_{q,p}(z)| in floating point.
double check_symmetry(int p, int q, std::complex<double> z);

/// P_{p,q} - z^{(p-q)/2} P_{q,p} in exact arithmetic (the zero polynomial
/// when the symmetry holds). Throws std::domain_error when the shift would
/// discard a nonzero coefficient.
PolyZ symmetry_residual(int p, int q);

}  // namespace janus::gsp
