#include "janus/gsp.hpp"

#include "janus/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace janus::gsp {

namespace {

using Coeffs = std::vector<Rational>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

// (c1 z + c0) * P
Coeffs mul_linear(const Coeffs& P, const Rational& c0, const Rational& c1) {
  if (P.empty()) return {};
  Coeffs out(P.size() + 1);
  for (std::size_t i = 0; i < P.size(); ++i) {
    out[i] += c0 * P[i];
    out[i + 1] += c1 * P[i];
  }
  trim(out);
  return out;
}

// 2z(1-z) P'
Coeffs twice_z_one_minus_z_derivative(const Coeffs& P) {
  if (P.size() < 2) return {};
  Coeffs out(P.size() + 1);
  for (std::size_t i = 1; i < P.size(); ++i) {
    Rational d = P[i] * static_cast<long>(i);  // coefficient of z^{i-1} in P'
    out[i] += 2 * d;
    out[i + 1] -= 2 * d;
  }
  trim(out);
  return out;
}

bool same_parity(int p, int q) { return ((p - q) % 2) == 0; }

void check_indices(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("gsp: negative index");
}

}  // namespace

PolyZ::PolyZ(int p, int q, std::vector<Rational> coeffs)
    : p_(p), q_(q), coeffs_(std::move(coeffs)) {
  trim(coeffs_);
  approx_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) approx_.push_back(static_cast<double>(c));
}

int PolyZ::lowest_order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return -1;
}

std::complex<double> PolyZ::operator()(std::complex<double> z) const {
  std::complex<double> acc{0.0, 0.0};
  for (auto it = approx_.rbegin(); it != approx_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::string PolyZ::coeff_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ';';
    os << coeffs_[i];
  }
  return os.str();
}

std::string PolyZ::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const auto& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << 'z';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

Coeffs step_diagonal(const Coeffs& P, int p, int q) {
  // P_{p+1,q+1} = ((2p+q+1) z - p) P + 2z(1-z) P'
  return add(mul_linear(P, Rational(-p), Rational(2 * p + q + 1)),
             twice_z_one_minus_z_derivative(P));
}

Coeffs step_column(const Coeffs& P, int p, int q) {
  // P_{p,q+2} = (2p z - p + q + 1) P + 2z(1-z) P'
  return add(mul_linear(P, Rational(q - p + 1), Rational(2 * p)),
             twice_z_one_minus_z_derivative(P));
}

PolyTable::PolyTable(int cap) : cap_(cap) {
  if (cap < 0) throw std::invalid_argument("PolyTable: negative cap");
  // Row p is needed up to column width - p so that the p-step can reach
  // column cap on row cap.
  const int width = 2 * cap + 1;
  rows_.resize(static_cast<std::size_t>(cap) + 1);

  auto& row0 = rows_[0];
  row0.resize(static_cast<std::size_t>(width) + 1);
  Coeffs current{Rational(1)};
  for (int q = 0; q <= width; ++q) {
    if (q % 2 == 0) {
      row0[q] = PolyZ(0, q, current);
      current = step_column(current, 0, q);
    } else {
      row0[q] = PolyZ(0, q, {});
    }
  }
  if (cap == 0) return;

  auto& row1 = rows_[1];
  row1.resize(static_cast<std::size_t>(width));
  row1[0] = PolyZ(1, 0, {});
  for (int q = 1; q < width; ++q)
    row1[q] = PolyZ(1, q, step_diagonal(row0[q - 1].coeffs(), 0, q - 1));

  for (int p = 2; p <= cap; ++p) {
    const auto& prev = rows_[p - 1];
    auto& row = rows_[p];
    const int row_width = width - p;
    row.resize(static_cast<std::size_t>(row_width) + 1);
    for (int q = 0; q <= row_width; ++q) {
      if (!same_parity(p, q)) {
        row[q] = PolyZ(p, q, {});
        continue;
      }
      // P_{p,q} = P_{p-1,q+1} + q (z - 1) P_{p-1,q-1}
      Coeffs c = prev[q + 1].coeffs();
      if (q >= 1)
        c = add(c, mul_linear(prev[q - 1].coeffs(), Rational(-q), Rational(q)));
      row[q] = PolyZ(p, q, std::move(c));
    }
  }
}

const PolyZ& PolyTable::at(int p, int q) const {
  if (!covers(p, q)) throw std::out_of_range("PolyTable: index above cap");
  return rows_[p][q];
}

namespace {

struct SharedTables {
  std::shared_mutex mutex;
  // Superseded tables stay alive so returned references never dangle.
  std::vector<std::unique_ptr<const PolyTable>> tables;
};

SharedTables& shared_tables() {
  static SharedTables s;
  return s;
}

const PolyTable& table_covering(int cap) {
  auto& s = shared_tables();
  {
    std::shared_lock lock(s.mutex);
    if (!s.tables.empty() && s.tables.back()->cap() >= cap) return *s.tables.back();
  }
  std::unique_lock lock(s.mutex);
  if (s.tables.empty() || s.tables.back()->cap() < cap)
    s.tables.push_back(std::make_unique<const PolyTable>(std::max(cap, kDefaultPolyCap)));
  return *s.tables.back();
}

}  // namespace

const PolyZ& poly(int p, int q) {
  check_indices(p, q);
  return table_covering(std::max(p, q)).at(p, q);
}

void reserve_poly_table(int cap) { (void)table_covering(cap); }

PolyZ poly_rec12(int p, int q) {
  check_indices(p, q);
  if (q < p) throw std::invalid_argument("poly_rec12 requires q >= p");
  if (!same_parity(p, q)) return PolyZ(p, q, {});
  // Walk (0,0) -> (0, q-p) by column steps, then p diagonal steps.
  Coeffs c{Rational(1)};
  for (int j = 0; j < q - p; j += 2) c = step_column(c, 0, j);
  for (int i = 0; i < p; ++i) c = step_diagonal(c, i, q - p + i);
  return PolyZ(p, q, std::move(c));
}

std::complex<double> f_series(int p, int q, std::complex<double> z,
                              const SeriesControl& ctl) {
  using Big = boost::multiprecision::cpp_bin_float_50;
  check_indices(p, q);
  if (ctl.tol <= 0.0 || ctl.max_terms < 1)
    throw std::invalid_argument("SeriesControl: tol > 0 and max_terms >= 1 required");
  if (std::abs(z) >= 1.0) throw std::domain_error("f_series requires |z| < 1");
  if (!same_parity(p, q)) return {0.0, 0.0};

  const long n_min = std::max<long>((p + 1) / 2, (p - q) / 2);

  // c_n = (2n)!/(2n-p)! * (2n+q-p-1)!!/(2n)!!
  Big coef = 1;
  for (long j = 2 * n_min - p + 1; j <= 2 * n_min; ++j) coef *= j;
  for (long j = 2 * n_min + q - p - 1; j >= 1; j -= 2) coef *= j;
  for (long j = 2 * n_min; j >= 2; j -= 2) coef /= j;

  const Big zr = z.real(), zi = z.imag();
  Big wr = 1, wi = 0;  // z^n
  for (long j = 0; j < n_min; ++j) {
    Big t = wr * zr - wi * zi;
    wi = wr * zi + wi * zr;
    wr = t;
  }

  Big sum_r = 0, sum_i = 0;
  int small = 0;
  for (long n = n_min, used = 0; used < ctl.max_terms; ++n, ++used) {
    Big tr = coef * wr, ti = coef * wi;
    sum_r += tr;
    sum_i += ti;
    const double mag = std::hypot(static_cast<double>(tr), static_cast<double>(ti));
    small = mag < ctl.tol ? small + 1 : 0;
    if (small == 3) return {static_cast<double>(sum_r), static_cast<double>(sum_i)};

    coef *= Big((2 * n + 1) * (2 * n + q - p + 1));
    coef /= Big((2 * n + 2 - p) * (2 * n + 1 - p));
    Big t = wr * zr - wi * zi;
    wi = wr * zi + wi * zr;
    wr = t;
  }
  throw NoConvergence("f_series: max_terms reached for |z| = " + std::to_string(std::abs(z)));
}

std::complex<double> f_closed(int p, int q, std::complex<double> z) {
  check_indices(p, q);
  if (z == std::complex<double>(1.0, 0.0)) throw std::domain_error("f_closed: z = 1");
  if (!same_parity(p, q)) return {0.0, 0.0};
  const double half_power = 0.5 * (p + q + 1);
  return poly(p, q)(z) * std::exp(-half_power * std::log(1.0 - z));
}

namespace {

// z^k P for k ≥ 0, or P / z^{-k} for k < 0 (exact; throws if not divisible).
Coeffs shift(const Coeffs& P, int k) {
  if (P.empty()) return {};
  if (k >= 0) {
    Coeffs out(static_cast<std::size_t>(k), Rational(0));
    out.insert(out.end(), P.begin(), P.end());
    return out;
  }
  const auto drop = static_cast<std::size_t>(-k);
  for (std::size_t i = 0; i < std::min(drop, P.size()); ++i)
    if (P[i] != 0) throw std::domain_error("symmetry shift discards a nonzero term");
  if (drop >= P.size()) return {};
  return Coeffs(P.begin() + static_cast<long>(drop), P.end());
}

}  // namespace

PolyZ symmetry_residual(int p, int q) {
  check_indices(p, q);
  if (!same_parity(p, q)) throw std::invalid_argument("symmetry requires p ≡ q (mod 2)");
  Coeffs rhs = shift(poly(q, p).coeffs(), (p - q) / 2);
  Coeffs neg(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) neg[i] = -rhs[i];
  return PolyZ(p, q, add(poly(p, q).coeffs(), neg));
}

double check_symmetry(int p, int q, std::complex<double> z) {
  check_indices(p, q);
  if (!same_parity(p, q)) throw std::invalid_argument("symmetry requires p ≡ q (mod 2)");
  const int k = (p - q) / 2;
  const std::complex<double> lhs = poly(p, q)(z);
  std::complex<double> rhs;
  if (k >= 0) {
    rhs = std::pow(z, k) * poly(q, p)(z);
  } else if (z != std::complex<double>(0.0, 0.0)) {
    rhs = poly(q, p)(z) / std::pow(z, -k);
  } else {
    rhs = PolyZ(p, q, shift(poly(q, p).coeffs(), k))(z);
  }
  return std::abs(lhs - rhs);
}

}  // namespace janus::gsp
