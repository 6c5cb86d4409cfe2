// Acceptance report: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include "janus/cli.hpp"
#include "janus/fock.hpp"
#include "janus/gsp.hpp"
#include "janus/metrology.hpp"
#include "janus/moments.hpp"
#include "janus/sampling.hpp"
#include "janus/wigner.hpp"


#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace janus;

namespace {

constexpr double kSeriesTol = 1e-10;
constexpr double kOracleTol = 1e-8;
constexpr double kExplicitTol = 1e-12;
constexpr double kLimitTol = 1e-12;
constexpr double kR2CoeffTol = 0.01;
constexpr double kOptimizedTol = 1e-8;
constexpr double kSinhCoeffTol = 0.01;
constexpr double kWignerNormTol = 1e-6;
constexpr double kWignerOracleTol = 1e-6;
constexpr double kWignerMinBound = -0.10;
constexpr double kQfiAbsTol = 0.1;
constexpr double kQfiSqlTol = 1e-10;
constexpr double kQfiCrossTol = 1e-3;
constexpr double kSlopeTol = 0.2;
constexpr double kPrefactorTol = 2.0;
constexpr double kTableSeconds = 1.0;
constexpr double kOracleSeconds = 120.0;
constexpr double kQfiSeconds = 180.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double a = 0, double b = 0, double c = 0, double d = 0) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const std::function<Outcome()>& check) {
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::printf("%s %02d %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::vector<gsp::Rational> ints(std::initializer_list<int> v) {
  std::vector<gsp::Rational> out;
  for (int c : v) out.emplace_back(c);
  return out;
}


std::vector<JanusSpec> draws_100() {
  std::mt19937_64 rng(1000);
  std::vector<JanusSpec> out;
  for (int i = 0; i < 100; ++i) out.push_back(random_spec(rng, {1.5, 2.0}));
  return out;
}

double rel(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

// Least-squares coefficients of y on the given powers of x. The abscissae are
// scaled to [0, 1] before forming the normal equations.
std::vector<double> polyfit(const std::vector<double>& x, const std::vector<double>& y,
                            const std::vector<int>& powers) {
  const double scale = *std::max_element(x.begin(), x.end(), [](double a, double b) {
    return std::abs(a) < std::abs(b);
  });
  const std::size_t m = powers.size();
  std::vector<std::vector<double>> A(m, std::vector<double>(m + 1, 0.0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = x[i] / scale;
    for (std::size_t j = 0; j < m; ++j) {
      A[j][m] += std::pow(t, powers[j]) * y[i];
      for (std::size_t k = 0; k < m; ++k) A[j][k] += std::pow(t, powers[j] + powers[k]);
    }
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    for (std::size_t row = col + 1; row < m; ++row)
      if (std::abs(A[row][col]) > std::abs(A[piv][col])) piv = row;
    std::swap(A[col], A[piv]);
    for (std::size_t row = col + 1; row < m; ++row) {
      const double f = A[row][col] / A[col][col];
      for (std::size_t k = col; k <= m; ++k) A[row][k] -= f * A[col][k];
    }
  }
  std::vector<double> c(m);
  for (std::size_t j = m; j-- > 0;) {
    double acc = A[j][m];
    for (std::size_t k = j + 1; k < m; ++k) acc -= A[j][k] * c[k];
    c[j] = acc / A[j][j];
  }
  for (std::size_t j = 0; j < m; ++j) c[j] /= std::pow(scale, powers[j]);
  return c;
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

}  // namespace

int main() {
  const std::vector<JanusSpec> draws = draws_100();

  report(1, "table_one", [] {
    const auto t0 = Clock::now();
    const std::map<std::pair<int, int>, std::vector<gsp::Rational>> expect = {
        {{0, 0}, ints({1})},          {{0, 2}, ints({1})},
        {{0, 4}, ints({3})},          {{1, 1}, ints({0, 1})},
        {{1, 3}, ints({0, 3})},       {{1, 5}, ints({0, 15})},
        {{2, 0}, ints({0, 1})},       {{2, 2}, ints({0, 1, 2})},
        {{2, 4}, ints({0, 3, 12})},   {{3, 1}, ints({0, 0, 3})},
        {{3, 3}, ints({0, 0, 9, 6})}, {{3, 5}, ints({0, 0, 45, 60})},
        {{4, 0}, ints({0, 0, 3})},    {{4, 2}, ints({0, 0, 3, 12})},
        {{4, 4}, ints({0, 0, 9, 72, 24})}, {{5, 1}, ints({0, 0, 0, 15})},
        {{5, 3}, ints({0, 0, 0, 45, 60})}, {{5, 5}, ints({0, 0, 0, 225, 600, 120})}};
    const gsp::PolyTable table(5);
    int matched = 0;
    for (const auto& [pq, c] : expect) matched += table.at(pq.first, pq.second).coeffs() == c;
    const double dt = seconds_since(t0);
    return Outcome{matched == 18 && dt < kTableSeconds,
                   fmt("%.0f/18 entries exact, %.3f s (limit %.0f s)", matched, dt, kTableSeconds)};
  });

  report(2, "symmetry_theorem", [] {
    int checked = 0, zero = 0;
    for (int p = 0; p <= 10; ++p)
      for (int q = p % 2; q <= 10; q += 2, ++checked) zero += gsp::symmetry_residual(p, q).is_zero();
    return Outcome{zero == checked, fmt("%.0f/%.0f same-parity pairs p,q <= 10 with exact zero residual", zero, checked)};
  });

  report(3, "recurrence_path_independence", [] {
    int checked = 0, equal = 0;
    for (int p = 0; p <= 10; ++p)
      for (int q = p % 2; q <= 10; q += 2, ++checked) {
        if (q >= p) {
          equal += gsp::poly_rec12(p, q) == gsp::poly(p, q);
        } else {
          std::vector<gsp::Rational> shifted((p - q) / 2, gsp::Rational(0));
          const auto low = gsp::poly_rec12(q, p).coeffs();
          shifted.insert(shifted.end(), low.begin(), low.end());
          equal += gsp::poly(p, q).coeffs() == shifted;
        }
      }
    return Outcome{equal == checked, fmt("%.0f/%.0f entries: p-step table equals diagonal/column route", equal, checked)};
  });

  report(4, "series_vs_closed_form", [] {
    std::mt19937_64 rng(404);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const int p = static_cast<int>(uniform01(rng) * 9);
      int q = static_cast<int>(uniform01(rng) * 9);
      if ((p + q) % 2) q = q == 8 ? 7 : q + 1;
      const auto z = std::polar(uniform(rng, 0.0, 0.9), uniform(rng, 0.0, kTwoPi));
      worst = std::max(worst, rel(gsp::f_series(p, q, z), gsp::f_closed(p, q, z)));
    }
    return Outcome{worst < kSeriesTol, fmt("200 draws, max |diff|/max(1,|F|) = %.3g (tol %.0e)", worst, kSeriesTol)};
  });

  report(5, "oracle_equivalence", [&] {
    const auto t0 = Clock::now();
    double worst = 0.0;
    int max_cutoff = 0;
    for (const JanusSpec& s : draws) {
      const int n = fock::build_janus_fock_auto(s, 200).cutoff() * 3 / 2;
      max_cutoff = std::max(max_cutoff, n);
      const auto kx = fock::displace_fock(fock::squeezed_vacuum_fock(s.xi, n), s.alpha);
      const auto kz = fock::displace_fock(fock::squeezed_vacuum_fock(s.zeta, n), s.alpha);
      for (int k = 0; k <= 4; ++k)
        worst = std::max(worst, rel(matrix_element(k, s.xi, s.zeta, s.alpha), fock::cross_moment_fock(kz, kx, k)));
    }
    const double dt = seconds_since(t0);
    return Outcome{worst < kOracleTol && dt < kOracleSeconds,
                   fmt("100 draws x k<=4, max rel err %.3g (tol %.0e), cutoff <= %.0f, %.1f s", worst, kOracleTol,
                       max_cutoff, dt)};
  });

  report(6, "explicit_formula_regression", [&] {
    double worst = 0.0;
    for (const JanusSpec& s : draws) {
      worst = std::max(worst, rel(m1_closed(s.xi, s.zeta, s.alpha), matrix_element(1, s.xi, s.zeta, s.alpha)));
      worst = std::max(worst, rel(m2_closed(s.xi, s.zeta, s.alpha), matrix_element(2, s.xi, s.zeta, s.alpha)));
      worst = std::max(worst, rel(m3_closed(s.xi, s.zeta, s.alpha), matrix_element(3, s.xi, s.zeta, s.alpha)));
    }
    return Outcome{worst < kExplicitTol, fmt("M1/M2/M3 on 100 draws, max rel err %.3g (tol %.0e)", worst, kExplicitTol)};
  });

  report(7, "known_limits", [] {
    double coh = 0.0, vac = 0.0, n4 = 0.0;
    for (int i = 1; i <= 20; ++i) {
      JanusSpec c;
      c.alpha = Displacement::from_polar(0.15 * i, 0.3 * i);
      coh = std::max(coh, std::abs(gk(2, c) - 1.0));
      const double r = 0.075 * i;
      JanusSpec v;
      v.xi = {r, 0.2 * i};
      const double sh2 = std::pow(std::sinh(r), 2);
      vac = std::max(vac, std::abs(gk(2, v) - (3.0 + 1.0 / sh2)) / (3.0 + 1.0 / sh2));
      const double block = 105 * std::pow(sh2, 4) + 90 * std::pow(sh2, 3) + 9 * sh2 * sh2;
      n4 = std::max(n4, std::abs(single_moment(4, v.xi, {}) - block) / std::max(1.0, block));
    }
    const double worst = std::max({coh, vac, n4});
    return Outcome{worst < kLimitTol,
                   fmt("g2(r=0)-1: %.2g, g2(alpha=0) vs 3+1/sinh^2: %.2g, N4 block: %.2g (tol %.0e, 20 values each)",
                       coh, vac, n4, kLimitTol)};
  });

  report(8, "antisymmetric_limit", [] {
    bool ok = true;
    std::string detail;
    for (double r : {0.01, 0.02, 0.05}) {
      const double dev = std::abs(gk(2, antisymmetric_spec(r)) - (0.5 + 25.0 / 8.0 * std::pow(r, 4)));
      const double tol = 5.0 * std::pow(r, 6);
      ok = ok && dev < tol;
      detail += fmt("r=%.2f dev %.2g/tol %.2g; ", r, dev, tol);
    }
    const double g3 = gk(3, antisymmetric_spec(0.01));
    ok = ok && g3 < 1e-3;
    detail += fmt("g3(0.01)=%.2g; ", g3);
    const double a = 1.0, r = 0.02;
    const double lead = (std::pow(a, 4) + 8 * a * a + 2) / std::pow(a * a + 2, 2);
    const double c4 = 5 * (2 * std::pow(a, 4) - a * a + 10) / (2 * std::pow(a * a + 2, 3));
    const double dev = std::abs(gk(2, antisymmetric_spec(r, a)) - lead);
    ok = ok && dev < 5 * std::pow(r, 4) * c4;
    detail += fmt("|a|=1 r=0.02 dev %.2g/tol %.2g", dev, 5 * std::pow(r, 4) * c4);
    return Outcome{ok, detail};
  });

  report(9, "r2_cancellation", [] {
    std::vector<double> rs, gs;
    for (int i = 0; i < 19; ++i) {
      const double r = 0.005 + 0.0025 * i;
      rs.push_back(r);
      gs.push_back(gk(2, antisymmetric_spec(r)));
    }
    const std::vector<double> c = polyfit(rs, gs, {0, 2, 4, 6});
    return Outcome{std::abs(c[1]) < kR2CoeffTol,
                   fmt("fit over r in [0.005,0.05]: c0=%.6f c2=%.3g c4=%.4f (|c2| tol %.2f)", c[0], c[1], c[2],
                       kR2CoeffTol)};
  });

  report(10, "optimized_g2", [] {
    double worst = 0.0, worst_r = 0.0, formula_at = 0.0, found_at = 0.0, ratio_at = 0.0;
    for (int i = 0; i < 10; ++i) {
      const double r = 0.05 + (1.0 - 0.05) * i / 9.0;
      const OptimizedG2 o = optimized_g2_undisplaced(r);
      const double dev = std::abs(o.g2_minimized - o.g2);
      if (dev > worst) {
        worst = dev;
        worst_r = r;
        formula_at = o.g2;
        found_at = o.g2_minimized;
        ratio_at = o.ratio;
      }
    }
    std::vector<double> xs, fs, ms;
    for (int i = 1; i <= 12; ++i) {
      const double x = 0.001 * i;
      const double r = std::asinh(std::sqrt(x));
      xs.push_back(x);
      fs.push_back(optimized_g2_formula(r));
      ms.push_back(optimized_g2_undisplaced(r).g2_minimized);
    }
    const double c_formula = polyfit(xs, fs, {0, 1, 2, 3})[1];
    const double c_min = polyfit(xs, ms, {0, 1, 2, 3})[1];
    const bool reproduce = worst < kOptimizedTol;
    const bool coeff = std::abs(c_formula - 0.75) < kSinhCoeffTol;
    return Outcome{reproduce && coeff,
                   fmt("minimization vs formula max dev %.3g at r=%.2f (formula %.6f, minimum %.6f", worst, worst_r,
                       formula_at, found_at) +
                       fmt(" at ratio %.4f; tol %.0e); sinh^2 coefficient by fit: formula %.4f, ", ratio_at,
                           kOptimizedTol, c_formula) +
                       fmt("minimized curve %.4f (target 0.75 +/- %.2f)", c_min, kSinhCoeffTol)};
  });

  report(11, "wigner", [] {
    std::mt19937_64 rng(1111);
    double single_norm = 0.0, single_min = 1.0;
    for (int i = 0; i < 5; ++i) {
      JanusSpec s;
      s.xi = {uniform(rng, 0, 1.2), uniform(rng, 0, kTwoPi)};
      s.alpha = Displacement::from_polar(uniform(rng, 0, 1.5), uniform(rng, 0, kTwoPi));
      const GridExtents e = default_extents(s);
      const WignerGrid g = wigner_grid(s, e, default_step(e));
      single_norm = std::max(single_norm, std::abs(g.integral - 1.0));
      single_min = std::min(single_min, g.min_value);
    }
    double cross = 0.0;
    for (int i = 0; i < 5; ++i) {
      const SqueezeParam x(uniform(rng, 0, 1.2), uniform(rng, 0, kTwoPi));
      const SqueezeParam z(uniform(rng, 0, 1.2), uniform(rng, 0, kTwoPi));
      const Displacement a = Displacement::from_polar(uniform(rng, 0, 1.5), uniform(rng, 0, kTwoPi));
      JanusSpec pair;
      pair.eta = 1.0;
      pair.xi = x;
      pair.zeta = z;
      pair.alpha = a;
      const GridExtents e = default_extents(pair);
      cross = std::max(cross, std::abs(cross_wigner_integral(x, z, a, e, default_step(e)) - m0(x, z)));
    }
    const JanusSpec anti = antisymmetric_spec(0.05);
    const GridExtents ea = default_extents(anti);
    const double anti_min = wigner_grid(anti, ea, default_step(ea)).min_value;
    double oracle = 0.0;
    for (int t = 0; t < 10; ++t) {
      const JanusSpec s = random_spec(rng, {1.2, 1.5});
      const auto v = fock::build_janus_fock_auto(s);
      const GridExtents e = default_extents(s);
      for (int i = 0; i < 41; ++i)
        for (int j = 0; j < 41; ++j) {
          const double q = e.q_min + (e.q_max - e.q_min) * i / 40.0;
          const double p = e.p_min + (e.p_max - e.p_min) * j / 40.0;
          oracle = std::max(oracle, std::abs(wigner_janus(s, q, p) - fock::wigner_fock(v, q, p)));
        }
    }
    const bool ok = single_norm < kWignerNormTol && single_min >= 0.0 && cross < kWignerNormTol &&
                    anti_min <= kWignerMinBound && oracle < kWignerOracleTol;
    return Outcome{ok, fmt("single |int-1| %.2g min %.2g; cross |int-m0| %.2g; ", single_norm, single_min, cross) +
                           fmt("antisym min %.4f; closed vs oracle 41x41x10 max %.2g", anti_min, oracle)};
  });

  report(12, "qfi", [] {
    const auto t0 = Clock::now();
    const double f20 = qfi_displacement_phase(antisymmetric_spec(0.01, 1.0)).value;
    JanusSpec coh;
    coh.alpha = Displacement({1.1, 0.6});
    const double sql = std::abs(qfi_displacement_phase(coh).value - 4.0 * std::norm(coh.alpha.value()));
    std::mt19937_64 rng(1212);
    double cross = 0.0;
    for (int i = 0; i < 20; ++i) {
      const JanusSpec s = random_spec(rng, {1.2, 1.5});
      const double a = qfi_displacement_phase(s).value;
      const double b = qfi_fidelity_numeric(s, QfiParameter::displacement_phase, 1e-3).value;
      cross = std::max(cross, std::abs(a - b) / a);
    }
    std::vector<double> lr, lf;
    for (int i = 0; i < 9; ++i) {
      const double r = 0.02 + 0.01 * i;
      lr.push_back(std::log(r));
      lf.push_back(std::log(qfi_fidelity_numeric(antisymmetric_spec(r), QfiParameter::squeezing_angle, 1e-2).value));
    }
    const std::vector<double> c = polyfit(lr, lf, {0, 1});
    const double slope = c[1], prefactor = std::exp(c[0]);
    const double dt = seconds_since(t0);
    const bool ok = std::abs(f20 - 20.0) < kQfiAbsTol && sql < kQfiSqlTol && cross < kQfiCrossTol &&
                    std::abs(slope - 4.0) < kSlopeTol && std::abs(prefactor - 10.0) < kPrefactorTol && dt < kQfiSeconds;
    return Outcome{ok, fmt("4Var(n)=%.5f; SQL err %.2g; variance vs fidelity max rel %.2g; ", f20, sql, cross) +
                           fmt("sangle slope %.4f prefactor %.3f; %.1f s", slope, prefactor, dt)};
  });

  report(13, "determinism", [] {
    int code1 = 0, code2 = 0;
    const std::string a = run_cli({"selftest"}, code1);
    const std::string b = run_cli({"selftest"}, code2);
    bool ok = a == b && code1 == 0 && code2 == 0;
    int golden_ok = 0, golden_total = 0;
    const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
        {"gsp_table_5.csv", {"gsp", "table", "--max", "5"}},
        {"scan_g2_rotated.csv",
         {"scan", "--quantity", "gk:2", "--axis1", "alpha_mag:0:4:9", "--axis2", "alpha_phase:0:6.283:7", "--r",
          "1.0"}},
        {"scan_optimized_g2.csv", {"scan", "--quantity", "optimized_g2", "--axis1", "r:0.05:1:5", "--no-meta"}},
        {"scan_antisym_g3.csv",
         {"scan", "--quantity", "gk:3", "--axis1", "alpha_mag:0:1.5:4", "--axis2", "weight_ratio:0.5:2:4",
          "--eta-re", "-1", "--r", "0.2", "--s", "0.2", "--phi", "3.141592653589793", "--no-meta"}},
    };
    for (const auto& [file, args] : cases) {
      ++golden_total;
      int c1 = 0, c2 = 0;
      const std::string x = run_cli(args, c1), y = run_cli(args, c2);
      std::ifstream in(std::filesystem::path(JANUS_GOLDEN_DIR) / file, std::ios::binary);
      std::ostringstream g;
      g << in.rdbuf();
      golden_ok += c1 == 0 && x == y && x == g.str();
    }
    ok = ok && golden_ok == golden_total;
    return Outcome{ok, fmt("selftest runs identical: %.0f (exit %.0f); golden scans stable and matching: %.0f/%.0f",
                           a == b, code1, golden_ok, golden_total)};
  });

  return failures;
}
