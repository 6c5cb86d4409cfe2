#include "janus/cli.hpp"

#include "janus/errors.hpp"
#include "janus/fock.hpp"
#include "janus/format.hpp"
#include "janus/gsp.hpp"
#include "janus/metrology.hpp"
#include "janus/moments.hpp"
#include "janus/scan.hpp"
#include "janus/selftest.hpp"
#include "janus/spec_json.hpp"
#include "janus/wigner.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace janus::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct SpecOptions {
  std::string path;
  std::string dump;
  std::optional<double> chi_re, chi_im, eta_re, eta_im, r, theta, s, phi, alpha_re, alpha_im;

  void attach(CLI::App* app) {
    app->add_option("--spec", path, "JanusSpec JSON file");
    app->add_option("--chi-re", chi_re);
    app->add_option("--chi-im", chi_im);
    app->add_option("--eta-re", eta_re);
    app->add_option("--eta-im", eta_im);
    app->add_option("--r", r);
    app->add_option("--theta", theta);
    app->add_option("--s", s);
    app->add_option("--phi", phi);
    app->add_option("--alpha-re", alpha_re);
    app->add_option("--alpha-im", alpha_im);
    app->add_option("--dump-spec", dump, "write the effective spec (before normalization) to FILE");
  }

  // Returns the normalized spec.
  JanusSpec resolve() const {
    JanusSpec spec = path.empty() ? JanusSpec{} : load_spec(path);
    auto pick = [](const std::optional<double>& o, double v) { return o ? *o : v; };
    spec.chi = {pick(chi_re, spec.chi.real()), pick(chi_im, spec.chi.imag())};
    spec.eta = {pick(eta_re, spec.eta.real()), pick(eta_im, spec.eta.imag())};
    spec.xi = SqueezeParam(pick(r, spec.xi.r()), pick(theta, spec.xi.theta()));
    spec.zeta = SqueezeParam(pick(s, spec.zeta.r()), pick(phi, spec.zeta.theta()));
    spec.alpha = Displacement({pick(alpha_re, spec.alpha.value().real()),
                               pick(alpha_im, spec.alpha.value().imag())});
    if (!dump.empty()) {
      std::ofstream f(dump);
      if (!f) throw std::invalid_argument("cannot write --dump-spec file '" + dump + "'");
      f << spec_to_json(spec).dump(2) << '\n';
    }
    return normalize_weights(spec);
  }
};

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write output file '" + path + "'");
  f << text;
}

std::string meta_header(const std::string& command, const JanusSpec& spec) {
  return "# janus " + command + "\n# spec " + spec_to_json(spec).dump() + "\n";
}

std::string grid_csv(const WignerGrid& g) {
  std::string s = "q,p,W\n";
  for (int i = 0; i < g.q.count; ++i)
    for (int j = 0; j < g.p.count; ++j)
      s += format_double(g.q.at(i)) + "," + format_double(g.p.at(j)) + "," + format_double(g.at(i, j)) + "\n";
  return s;
}

ojson grid_summary(const WignerGrid& g) {
  return {{"integral", g.integral},
          {"min_value", g.min_value},
          {"min_q", g.min_q},
          {"min_p", g.min_p},
          {"negativity_volume", g.negativity_volume}};
}

std::complex<double> oracle_moment(const JanusSpec& spec, int k, int& cutoff) {
  const auto v = fock::build_janus_fock_auto(spec);
  cutoff = v.cutoff();
  return fock::cross_moment_fock(v, v, k);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Photon statistics, Wigner functions and QFI of displaced Janus states", "janus"};
  app.require_subcommand(1);

  // gsp table
  auto* gsp_cmd = app.add_subcommand("gsp", "generalized squeezing polynomials");
  gsp_cmd->require_subcommand(1);
  auto* table_cmd = gsp_cmd->add_subcommand("table", "exact P_{p,q} table as CSV");
  int table_max = 5;
  std::string table_out;
  table_cmd->add_option("--max", table_max, "largest p and q")->check(CLI::Range(0, 40));
  table_cmd->add_option("--out", table_out);

  // moments / gk
  SpecOptions mom_spec, gk_spec, wig_spec, qfi_spec, scan_spec;
  int mom_k = 1, gk_k = 2;
  bool mom_oracle = false, gk_oracle = false;
  auto* mom_cmd = app.add_subcommand("moments", "factorial moment N_k of the superposition");
  mom_spec.attach(mom_cmd);
  mom_cmd->add_option("--k", mom_k)->required()->check(CLI::Range(0, kDefaultOrderCap * 10));
  mom_cmd->add_flag("--oracle", mom_oracle, "cross-check against the Fock oracle");
  auto* gk_cmd = app.add_subcommand("gk", "coherence function g^(k)(0)");
  gk_spec.attach(gk_cmd);
  gk_cmd->add_option("--k", gk_k)->required()->check(CLI::Range(1, kDefaultOrderCap * 10));
  gk_cmd->add_flag("--oracle", gk_oracle);

  // wigner
  auto* wig_cmd = app.add_subcommand("wigner", "Wigner function grid");
  wig_spec.attach(wig_cmd);
  std::optional<double> extent, step;
  bool decompose = false, wig_oracle = false, wig_no_meta = false;
  std::string wig_out;
  wig_cmd->add_option("--extent", extent, "half-width around the displacement centre")
      ->check(CLI::PositiveNumber);
  wig_cmd->add_option("--step", step)->check(CLI::PositiveNumber);
  wig_cmd->add_flag("--decompose", decompose, "emit mixture, interference and total grids");
  wig_cmd->add_flag("--oracle", wig_oracle);
  wig_cmd->add_flag("--no-meta", wig_no_meta);
  wig_cmd->add_option("--out", wig_out, "output prefix for CSV/JSON files");

  // qfi
  auto* qfi_cmd = app.add_subcommand("qfi", "quantum Fisher information");
  qfi_spec.attach(qfi_cmd);
  std::string parameter;
  bool numeric = false, qfi_oracle = false;
  double dl = 1e-3;
  std::optional<double> theta_g;
  qfi_cmd->add_option("--parameter", parameter)->required()->check(CLI::IsMember({"dphase", "sangle", "gsq"}));
  qfi_cmd->add_flag("--numeric", numeric, "fidelity-based estimate");
  qfi_cmd->add_option("--dl", dl);
  qfi_cmd->add_option("--theta-g", theta_g, "generator angle for gsq (default θ)");
  qfi_cmd->add_flag("--oracle", qfi_oracle);

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "parameter scan as CSV");
  scan_spec.attach(scan_cmd);
  std::string quantity, axis1, axis2, scan_out;
  bool scan_no_meta = false, serial = false;
  scan_cmd->add_option("--quantity", quantity)->required();
  scan_cmd->add_option("--axis1", axis1, "name:start:stop:count")->required();
  scan_cmd->add_option("--axis2", axis2);
  scan_cmd->add_option("--out", scan_out);
  scan_cmd->add_flag("--no-meta", scan_no_meta);
  scan_cmd->add_flag("--serial", serial, "disable OpenMP across cells");

  auto* self_cmd = app.add_subcommand("selftest", "bundled oracle-equivalence checks");

  std::vector<std::string> argv_store{"janus"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (table_cmd->parsed()) {
      gsp::reserve_poly_table(table_max);
      std::string s = "p,q,coeffs\n";
      for (int p = 0; p <= table_max; ++p)
        for (int q = 0; q <= table_max; ++q)
          if ((p + q) % 2 == 0)
            s += std::to_string(p) + "," + std::to_string(q) + ",\"" + gsp::poly(p, q).coeff_string() + "\"\n";
      write_text(table_out, s, out);
    } else if (mom_cmd->parsed() || gk_cmd->parsed()) {
      const bool is_gk = gk_cmd->parsed();
      const JanusSpec spec = (is_gk ? gk_spec : mom_spec).resolve();
      const int k = is_gk ? gk_k : mom_k;
      ojson j;
      j["k"] = k;
      double oracle_value = 0.0;
      int cutoff = 0;
      if (is_gk) {
        const MomentResult n1 = janus_moment_result(1, spec);
        const MomentResult nk = janus_moment_result(k, spec);
        j["value"] = gk(k, spec);
        j["branch_residual"] = std::max(n1.branch_residual, nk.branch_residual);
        if (gk_oracle) {
          const double o1 = oracle_moment(spec, 1, cutoff).real();
          oracle_value = oracle_moment(spec, k, cutoff).real() / std::pow(o1, k);
        }
      } else {
        const MomentResult m = janus_moment_result(k, spec);
        j["value"] = m.value.real();
        j["branch_residual"] = m.branch_residual;
        if (mom_oracle) oracle_value = oracle_moment(spec, k, cutoff).real();
      }
      if (is_gk ? gk_oracle : mom_oracle) {
        j["oracle_value"] = oracle_value;
        j["abs_diff"] = std::abs(oracle_value - j["value"].get<double>());
        j["cutoff"] = cutoff;
      }
      out << j.dump() << '\n';
    } else if (wig_cmd->parsed()) {
      const JanusSpec spec = wig_spec.resolve();
      GridExtents ext = default_extents(spec);
      if (extent) {
        const double q0 = std::sqrt(2.0) * spec.alpha.value().real();
        const double p0 = std::sqrt(2.0) * spec.alpha.value().imag();
        ext = {q0 - *extent, q0 + *extent, p0 - *extent, p0 + *extent};
      }
      const double h = step ? *step : default_step(ext);
      const std::string meta = wig_no_meta ? "" : meta_header("wigner", spec);
      ojson summary;
      WignerGrid total;
      if (decompose) {
        const WignerDecomposition d = wigner_decomposition(spec, ext, h);
        total = d.total;
        summary["mixture"] = grid_summary(d.mixture);
        summary["interference"] = grid_summary(d.interference);
        summary["total"] = grid_summary(d.total);
        if (wig_out.empty()) {
          out << meta << "# part mixture\n" << grid_csv(d.mixture) << "# part interference\n"
              << grid_csv(d.interference) << "# part total\n" << grid_csv(d.total);
        } else {
          write_text(wig_out + "_mixture.csv", meta + grid_csv(d.mixture), out);
          write_text(wig_out + "_interference.csv", meta + grid_csv(d.interference), out);
          write_text(wig_out + "_total.csv", meta + grid_csv(d.total), out);
        }
      } else {
        total = wigner_grid(spec, ext, h);
        summary = grid_summary(total);
        if (wig_out.empty()) out << meta << grid_csv(total);
        else write_text(wig_out + ".csv", meta + grid_csv(total), out);
      }
      if (wig_oracle) {
        const WignerGrid o = wigner_grid_fock(fock::build_janus_fock_auto(spec), ext, h);
        double worst = 0.0;
        for (std::size_t i = 0; i < o.values.size(); ++i)
          worst = std::max(worst, std::abs(o.values[i] - total.values[i]));
        summary["oracle_max_abs_diff"] = worst;
      }
      if (wig_out.empty()) {
        out << "# summary " << summary.dump() << '\n';
      } else {
        write_text(wig_out + ".json", summary.dump(2) + "\n", out);
        out << summary.dump() << '\n';
      }
    } else if (qfi_cmd->parsed()) {
      const JanusSpec spec = qfi_spec.resolve();
      QfiResult res;
      if (parameter == "dphase") {
        res = numeric ? qfi_fidelity_numeric(spec, QfiParameter::displacement_phase, dl)
                      : qfi_displacement_phase(spec);
      } else if (parameter == "sangle") {
        if (numeric) {
          res = qfi_fidelity_numeric(spec, QfiParameter::squeezing_angle, dl);
        } else {
          if (spec.xi.r() > kLeadingOrderValidity)
            err << "warning: leading-order squeezing-angle QFI used above r = 0.3\n";
          res = {qfi_squeezing_angle_leading(spec.xi.r()), QfiMethod::expansion,
                 QfiParameter::squeezing_angle, 0.0};
        }
      } else {
        res = qfi_squeezing_generator(spec, theta_g ? *theta_g : spec.xi.theta());
      }
      ojson j{{"parameter", to_string(res.parameter)},
              {"method", to_string(res.method)},
              {"value", res.value},
              {"sensitivity", res.sensitivity}};
      if (qfi_oracle) {
        double o = 0.0;
        if (parameter == "gsq") {
          const auto v = fock::build_janus_fock_auto(spec);
          const auto wider = fock::build_janus_fock(spec, v.cutoff() * 3 / 2);
          o = 4.0 * fock::var_gsq_fock(wider, theta_g ? *theta_g : spec.xi.theta());
        } else {
          const auto p = parameter == "dphase" ? QfiParameter::displacement_phase
                                               : QfiParameter::squeezing_angle;
          o = qfi_fidelity_numeric(spec, p, dl).value;
        }
        j["oracle_value"] = o;
        j["abs_diff"] = std::abs(o - res.value);
      }
      out << j.dump() << '\n';
    } else if (scan_cmd->parsed()) {
      ScanSpec ss;
      ss.base = scan_spec.resolve();
      ss.quantity = parse_quantity(quantity);
      ss.axis1 = parse_axis(axis1);
      if (!axis2.empty()) ss.axis2 = parse_axis(axis2);
      validate(ss);
      const ScanTable table = scan(ss, serial ? Exec::serial : Exec::parallel);
      std::string text;
      if (!scan_no_meta) {
        text = meta_header("scan", ss.base) + "# quantity " + to_string(ss.quantity) + "\n# axis1 " + axis1 + "\n";
        if (ss.axis2) text += "# axis2 " + axis2 + "\n";
      }
      text += to_csv(table);
      write_text(scan_out, text, out);
      if (table.failures > 0) err << "warning: " << table.failures << " scan cells failed\n";
    } else if (self_cmd->parsed()) {
      bool ok = true;
      for (const SelftestLine& l : run_selftest()) {
        out << l.name << " max=" << format_double(l.max_discrepancy) << " tol="
            << format_double(l.tolerance) << ' ' << (l.pass ? "PASS" : "FAIL") << '\n';
        ok = ok && l.pass;
      }
      return ok ? 0 : 2;
    }
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace janus::cli
