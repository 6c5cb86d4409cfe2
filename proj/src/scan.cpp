#include "janus/scan.hpp"

#include "janus/errors.hpp"
#include "janus/format.hpp"
#include "janus/metrology.hpp"
#include "janus/moments.hpp"
#include "janus/wigner.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace janus {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_number(const std::string& s, const std::string& context) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad number '" + s + "' in '" + context + "'");
  }
}

int parse_int(const std::string& s, const std::string& context) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer '" + s + "' in '" + context + "'");
  }
}

struct CellResult {
  std::vector<double> values;
  std::string failure;
};

}  // namespace

std::string to_string(ScanParam p) {
  switch (p) {
    case ScanParam::r: return "r";
    case ScanParam::s: return "s";
    case ScanParam::theta: return "theta";
    case ScanParam::phi: return "phi";
    case ScanParam::alpha_mag: return "alpha_mag";
    case ScanParam::alpha_phase: return "alpha_phase";
    case ScanParam::weight_ratio: return "weight_ratio";
  }
  return "unknown";
}

ScanParam parse_scan_param(const std::string& name) {
  for (ScanParam p : {ScanParam::r, ScanParam::s, ScanParam::theta, ScanParam::phi,
                      ScanParam::alpha_mag, ScanParam::alpha_phase, ScanParam::weight_ratio})
    if (to_string(p) == name) return p;
  throw std::invalid_argument("unknown scan parameter '" + name + "'");
}

double ScanAxis::at(int i) const { return start + (stop - start) * i / (count - 1); }

ScanAxis parse_axis(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 4) throw std::invalid_argument("axis must be name:start:stop:count, got '" + text + "'");
  ScanAxis a;
  a.param = parse_scan_param(parts[0]);
  a.start = parse_number(parts[1], text);
  a.stop = parse_number(parts[2], text);
  a.count = parse_int(parts[3], text);
  if (a.count < 2) throw std::invalid_argument("axis count must be >= 2 in '" + text + "'");
  return a;
}

Quantity parse_quantity(const std::string& text) {
  const auto parts = split(text, ':');
  const std::string& name = parts[0];
  Quantity q;
  if (name == "gk" || name == "moment") {
    if (parts.size() != 2) throw std::invalid_argument("quantity '" + name + "' needs an order, e.g. " + name + ":2");
    q.kind = name == "gk" ? QuantityKind::gk : QuantityKind::moment;
    q.k = parse_int(parts[1], text);
    if (q.k < 1) throw std::invalid_argument("order must be >= 1 in '" + text + "'");
    return q;
  }
  if (parts.size() != 1) throw std::invalid_argument("unexpected order in quantity '" + text + "'");
  if (name == "wigner_min") q.kind = QuantityKind::wigner_min;
  else if (name == "qfi_dphase") q.kind = QuantityKind::qfi_dphase;
  else if (name == "qfi_sangle") q.kind = QuantityKind::qfi_sangle;
  else if (name == "var_gsq") q.kind = QuantityKind::var_gsq;
  else if (name == "optimized_g2") q.kind = QuantityKind::optimized_g2;
  else throw std::invalid_argument("unknown quantity '" + text + "'");
  return q;
}

std::string to_string(const Quantity& q) {
  switch (q.kind) {
    case QuantityKind::gk: return "gk:" + std::to_string(q.k);
    case QuantityKind::moment: return "moment:" + std::to_string(q.k);
    case QuantityKind::wigner_min: return "wigner_min";
    case QuantityKind::qfi_dphase: return "qfi_dphase";
    case QuantityKind::qfi_sangle: return "qfi_sangle";
    case QuantityKind::var_gsq: return "var_gsq";
    case QuantityKind::optimized_g2: return "optimized_g2";
  }
  return "unknown";
}

std::vector<std::string> value_columns(const Quantity& q) {
  switch (q.kind) {
    case QuantityKind::gk: return {"g" + std::to_string(q.k)};
    case QuantityKind::moment: return {"N" + std::to_string(q.k)};
    case QuantityKind::wigner_min: return {"min_value", "min_q", "min_p", "negativity_volume"};
    case QuantityKind::optimized_g2: return {"g2_formula", "ratio", "g2_minimized"};
    default: return {to_string(q)};
  }
}

void validate(const ScanSpec& spec) {
  if (spec.axis1.count < 2) throw std::invalid_argument("axis1 count must be >= 2");
  if (spec.axis2) {
    if (spec.axis2->count < 2) throw std::invalid_argument("axis2 count must be >= 2");
    if (spec.axis2->param == spec.axis1.param) throw std::invalid_argument("scan axes must differ");
  }
}

JanusSpec apply_param(const JanusSpec& base, ScanParam p, double value) {
  JanusSpec s = base;
  switch (p) {
    case ScanParam::r: s.xi = SqueezeParam(value, base.xi.theta()); break;
    case ScanParam::s: s.zeta = SqueezeParam(value, base.zeta.theta()); break;
    case ScanParam::theta: s.xi = SqueezeParam(base.xi.r(), value); break;
    case ScanParam::phi: s.zeta = SqueezeParam(base.zeta.r(), value); break;
    case ScanParam::alpha_mag: s.alpha = Displacement::from_polar(value, base.alpha.phase()); break;
    case ScanParam::alpha_phase: s.alpha = Displacement::from_polar(base.alpha.mag(), value); break;
    case ScanParam::weight_ratio: {
      // |χ|/|η| = value with both phases kept.
      const double chi_arg = std::arg(base.chi), eta_arg = std::arg(base.eta);
      s.chi = std::polar(value, chi_arg);
      s.eta = std::polar(1.0, eta_arg);
      break;
    }
  }
  return s;
}

std::vector<double> evaluate_quantity(const JanusSpec& spec, const Quantity& q) {
  switch (q.kind) {
    case QuantityKind::gk: return {gk(q.k, spec)};
    case QuantityKind::moment: return {janus_moment(q.k, spec)};
    case QuantityKind::wigner_min: {
      const GridExtents ext = default_extents(spec);
      const WignerGrid g = wigner_grid(spec, ext, default_step(ext), GridPart::total, Exec::serial);
      return {g.min_value, g.min_q, g.min_p, g.negativity_volume};
    }
    case QuantityKind::qfi_dphase: return {qfi_displacement_phase(spec).value};
    case QuantityKind::qfi_sangle:
      return {qfi_fidelity_numeric(spec, QfiParameter::squeezing_angle, 1e-2).value};
    case QuantityKind::var_gsq: return {var_gsq(spec, spec.xi.theta())};
    case QuantityKind::optimized_g2: {
      const OptimizedG2 o = optimized_g2_undisplaced(spec.xi.r());
      return {o.g2, o.ratio, o.g2_minimized};
    }
  }
  return {};
}

ScanTable scan(const ScanSpec& spec, Exec exec) {
  validate(spec);
  ScanTable table;
  table.columns.push_back(to_string(spec.axis1.param));
  if (spec.axis2) table.columns.push_back(to_string(spec.axis2->param));
  const auto vcols = value_columns(spec.quantity);
  table.columns.insert(table.columns.end(), vcols.begin(), vcols.end());

  const int n1 = spec.axis1.count;
  const int n2 = spec.axis2 ? spec.axis2->count : 1;
  const int cells = n1 * n2;
  std::vector<CellResult> results(static_cast<std::size_t>(cells));

  auto cell = [&](int idx) {
    const int i = idx / n2, j = idx % n2;
    CellResult& out = results[idx];
    try {
      JanusSpec s = apply_param(spec.base, spec.axis1.param, spec.axis1.at(i));
      if (spec.axis2) s = apply_param(s, spec.axis2->param, spec.axis2->at(j));
      out.values = evaluate_quantity(normalize_weights(s), spec.quantity);
    } catch (const Error& e) {
      out.failure = std::string(e.kind());
    } catch (const std::exception& e) {
      out.failure = "std::exception";
    }
    if (!out.failure.empty())
      out.values.assign(vcols.size(), std::numeric_limits<double>::quiet_NaN());
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int idx = 0; idx < cells; ++idx) cell(idx);
  } else {
    for (int idx = 0; idx < cells; ++idx) cell(idx);
  }

  for (int idx = 0; idx < cells; ++idx) {
    std::vector<double> row;
    row.push_back(spec.axis1.at(idx / n2));
    if (spec.axis2) row.push_back(spec.axis2->at(idx % n2));
    row.insert(row.end(), results[idx].values.begin(), results[idx].values.end());
    table.rows.push_back(std::move(row));
    if (!results[idx].failure.empty()) {
      ++table.failures;
      table.failure_kinds.push_back(results[idx].failure);
    }
  }
  return table;
}

std::string to_csv(const ScanTable& table) {
  std::ostringstream out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_double(row[c]);
    out << '\n';
  }
  out << "# failures=" << table.failures << '\n';
  return out.str();
}

}  // namespace janus
