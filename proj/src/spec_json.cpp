#include "janus/spec_json.hpp"

#include <array>
#include <fstream>
#include <stdexcept>

namespace janus {

namespace {

constexpr std::array<const char*, 10> kKeys = {"chi_re", "chi_im", "eta_re", "eta_im", "r",
                                               "theta",  "s",      "phi",    "alpha_re", "alpha_im"};

}  // namespace

nlohmann::json spec_to_json(const JanusSpec& spec) {
  return {{"chi_re", spec.chi.real()},         {"chi_im", spec.chi.imag()},
          {"eta_re", spec.eta.real()},         {"eta_im", spec.eta.imag()},
          {"r", spec.xi.r()},                  {"theta", spec.xi.theta()},
          {"s", spec.zeta.r()},                {"phi", spec.zeta.theta()},
          {"alpha_re", spec.alpha.value().real()}, {"alpha_im", spec.alpha.value().imag()}};
}

JanusSpec spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("spec JSON must be an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : kKeys) known = known || key == k;
    if (!known) throw std::invalid_argument("unknown spec key '" + key + "'");
    if (!value.is_number()) throw std::invalid_argument("spec key '" + key + "' must be a number");
  }
  auto get = [&](const char* key, double fallback) {
    return j.contains(key) ? j.at(key).get<double>() : fallback;
  };
  JanusSpec s;
  s.chi = {get("chi_re", 1.0), get("chi_im", 0.0)};
  s.eta = {get("eta_re", 0.0), get("eta_im", 0.0)};
  s.xi = SqueezeParam(get("r", 0.0), get("theta", 0.0));
  s.zeta = SqueezeParam(get("s", 0.0), get("phi", 0.0));
  s.alpha = Displacement({get("alpha_re", 0.0), get("alpha_im", 0.0)});
  return s;
}

JanusSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("malformed spec JSON in '" + path + "': " + e.what());
  }
  return spec_from_json(j);
}

}  // namespace janus
