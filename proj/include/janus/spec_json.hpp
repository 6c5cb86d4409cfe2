#pragma once

#include "janus/params.hpp"

#include <json.hpp>
#include <string>

namespace janus {

/// Keys: chi_re, chi_im, eta_re, eta_im, r, theta, s, phi, alpha_re, alpha_im.
/// Missing keys take the JanusSpec defaults; unknown keys are rejected.
nlohmann::json spec_to_json(const JanusSpec& spec);
JanusSpec spec_from_json(const nlohmann::json& j);

JanusSpec load_spec(const std::string& path);

}  // namespace janus
