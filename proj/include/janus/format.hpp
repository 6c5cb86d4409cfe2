#pragma once

#include <string>

namespace janus {

/// Shortest decimal that round-trips to the same double; "nan"/"inf"/"-inf".
std::string format_double(double v);

}  // namespace janus
