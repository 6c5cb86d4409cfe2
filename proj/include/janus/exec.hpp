#pragma once

namespace janus {

/// Selects the OpenMP kernel or its serial reference. Both produce
/// bit-identical results.
enum class Exec { serial, parallel };

}  // namespace janus
