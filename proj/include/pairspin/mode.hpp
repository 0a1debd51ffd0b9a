#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace pairspin {

// Photon preparation.
//   linear      both photons linearly polarized at pi/4 to the x-axis, e1 = -e2
//   circular    photon 1 right-handed, photon 2 left-handed
//   unpolarized coherent sum over photon polarizations
enum class Mode { linear, circular, unpolarized };

// How the circular-mode closed form treats omega: verbatim in MeV, or
// expressed in units of the electron mass.
enum class CircularUnits { mev, normalized };

inline std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::linear: return "linear";
    case Mode::circular: return "circular";
    case Mode::unpolarized: return "unpolarized";
  }
  return "?";
}

inline std::string_view to_string(CircularUnits u) {
  return u == CircularUnits::mev ? "mev" : "normalized";
}

inline std::optional<Mode> parse_mode(std::string_view s) {
  if (s == "linear") return Mode::linear;
  if (s == "circular") return Mode::circular;
  if (s == "unpolarized") return Mode::unpolarized;
  return std::nullopt;
}

}  // namespace pairspin
