#pragma once

// Text forms of AreaSpectrum. JSON counts are decimal strings so that no
// precision is lost:
//   {"family": "power", "r": 2, "g": 0, "n": 2, "parts": [1, 1],
//    "support": {"min": -2, "max": 2, "parity": 0, "step": 2},
//    "entries": [{"A": -2, "count": "1"}, ...]}

#include <string>

#include "walkarea/area_spectrum.hpp"

namespace walkarea {

std::string spectrum_to_json(const AreaSpectrum& s, int indent = -1);
/// Inverse of spectrum_to_json. Throws std::invalid_argument on malformed
/// input.
AreaSpectrum spectrum_from_json(const std::string& text);

/// Header "A,count" then one row per entry.
std::string spectrum_to_csv(const AreaSpectrum& s);

/// Aligned two-column table followed by the total.
std::string spectrum_to_text(const AreaSpectrum& s);

}  // namespace walkarea
