#pragma once

#include <json.hpp>

#include "integra/charpoly.hpp"
#include "integra/families.hpp"
#include "integra/poly.hpp"

namespace integra {

// All arbitrary-precision values are emitted as decimal strings so the JSON
// stays bit-exact regardless of magnitude; structurally small integers
// (diameters, flags) stay native.

// Compact coefficient vector, constant term first: ["4", "0", "-5", "0", "1"].
nlohmann::json poly_json(const IntPoly& p);

nlohmann::json factored_json(const FactoredSpectrum& f);

// {"integral": bool, "eigenvalues": [[lambda, mult], ...] ascending,
//  "residuals": [coefficient arrays, one per factor power], "degree": N}
nlohmann::json report_json(const SpectrumReport& r);

// {"diameter": D, "family": "4k+1"|"4k+3", "parameter": k_or_a,
//  "params": {"r":, "r0":, "radii": []}, "vertices": N, "spectrum": report}
nlohmann::json certificate_json(const Certificate& c);

}  // namespace integra
