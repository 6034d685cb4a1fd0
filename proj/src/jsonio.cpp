#include "integra/jsonio.hpp"

#include "integra/errors.hpp"

namespace integra {

using nlohmann::json;

namespace {
// Residual factors repeat once per power in the report JSON; refuse to emit
// reports whose repetition count is absurd (only reachable for gigantic
// non-integral spectra requested in factored form).
constexpr unsigned long kMaxResidualEntries = 10'000'000;
}  // namespace

json poly_json(const IntPoly& p) {
  json arr = json::array();
  for (const BigInt& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

json factored_json(const FactoredSpectrum& f) {
  json quads = json::array();
  for (const auto& [rho, e] : f.quad_factors())
    quads.push_back({rho.get_str(), e.get_str()});
  json residuals = json::array();
  for (const auto& [p, e] : f.residuals())
    residuals.push_back({{"coefficients", poly_json(p)}, {"exponent", e.get_str()}});
  return {{"x_exp", f.x_exp().get_str()},
          {"quad_factors", quads},
          {"residuals", residuals}};
}

json report_json(const SpectrumReport& r) {
  json eigen = json::array();
  for (const auto& [value, mult] : r.multiplicities)
    eigen.push_back({value.get_str(), mult.get_str()});
  json residuals = json::array();
  BigInt entries = 0;
  for (const auto& [p, e] : r.residual_factors) entries += e;
  if (entries > BigInt(kMaxResidualEntries))
    throw factored_error("spectrum report would need " + entries.get_str() +
                         " residual entries");
  for (const auto& [p, e] : r.residual_factors)
    for (BigInt i = 0; i < e; ++i) residuals.push_back(poly_json(p));
  return {{"integral", r.integral},
          {"eigenvalues", eigen},
          {"residuals", residuals},
          {"degree", r.degree.get_str()}};
}

json certificate_json(const Certificate& c) {
  json radii = json::array();
  for (const BigInt& r : c.instance.params.radii) radii.push_back(r.get_str());
  return {{"diameter", c.instance.diameter()},
          {"family", c.instance.family == Family::diameter_4k1 ? "4k+1" : "4k+3"},
          {"parameter", c.instance.parameter.get_str()},
          {"params",
           {{"r", c.instance.params.r.get_str()},
            {"r0", c.instance.params.r0.get_str()},
            {"radii", radii}}},
          {"vertices", c.vertices.get_str()},
          {"spectrum", report_json(c.spectrum)}};
}

}  // namespace integra
