#pragma once

// Concrete models: the square-zero rings k x| k^r, the iterated extension
// (k x| k^r) x| (k x| k^r)^s, and the two specialization pairs.

#include <sdcm/change_of_rings.hpp>
#include <sdcm/error.hpp>
#include <sdcm/homomorphism.hpp>
#include <sdcm/laurent_series.hpp>
#include <sdcm/model.hpp>

#include <map>
#include <string>
#include <vector>

namespace sdcm {

/// Poincare series of the dualizing module of k x| k^r: beta_0 = r and
/// beta_i = (r^2 - 1) r^(i-1), i.e. (r - t)/(1 - r t). The Betti numbers were
/// read off a minimal resolution over GF(p); tests/test_examples.cpp redoes
/// that computation.
inline LaurentSeries square_zero_dualizing_series(long r) {
  if (r < 2) throw ModelError("square-zero model needs r >= 2");
  return LaurentSeries(0, IntPolynomial{Integer(r), Integer(-1)}, IntPolynomial{Integer(1), Integer(-r)});
}

inline SdcModel square_zero_model(long r, const std::string& top_id = "R", const std::string& dual_id = "D",
                                  const std::string& name = "") {
  const LaurentSeries pd = square_zero_dualizing_series(r);
  return SdcModel(name.empty() ? "square0_" + std::to_string(r) : name,
                  {{top_id, LaurentSeries::one(), std::nullopt}, {dual_id, pd, std::nullopt}}, {{dual_id, top_id}},
                  top_id, dual_id, pd);
}

/// The map R -> R x| R^s, whose closed fiber is k x| k^s: I_phi is the Bass
/// series of that fiber, the dual of its dualizing series.
inline HomomorphismDescriptor trivial_extension_phi(long s, const std::string& source = "",
                                                    const std::string& target_name = "S") {
  return {"trivext_" + std::to_string(s), square_zero_dualizing_series(s), source, target_name};
}

/// Classes S, DtensorS, cbcR, cbcD.
inline SdcModel iterated_model(long r, long s) {
  const SdcModel base = square_zero_model(r);
  return renamed(cobase_change_model(base, trivial_extension_phi(s, base.name())),
                 "iterated_" + std::to_string(r) + "_" + std::to_string(s));
}

struct SpecializationExample {
  SdcModel big;
  SdcModel small;
  std::map<std::string, std::string> class_map;
};

/// A non-Gorenstein ring localizing to a Gorenstein one: R and D both land on
/// the localization. The square-zero model with r = 2 stands in for R.
inline SpecializationExample decreasing_example_strict() {
  SdcModel small("gorenstein_localization", {{"Rp", LaurentSeries::one(), std::nullopt}}, {}, "Rp", "Rp",
                 LaurentSeries::one());
  return {square_zero_model(2), std::move(small), {{"R", "Rp"}, {"D", "Rp"}}};
}

/// k[[X,Y,Z]]/(X,Y)^2 localized at (X,Y): both sides are square-zero with
/// embedding dimension 2, so the distance stays 2.
inline SpecializationExample decreasing_example_equal() {
  return {square_zero_model(2, "S", "E", "k[[X,Y,Z]]/(X,Y)^2"), square_zero_model(2, "Sq", "Eq", "localization_q"),
          {{"S", "Sq"}, {"E", "Eq"}}};
}

}  // namespace sdcm
