#pragma once

#include <sdcm/curvature.hpp>
#include <sdcm/laurent_series.hpp>

#include <string>

namespace sdcm {

/// A local homomorphism R -> S of finite flat dimension, known only through
/// its Bass series I_phi(t) (I_S^S = I_R^R * I_phi).
struct HomomorphismDescriptor {
  std::string name;
  LaurentSeries bass_phi;
  std::string source;
  std::string target_name = "S";
};

/// Injective curvature of phi: the curvature of its Bass series. Zero exactly
/// when phi is Gorenstein at the closed point.
inline Curvature injcurv_phi(const HomomorphismDescriptor& phi, const CurvatureConfig& config = {}) {
  return curvature(phi.bass_phi, config);
}

}  // namespace sdcm
