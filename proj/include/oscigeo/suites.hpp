#pragma once

// Self-check suites shared by `oscigeo verify` and the acceptance runner,
// plus the random generators and oracles they are built from.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "oscigeo/isometry.hpp"
#include "oscigeo/quotient.hpp"

namespace oscigeo {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteOptions {
  std::uint64_t seed = 20240601;
  /// Curvature operator under test; defaults to -1/4 [[X,Y],Z].
  CurvatureFn curvature = [](const Tangent& x, const Tangent& y, const Tangent& z) { return curvature_op(x, y, z); };
};

/// scalar, group, metric, bianchi, geodesic, isometry, normalizer, periodicity
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

namespace sample {

/// p/q with |p| <= 12, 1 <= q <= 6.
Rational rational(std::mt19937_64& rng);
Rational nonzero_rational(std::mt19937_64& rng);
/// A rational, or a rational multiple of pi or 1/pi.
Scalar scalar(std::mt19937_64& rng);
/// t in (pi/2)Z, rational v and z.
GroupElement quarter_element(std::mt19937_64& rng);
/// Exact null direction: random a0 != 0, a1, a2 and a3 = -(a1^2 + a2^2) / (2 a0).
Tangent null_vector(std::mt19937_64& rng);
TangentF direction(std::mt19937_64& rng);

}  // namespace sample

namespace oracle {

/// h normalizes L iff chi_h and chi_{h^-1} send each generator of L into L.
bool normalizer_by_conjugation(const LatticeSpec& L, const GroupElement& h);

/// Curvature from the Levi-Civita connection nabla_X Y = 1/2 [X, Y].
Tangent connection_curvature(const Tangent& x, const Tangent& y, const Tangent& z);

}  // namespace oracle

/// Largest coordinate difference between RK4 and the closed form along
/// s -> h exp(sX) on [0, s_end], and the relative drift of <gamma', gamma'>.
struct GeodesicComparison {
  double max_deviation = 0;
  double speed_drift = 0;
};
GeodesicComparison compare_with_rk4(const GroupElementF& h, const TangentF& X, double s_end, double step);

}  // namespace oscigeo
