#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "pbiharm/pcore.hpp"

namespace pbiharm {

/// Continuous weight families on [0,1]. The optional amplitude multiplies the
/// base family so that negation stays inside the catalog.
struct ConstantWeight {
  double c = 1.0;
};
struct CosineWeight {
  int frequency = 1;  // m(x) = cos(2*pi*f*x)
};
struct LinearShiftWeight {
  double a = 0.5;  // m(x) = x - a, a in (0,1)
};
struct PiecewisePolyWeight {
  std::vector<double> breakpoints;            // sorted, includes 0 and 1
  std::vector<std::vector<double>> coeffs;    // ascending powers per segment, in local x
};

struct WeightSpec {
  std::variant<ConstantWeight, CosineWeight, LinearShiftWeight, PiecewisePolyWeight> family;
  double amplitude = 1.0;

  std::string kindName() const;
};

/// Pointwise value of m at x in [0,1]. Throws OutOfDomain outside.
double evalWeight(const WeightSpec& spec, double x);

/// Spec for -m. Throws NotAdmissible when m >= 0 everywhere (empty negative
/// spectrum, -m not in M(I)).
WeightSpec negateWeight(const WeightSpec& spec);

/// Parse a weight block; validates continuity and numeric admissibility
/// (max of m over a 10^4-point grid must exceed a small positive threshold).
WeightSpec parseWeight(const nlohmann::json& j);

nlohmann::json weightToJson(const WeightSpec& spec);

/// Numeric admissibility certificate: max over `gridPoints` samples exceeds
/// `threshold`. Exact for the catalog families up to roundoff.
bool isAdmissible(const std::function<double(double)>& m, int gridPoints = 10000,
                  double threshold = 1e-10);

/// Evaluator handle the engines consume. Restrictions and negations compose
/// without growing the catalog.
struct WeightFn {
  std::function<double(double)> eval;
  std::string name;

  double operator()(double x) const { return eval(x); }
};

WeightFn makeEval(const WeightSpec& spec);

/// m restricted to (a,b), affinely pulled back to [0,1]: y -> m(a + (b-a) y).
WeightFn restrictAffine(const WeightFn& m, double a, double b);

WeightFn negate(const WeightFn& m);

/// Samples at the n interior nodes of the uniform grid.
GridFunction sampleWeight(const WeightFn& m, int n);

/// max |m| over a dense sample of [a,b] (default 10^3 points).
double maxAbsOnInterval(const WeightFn& m, double a, double b, int points = 1000);

}  // namespace pbiharm
