#ifndef JETCLASS_DIRECTIONS_HPP
#define JETCLASS_DIRECTIONS_HPP

#include <optional>

#include "jetclass/algebraic.hpp"
#include "jetclass/errors.hpp"
#include "jetclass/ideal.hpp"

namespace jetclass {

// One representative of an antipodal pair of allowed directions, exact.
// Either `ray` holds projective coordinates (first nonzero entry positive),
// or the point is slope*embed_basis[0] + embed_basis[1] with an irrational
// slope inside a rational plane.
struct DirectionPoint {
  std::vector<Scalar> ray;
  std::vector<std::vector<Scalar>> embed_basis;
  std::optional<AlgebraicNumber> slope;

  bool embedded() const { return slope.has_value(); }
  std::vector<double> unit() const;  // canonical-sign unit vector
  std::string to_string() const;
};

enum class CurveKind { great_circle, conic, full_sphere };

struct CurveComponent {
  CurveKind kind = CurveKind::great_circle;
  std::vector<std::vector<Scalar>> plane_basis;  // great_circle: span of the plane
  RationalMatrix conic;                          // conic: rank-3 indefinite quadric
  std::string to_string(const RingSpec& ring) const;
};

struct DirectionReport {
  bool exact = true;  // false: over-approximation from lowest homogeneous parts
  std::vector<DirectionPoint> points;
  std::vector<CurveComponent> curves;
  int span_dim = 0;

  bool empty() const { return points.empty() && curves.empty(); }
  bool has_curve() const { return !curves.empty(); }
  // Points on S^{n-1} when the set is finite (two per stored ray).
  size_t point_count() const { return 2 * points.size(); }
};

// Exact evaluation of the forbidden-direction criterion for a single jet:
// the lowest homogeneous part is nonzero at the given ray.
bool is_forbidden(const Jet& p, const std::vector<Scalar>& ray);

// Exact Allow(I) for n <= 3. For non-homogeneous ideals the report is the
// over-approximation by the zero sets of lowest homogeneous parts, flagged
// exact=false. Throws UnsupportedVarietyError outside the supported varieties.
DirectionReport allow_exact(const JetIdeal& ideal);

int allow_span_dim(const JetIdeal& ideal);
bool allow_is_empty(const JetIdeal& ideal);

struct ConeSpec {
  double delta = 0;          // dome half-width; 0 = one grid cell
  double radius = 1e-1;      // largest radius of the ladder
  double radius_min = 1e-5;  // smallest radius
  double threshold = 1e-6;   // forbidden when min ratio exceeds this
};

struct EstimateCell {
  std::vector<double> direction;
  bool forbidden = true;
  double min_ratio = 0;  // smallest observed sum|g|/|x|^m over the cone
};

// Numeric estimator on an S^{n-1} grid (default 720 cells for n=2, ~16200 for
// n=3). Deterministic; cells are independent.
std::vector<EstimateCell> allow_estimate(const JetIdeal& ideal, int grid = 0, ConeSpec cone = {});

std::string estimate_to_csv(const std::vector<EstimateCell>& cells);

}  // namespace jetclass

#endif
