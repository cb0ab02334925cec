#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "capabp/subdiff.hpp"
#include "capabp/vec.hpp"

namespace capabp {

struct Budget {
    std::int64_t samples = 1'000'000;
    std::uint64_t seed = 1;
    std::optional<double> target_half_width;
    bool force_mc = false;  // skip the exact 2D path (testing/benchmark knob)
};

enum class MeasureMethod { exact2d, montecarlo };

std::string measure_method_name(MeasureMethod m);

// A nonnegative measure value with a 99% confidence half-width
// (z = 2.576); exact values carry half_width 0 and samples 0.
struct MeasureEstimate {
    double value = 0.0;
    double half_width = 0.0;
    MeasureMethod method = MeasureMethod::exact2d;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    bool warning = false;  // target half-width requested but not reached
};

// z-score of the uniform 99% reporting convention.
inline constexpr double kConfidenceZ = 2.576;

MeasureEstimate pooled(const std::vector<MeasureEstimate>& parts);

// --- exact 2D primitives -------------------------------------------------

struct P2 {
    double x = 0.0, y = 0.0;
};
using Polygon2 = std::vector<P2>;

// Keeps {p : nx*x + ny*y <= b}. Input convex and counterclockwise.
Polygon2 clip_halfplane(const Polygon2& poly, double nx, double ny, double b);

double polygon_area(const Polygon2& poly);

// area(poly ∩ disk(0, r)) in closed form (triangles + circular sectors).
double circle_polygon_area(const Polygon2& poly, double r);

// Exact area of {xi in B_radius : xi in cell, xi . nu > lambda} in N=2.
double cell_region_area_2d(const SubdifferentialCell& cell, double lambda, const Vec& nu,
                           double radius);

// --- measures ------------------------------------------------------------

// Measure of {xi in B_radius : xi in cell, xi . nu > lambda}. Exact in 2D,
// Monte Carlo otherwise (uniform ball sampling, deterministic in the seed).
MeasureEstimate region_volume(const SubdifferentialCell& cell, double lambda, const Vec& nu,
                              double radius, const Budget& budget);

enum class SpherePredicate { below, above };  // xi . nu(xi) < lambda resp. > lambda

// H^{N-1} measure on the sphere of radius `radius` of the predicate set,
// by uniform sphere sampling; boundary-flagged samples are discarded and
// counted, aborting above a 1% fraction.
MeasureEstimate sphere_region_measure(const Partition& p, SpherePredicate pred, double lambda,
                                      double radius, const Budget& budget);

struct ProfilePoint {
    double lambda = 0.0;
    MeasureEstimate estimate;
};

// Restricted-subdifferential measure per grid value, sharing one sample
// stream across the grid (common random numbers) so the profile is
// nonincreasing sample-wise. Exact in 2D.
std::vector<ProfilePoint> restricted_measure_profile(const Partition& p,
                                                     const std::vector<double>& lambda_grid,
                                                     const Budget& budget);

}  // namespace capabp
