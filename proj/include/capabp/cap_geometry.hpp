#pragma once

#include "capabp/vec.hpp"

namespace capabp {

// Lebesgue volume of the N-dimensional unit ball.
double unit_ball_volume(int dim);

// Surface measure of the unit sphere in R^N, i.e. N * unit_ball_volume(N).
double sphere_area(int dim);

// Radius of the waist circle of the unit spherical cap at height lambda.
inline double cap_waist_radius(double lambda) { return std::sqrt(1.0 - lambda * lambda); }

// Solid spherical cap {x in B_radius : x . e_N > lambda * radius}.
struct SphericalCap {
    double lambda = 0.0;  // in (-1, 1)
    double radius = 1.0;  // > 0
    int dim = 2;
};

// Volume of the unit-radius cap at height lambda, by adaptive quadrature.
double cap_volume_unit(double lambda, int dim);

// Volume of a general cap: radius^N * cap_volume_unit(lambda, N).
double cap_volume(const SphericalCap& cap);

enum class CapSide { below, above };

// Surface measure on the unit sphere of the cap below (or above) height
// lambda. below + above = sphere_area(N).
double cap_surface_measure(double lambda, int dim, CapSide side);

}  // namespace capabp
