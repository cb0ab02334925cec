#include "capabp/cap_geometry.hpp"

#include <cmath>

#include "capabp/errors.hpp"
#include "capabp/quadrature.hpp"

namespace capabp {

double unit_ball_volume(int dim) {
    if (dim < 1) throw DomainError("unit_ball_volume: dim must be >= 1");
    return std::pow(M_PI, 0.5 * dim) / std::tgamma(0.5 * dim + 1.0);
}

double sphere_area(int dim) { return dim * unit_ball_volume(dim); }

double cap_volume_unit(double lambda, int dim) {
    if (!(lambda > -1.0 && lambda < 1.0))
        throw DomainError("cap_volume: lambda must be in (-1,1)");
    if (dim < 2) throw DomainError("cap_volume: dim must be >= 2");
    // integral over heights t in (lambda, 1) of slice volumes
    // w_{N-1} (1-t^2)^{(N-1)/2}; substitution t = sin(s) makes the
    // integrand a smooth cosine power.
    const double wlow = unit_ball_volume(dim - 1);
    const double a = std::asin(lambda);
    const double val = integrate(
        [dim](double s) { return std::pow(std::cos(s), dim); }, a, 0.5 * M_PI, 1e-13);
    return wlow * val;
}

double cap_volume(const SphericalCap& cap) {
    if (!(cap.radius > 0.0)) throw DomainError("cap_volume: radius must be positive");
    return std::pow(cap.radius, cap.dim) * cap_volume_unit(cap.lambda, cap.dim);
}

double cap_surface_measure(double lambda, int dim, CapSide side) {
    if (!(lambda >= -1.0 && lambda <= 1.0))
        throw DomainError("cap_surface_measure: lambda must be in [-1,1]");
    if (dim < 2) throw DomainError("cap_surface_measure: dim must be >= 2");
    const double total = sphere_area(dim);
    // zone below height lambda: (N-1) w_{N-1} * int_{-1}^{lambda} (1-t^2)^{(N-3)/2} dt,
    // with t = sin(s) again.
    const double coeff = (dim - 1) * unit_ball_volume(dim - 1);
    const double b = std::asin(lambda);
    const double below = coeff * integrate(
        [dim](double s) {
            return std::pow(std::cos(s), dim - 2);
        }, -0.5 * M_PI, b, 1e-13);
    if (side == CapSide::below) return std::max(0.0, below);
    return std::max(0.0, total - below);
}

}  // namespace capabp
