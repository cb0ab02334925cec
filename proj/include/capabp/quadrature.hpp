#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <utility>

namespace capabp {

// Adaptive Gauss-Kronrod (G7/K15) on [a,b]. `tol` is the relative error
// target; 1e-12 absolute is the fallback floor for tiny integrals.
template <class F>
double integrate(F&& f, double a, double b, double tol = 1e-12, double* err_out = nullptr) {
    if (a == b) {
        if (err_out) *err_out = 0.0;
        return 0.0;
    }
    double err = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        std::forward<F>(f), a, b, 14, tol, &err);
    if (err_out) *err_out = err;
    return v;
}

}  // namespace capabp
