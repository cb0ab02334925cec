#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <initializer_list>
#include <vector>

namespace capabp {

// Maximum ambient dimension with inline storage. Exact formulas are only
// used up to N=6; Monte Carlo paths work for any N up to this bound.
inline constexpr int kMaxDim = 8;

// Dimension-generic point/vector, value type, no heap.
struct Vec {
    std::array<double, kMaxDim> c{};
    int n = 0;

    Vec() = default;
    explicit Vec(int dim) : n(dim) { assert(dim >= 1 && dim <= kMaxDim); }
    Vec(std::initializer_list<double> xs) : n(static_cast<int>(xs.size())) {
        assert(n >= 1 && n <= kMaxDim);
        int i = 0;
        for (double x : xs) c[i++] = x;
    }

    static Vec zero(int dim) { return Vec(dim); }
    static Vec axis(int i, int dim) {
        Vec v(dim);
        v.c[i] = 1.0;
        return v;
    }
    static Vec from(const std::vector<double>& xs) {
        Vec v(static_cast<int>(xs.size()));
        for (int i = 0; i < v.n; ++i) v.c[i] = xs[i];
        return v;
    }

    int dim() const { return n; }
    double& operator[](int i) { return c[i]; }
    double operator[](int i) const { return c[i]; }

    std::vector<double> to_vector() const { return std::vector<double>(c.begin(), c.begin() + n); }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < n; ++i) c[i] += o.c[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < n; ++i) c[i] -= o.c[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (int i = 0; i < n; ++i) c[i] *= s;
        return *this;
    }
};

inline Vec operator+(Vec a, const Vec& b) { return a += b; }
inline Vec operator-(Vec a, const Vec& b) { return a -= b; }
inline Vec operator*(double s, Vec a) { return a *= s; }
inline Vec operator*(Vec a, double s) { return a *= s; }
inline Vec operator/(Vec a, double s) { return a *= (1.0 / s); }
inline Vec operator-(Vec a) { return a *= -1.0; }

inline double dot(const Vec& a, const Vec& b) {
    assert(a.n == b.n);
    double s = 0.0;
    for (int i = 0; i < a.n; ++i) s += a.c[i] * b.c[i];
    return s;
}

inline double norm2(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }
inline double dist(const Vec& a, const Vec& b) { return norm(a - b); }

inline Vec normalized(const Vec& a) {
    const double s = norm(a);
    assert(s > 0.0);
    return a / s;
}

inline bool finite(const Vec& a) {
    for (int i = 0; i < a.n; ++i)
        if (!std::isfinite(a.c[i])) return false;
    return true;
}

}  // namespace capabp
