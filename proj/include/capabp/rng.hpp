#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "capabp/vec.hpp"

namespace capabp {

// splitmix64 finalizer; used to derive independent substreams from
// (seed, block index) so results do not depend on scheduling.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

// Deterministic RNG. Gaussians come from Box-Muller on explicit 53-bit
// uniforms so streams do not depend on the standard library's unspecified
// normal_distribution implementation.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // in [0,1)
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    std::uint64_t next_u64() { return gen_(); }

    int uniform_int(int n) { return static_cast<int>(uniform01() * n) % n; }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1;
        do {
            u1 = uniform01();
        } while (u1 <= 0.0);
        const double u2 = uniform01();
        const double m = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = m * std::sin(a);
        have_spare_ = true;
        return m * std::cos(a);
    }

    Vec unit_vector(int dim) {
        Vec v(dim);
        double s = 0.0;
        do {
            for (int i = 0; i < dim; ++i) v[i] = gaussian();
            s = norm(v);
        } while (s < 1e-100);
        return v / s;
    }

    // uniform in the unit ball: gaussian direction, radius from U^{1/N}
    Vec in_unit_ball(int dim) {
        Vec v = unit_vector(dim);
        const double r = std::pow(uniform01(), 1.0 / dim);
        return v * r;
    }

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace capabp
