#include "capabp/measures.hpp"

#include <algorithm>
#include <cmath>

#include "capabp/cap_geometry.hpp"
#include "capabp/errors.hpp"
#include "capabp/rng.hpp"

namespace capabp {

namespace {
constexpr std::int64_t kBlockSize = 1 << 16;
constexpr std::int64_t kMinMcSamples = 10'000;
}  // namespace

std::string measure_method_name(MeasureMethod m) {
    return m == MeasureMethod::exact2d ? "exact2d" : "montecarlo";
}

MeasureEstimate pooled(const std::vector<MeasureEstimate>& parts) {
    MeasureEstimate out;
    double var = 0.0;
    bool all_exact = true;
    for (const auto& e : parts) {
        out.value += e.value;
        var += e.half_width * e.half_width;
        out.samples += e.samples;
        out.warning = out.warning || e.warning;
        if (e.method == MeasureMethod::montecarlo) {
            all_exact = false;
            out.seed = out.seed == 0 ? e.seed : out.seed;
        }
    }
    out.half_width = std::sqrt(var);
    out.method = all_exact ? MeasureMethod::exact2d : MeasureMethod::montecarlo;
    return out;
}

// --- exact 2D primitives -------------------------------------------------

static double cross2(const P2& a, const P2& b) { return a.x * b.y - a.y * b.x; }
static double dot2(const P2& a, const P2& b) { return a.x * b.x + a.y * b.y; }

Polygon2 clip_halfplane(const Polygon2& poly, double nx, double ny, double b) {
    Polygon2 out;
    const int n = static_cast<int>(poly.size());
    if (n == 0) return out;
    out.reserve(n + 2);
    for (int i = 0; i < n; ++i) {
        const P2& p = poly[i];
        const P2& q = poly[(i + 1) % n];
        const double sp = nx * p.x + ny * p.y - b;
        const double sq = nx * q.x + ny * q.y - b;
        if (sp <= 0.0) out.push_back(p);
        if ((sp < 0.0 && sq > 0.0) || (sp > 0.0 && sq < 0.0)) {
            const double t = sp / (sp - sq);
            out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
        }
    }
    return out;
}

double polygon_area(const Polygon2& poly) {
    const int n = static_cast<int>(poly.size());
    double a = 0.0;
    for (int i = 0; i < n; ++i) a += cross2(poly[i], poly[(i + 1) % n]);
    return 0.5 * a;
}

namespace {

// signed circular-sector area between directions a and b
double sector_area(const P2& a, const P2& b, double r) {
    const double th = std::atan2(cross2(a, b), dot2(a, b));
    return 0.5 * r * r * th;
}

// signed area of triangle(0, a, b) ∩ disk(0, r)
double tri_disk_area(const P2& a, const P2& b, double r) {
    const double r2 = r * r;
    const double eps = r2 * 1e-14;
    const bool ain = dot2(a, a) <= r2 + eps;
    const bool bin = dot2(b, b) <= r2 + eps;
    if (ain && bin) return 0.5 * cross2(a, b);

    // segment-circle intersections: |a + t (b-a)|^2 = r^2
    const P2 d{b.x - a.x, b.y - a.y};
    const double q = dot2(d, d);
    const double w = dot2(a, d);
    const double c0 = dot2(a, a) - r2;
    const double disc = w * w - q * c0;
    if (q <= 0.0) return sector_area(a, b, r);

    auto point_at = [&](double t) { return P2{a.x + t * d.x, a.y + t * d.y}; };

    if (disc <= 0.0) return sector_area(a, b, r);
    const double sq = std::sqrt(disc);
    const double t1 = (-w - sq) / q;
    const double t2 = (-w + sq) / q;

    if (ain && !bin) {
        const double t = std::clamp(t2, 0.0, 1.0);
        const P2 p = point_at(t);
        return 0.5 * cross2(a, p) + sector_area(p, b, r);
    }
    if (!ain && bin) {
        const double t = std::clamp(t1, 0.0, 1.0);
        const P2 p = point_at(t);
        return sector_area(a, p, r) + 0.5 * cross2(p, b);
    }
    // both endpoints outside: the chord may still cross the disk
    if (t1 > 0.0 && t2 < 1.0 && t1 < t2) {
        const P2 p1 = point_at(t1);
        const P2 p2 = point_at(t2);
        return sector_area(a, p1, r) + 0.5 * cross2(p1, p2) + sector_area(p2, b, r);
    }
    return sector_area(a, b, r);
}

}  // namespace

double circle_polygon_area(const Polygon2& poly, double r) {
    const int n = static_cast<int>(poly.size());
    if (n < 3) return 0.0;
    double a = 0.0;
    for (int i = 0; i < n; ++i) a += tri_disk_area(poly[i], poly[(i + 1) % n], r);
    return a;
}

double cell_region_area_2d(const SubdifferentialCell& cell, double lambda, const Vec& nu,
                           double radius) {
    const double R = radius * 1.0000001 + 1e-12;
    Polygon2 poly{{-R, -R}, {R, -R}, {R, R}, {-R, R}};
    // the angle condition xi . nu > lambda, i.e. keep -nu . xi <= -lambda
    poly = clip_halfplane(poly, -nu[0], -nu[1], -lambda);
    for (const auto& c : cell.constraints) {
        poly = clip_halfplane(poly, c.direction[0], c.direction[1], c.bound);
        if (poly.empty()) return 0.0;
    }
    return std::max(0.0, circle_polygon_area(poly, radius));
}

// --- measures ------------------------------------------------------------

MeasureEstimate region_volume(const SubdifferentialCell& cell, double lambda, const Vec& nu,
                              double radius, const Budget& budget) {
    if (!(radius > 0.0)) throw DomainError("region_volume: radius must be positive");
    const int d = nu.dim();
    if (d == 2 && !budget.force_mc) {
        MeasureEstimate e;
        e.value = cell_region_area_2d(cell, lambda, nu, radius);
        e.method = MeasureMethod::exact2d;
        return e;
    }
    if (budget.samples < kMinMcSamples)
        throw DomainError("region_volume: Monte Carlo budget must be at least 10^4 samples");

    const double ref = unit_ball_volume(d) * std::pow(radius, d);
    std::int64_t hits = 0;
    std::int64_t done = 0;
    std::int64_t block = 0;
    while (done < budget.samples) {
        Rng rng(substream_seed(budget.seed, static_cast<std::uint64_t>(block)));
        const std::int64_t m = std::min(kBlockSize, budget.samples - done);
        for (std::int64_t s = 0; s < m; ++s) {
            Vec xi = rng.in_unit_ball(d) * radius;
            if (dot(xi, nu) > lambda && cell.contains(xi)) ++hits;
        }
        done += m;
        ++block;
    }
    const double p = static_cast<double>(hits) / static_cast<double>(done);
    MeasureEstimate e;
    e.value = p * ref;
    e.half_width = kConfidenceZ * std::sqrt(p * (1.0 - p) / static_cast<double>(done)) * ref;
    e.method = MeasureMethod::montecarlo;
    e.samples = done;
    e.seed = budget.seed;
    if (budget.target_half_width && e.half_width > *budget.target_half_width) e.warning = true;
    return e;
}

MeasureEstimate sphere_region_measure(const Partition& p, SpherePredicate pred, double lambda,
                                      double radius, const Budget& budget) {
    if (!(radius > 0.0)) throw DomainError("sphere_region_measure: radius must be positive");
    const int d = p.dim();
    const double ref = sphere_area(d) * std::pow(radius, d - 1);
    std::int64_t hits = 0, accepted = 0, flagged = 0, done = 0, block = 0;
    while (done < budget.samples) {
        Rng rng(substream_seed(budget.seed, static_cast<std::uint64_t>(block)));
        const std::int64_t m = std::min(kBlockSize, budget.samples - done);
        for (std::int64_t s = 0; s < m; ++s) {
            const Vec xi = rng.unit_vector(d) * radius;
            const LocateResult loc = p.locate(xi);
            if (loc.on_boundary) {
                ++flagged;
                continue;
            }
            ++accepted;
            const double t = dot(xi, p.normal(loc.site_index));
            if (pred == SpherePredicate::below ? (t < lambda) : (t > lambda)) ++hits;
        }
        done += m;
        ++block;
    }
    if (flagged > done / 100)
        throw DegenerateConfigError(
            "sphere_region_measure: more than 1% of samples landed on cell boundaries");
    MeasureEstimate e;
    const double q = accepted > 0 ? static_cast<double>(hits) / accepted : 0.0;
    e.value = q * ref;
    e.half_width =
        accepted > 0 ? kConfidenceZ * std::sqrt(q * (1.0 - q) / accepted) * ref : ref;
    e.method = MeasureMethod::montecarlo;
    e.samples = accepted;
    e.seed = budget.seed;
    if (budget.target_half_width && e.half_width > *budget.target_half_width) e.warning = true;
    return e;
}

std::vector<ProfilePoint> restricted_measure_profile(const Partition& p,
                                                     const std::vector<double>& lambda_grid,
                                                     const Budget& budget) {
    for (size_t k = 0; k + 1 < lambda_grid.size(); ++k)
        if (!(lambda_grid[k] < lambda_grid[k + 1]))
            throw DomainError("restricted_measure_profile: grid must be sorted ascending");
    for (double l : lambda_grid)
        if (!(l > -1.0 && l < 1.0))
            throw DomainError("restricted_measure_profile: grid values must be in (-1,1)");

    const int d = p.dim();
    const int K = static_cast<int>(lambda_grid.size());
    std::vector<ProfilePoint> out(K);
    for (int k = 0; k < K; ++k) out[k].lambda = lambda_grid[k];

    if (d == 2 && !budget.force_mc) {
        for (int k = 0; k < K; ++k) {
            std::vector<MeasureEstimate> parts;
            parts.reserve(p.size());
            for (int i = 0; i < p.size(); ++i)
                parts.push_back(
                    region_volume(p.cells[i], lambda_grid[k], p.normal(i), 1.0, budget));
            out[k].estimate = pooled(parts);
        }
        return out;
    }

    const double ref = unit_ball_volume(d);
    std::vector<std::int64_t> hits(K, 0);
    std::int64_t done = 0, block = 0;
    while (done < budget.samples) {
        Rng rng(substream_seed(budget.seed, static_cast<std::uint64_t>(block)));
        const std::int64_t m = std::min(kBlockSize, budget.samples - done);
        for (std::int64_t s = 0; s < m; ++s) {
            const Vec xi = rng.in_unit_ball(d);
            const LocateResult loc = p.locate(xi);
            const double t = dot(xi, p.normal(loc.site_index));
            // grid ascending: the sample counts for every lambda below t
            for (int k = 0; k < K && lambda_grid[k] < t; ++k) ++hits[k];
        }
        done += m;
        ++block;
    }
    for (int k = 0; k < K; ++k) {
        const double q = static_cast<double>(hits[k]) / static_cast<double>(done);
        auto& e = out[k].estimate;
        e.value = q * ref;
        e.half_width = kConfidenceZ * std::sqrt(q * (1.0 - q) / static_cast<double>(done)) * ref;
        e.method = MeasureMethod::montecarlo;
        e.samples = done;
        e.seed = budget.seed;
    }
    return out;
}

}  // namespace capabp
