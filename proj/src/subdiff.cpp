#include "capabp/subdiff.hpp"

#include <algorithm>
#include <cmath>

#include "capabp/errors.hpp"

namespace capabp {

void DiscreteBoundaryFunction::validate(Rng* rng, int support_samples) const {
    const int n = size();
    if (n == 0) throw DomainError("boundary function: no sites");
    if (static_cast<int>(values.size()) != n || static_cast<int>(normals.size()) != n)
        throw DomainError("boundary function: sites/values/normals size mismatch");
    const int d = dim();
    for (int i = 0; i < n; ++i) {
        if (sites[i].dim() != d || normals[i].dim() != d)
            throw DomainError("boundary function: dimension mismatch");
        if (!finite(sites[i]) || !std::isfinite(values[i]))
            throw DomainError("boundary function: non-finite data");
        if (std::abs(norm(normals[i]) - 1.0) > 1e-12)
            throw DomainError("boundary function: normal is not unit length");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dist(sites[i], sites[j]) <= 1e-9)
                throw DomainError("boundary function: sites are not pairwise distinct");
    // supporting-normal test against the other sites
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dot(normals[i], sites[j] - sites[i]) > 1e-12)
                throw DomainError("boundary function: normal fails the support inequality");
    if (body) {
        for (int i = 0; i < n; ++i)
            if (!body->on_boundary(sites[i], 1e-9))
                throw DomainError("boundary function: site is not on the body boundary");
        if (rng) {
            for (int s = 0; s < support_samples; ++s) {
                const Vec y = body->sample_point(*rng);
                for (int i = 0; i < n; ++i)
                    if (dot(normals[i], y - sites[i]) > 1e-12)
                        throw DomainError(
                            "boundary function: normal fails the support inequality on a "
                            "sampled body point");
            }
        }
    }
}

namespace {

// Projection onto violated halfspaces from a few starts; finds a strictly
// feasible point when the cell has interior. Cells of a finite system can
// be genuinely empty, in which case the violation stalls above zero.
std::optional<Vec> feasibility_search(const SubdifferentialCell& cell, const Vec& normal,
                                      int iterations) {
    if (cell.constraints.empty()) return Vec::zero(normal.dim());
    const int d = normal.dim();
    std::optional<Vec> best;
    double best_v = std::numeric_limits<double>::infinity();
    for (int start = 0; start < 3; ++start) {
        Vec x = Vec::zero(d);
        if (start == 1) x = normal * 10.0;
        if (start == 2) x = normal * 1000.0;
        for (int it = 0; it < iterations; ++it) {
            double worst = -std::numeric_limits<double>::infinity();
            const CellConstraint* wc = nullptr;
            for (const auto& c : cell.constraints) {
                const double v = dot(c.direction, x) - c.bound;
                if (v > worst) {
                    worst = v;
                    wc = &c;
                }
            }
            if (worst < best_v) {
                best_v = worst;
                best = x;
            }
            if (worst <= -1e-7) return x;  // strictly inside
            const double n2 = norm2(wc->direction);
            if (n2 <= 0.0) break;
            // over-relaxed projection past the violated hyperplane
            x -= wc->direction * (1.5 * (worst + 1e-6) / n2);
        }
    }
    if (best_v <= 1e-10) return best;
    return std::nullopt;
}

}  // namespace

Partition build_partition(const DiscreteBoundaryFunction& f, const BuildOptions& opts) {
    const int n = f.size();
    if (n == 0) throw DomainError("build_partition: no sites");
    Partition p;
    p.fn = f;
    p.cells.resize(n);
    for (int i = 0; i < n; ++i) {
        auto& cell = p.cells[i];
        cell.site_index = i;
        cell.constraints.reserve(n - 1);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            cell.constraints.push_back({f.sites[j] - f.sites[i], f.values[j] - f.values[i], j});
        }
        if (opts.prune_redundant) {
            // drop a constraint when a positive multiple of another one is
            // at least as tight in the same direction
            auto& cs = cell.constraints;
            std::vector<bool> keep(cs.size(), true);
            for (size_t a = 0; a < cs.size(); ++a) {
                for (size_t b = 0; b < cs.size(); ++b) {
                    if (a == b || !keep[a] || !keep[b]) continue;
                    const double na = norm(cs[a].direction), nb = norm(cs[b].direction);
                    if (na <= 0.0 || nb <= 0.0) continue;
                    const double cosab = dot(cs[a].direction, cs[b].direction) / (na * nb);
                    if (cosab >= 1.0 - 1e-14 && cs[b].bound / nb <= cs[a].bound / na)
                        keep[a] = false;
                }
            }
            std::vector<CellConstraint> pruned;
            for (size_t a = 0; a < cs.size(); ++a)
                if (keep[a]) pruned.push_back(cs[a]);
            cs = std::move(pruned);
            cell.redundant_removed = true;
        }
        if (opts.find_witnesses) {
            cell.witness = feasibility_search(cell, f.normals[i], opts.witness_iterations);
            cell.feasible = cell.witness.has_value();
        }
    }
    return p;
}

LocateResult Partition::locate(const Vec& xi, double tol) const {
    const int n = size();
    int best = 0;
    double best_v = std::numeric_limits<double>::infinity();
    double second = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        const double v = fn.values[i] - dot(xi, fn.sites[i]);
        if (v < best_v) {
            second = best_v;
            best_v = v;
            best = i;
        } else if (v < second) {
            second = v;
        }
    }
    return {best, n > 1 && (second - best_v) <= tol};
}

HalfLineCertificate verify_half_line(const Partition& p, double tol) {
    HalfLineCertificate cert;
    cert.per_cell_margin.resize(p.size(), -std::numeric_limits<double>::infinity());
    for (int i = 0; i < p.size(); ++i) {
        const Vec& nu = p.normal(i);
        for (const auto& c : p.cells[i].constraints) {
            const double m = dot(c.direction, nu);
            cert.per_cell_margin[i] = std::max(cert.per_cell_margin[i], m);
            if (m > tol) {
                cert.pass = false;
                cert.failures.push_back({i, c.other_site, m});
            }
        }
        cert.worst_margin = std::max(cert.worst_margin, cert.per_cell_margin[i]);
    }
    return cert;
}

}  // namespace capabp
