#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "capabp/convex_body.hpp"
#include "capabp/vec.hpp"

namespace capabp {

// Finite site set on the boundary of a convex body with values and
// supporting normals.
struct DiscreteBoundaryFunction {
    std::vector<Vec> sites;
    std::vector<double> values;
    std::vector<Vec> normals;
    const ConvexBody* body = nullptr;  // optional; enables validation

    int size() const { return static_cast<int>(sites.size()); }
    int dim() const { return sites.empty() ? 0 : sites[0].dim(); }

    // Checks the type invariants: sites on the boundary (1e-9), pairwise
    // distinct (1e-9), normals unit and supporting against the other sites
    // plus `support_samples` random points of the body.
    void validate(Rng* rng = nullptr, int support_samples = 256) const;
};

// One linear constraint direction . xi <= bound of a cell, kept in raw
// site/value differences so membership is an exact finite check.
struct CellConstraint {
    Vec direction;  // x_j - x_i
    double bound;   // v_j - v_i
    int other_site;
};

// Polyhedral cell of one site, in H-representation only.
struct SubdifferentialCell {
    int site_index = 0;
    std::vector<CellConstraint> constraints;
    bool redundant_removed = false;
    bool feasible = true;                // interior witness found
    std::optional<Vec> witness;          // strictly feasible point, if found

    double max_violation(const Vec& xi) const {
        double worst = -std::numeric_limits<double>::infinity();
        for (const auto& c : constraints)
            worst = std::max(worst, dot(c.direction, xi) - c.bound);
        return constraints.empty() ? -std::numeric_limits<double>::infinity() : worst;
    }
    bool contains(const Vec& xi, double tol = 0.0) const { return max_violation(xi) <= tol; }
};

struct LocateResult {
    int site_index = 0;
    bool on_boundary = false;
};

// The full partition: cells plus the data needed for point location.
struct Partition {
    DiscreteBoundaryFunction fn;
    std::vector<SubdifferentialCell> cells;

    int size() const { return static_cast<int>(cells.size()); }
    int dim() const { return fn.dim(); }
    const Vec& normal(int i) const { return fn.normals[i]; }

    // Lowest-index cell containing xi. Containment is evaluated through the
    // equivalent form "i minimizes v_i - xi . x_i", which is exact, O(n) and
    // covers every xi. on_boundary flags a tie within tol (a constraint of
    // the chosen cell is active).
    LocateResult locate(const Vec& xi, double tol = 1e-10) const;
};

struct BuildOptions {
    bool prune_redundant = false;   // drop constraints dominated by a parallel one
    bool find_witnesses = false;    // run the feasibility search per cell
    int witness_iterations = 2000;
};

// Builds one cell per site from the raw definition. Cells may be empty
// (a site whose value lies strictly above the lower envelope of the others
// supports no slope); coverage of R^N by the remaining cells still holds.
Partition build_partition(const DiscreteBoundaryFunction& f, const BuildOptions& opts = {});

struct HalfLineFailure {
    int site = 0;
    int other = 0;
    double margin = 0.0;
};

// Certificate that every constraint direction of every cell makes a
// nonpositive inner product with the cell's normal; this is exactly the
// statement that xi in cell implies xi + t * normal stays in the cell.
struct HalfLineCertificate {
    bool pass = true;
    double worst_margin = -std::numeric_limits<double>::infinity();
    std::vector<double> per_cell_margin;
    std::vector<HalfLineFailure> failures;
};

HalfLineCertificate verify_half_line(const Partition& p, double tol = 1e-12);

}  // namespace capabp
