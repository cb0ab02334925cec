#pragma once

#include <optional>
#include <string>
#include <vector>

#include "capabp/rng.hpp"
#include "capabp/vec.hpp"

namespace capabp {

enum class BodyKind { polytope, ball, halfspace, wedge };

std::string body_kind_name(BodyKind k);
BodyKind body_kind_from_name(const std::string& name);

// {x : normal . x <= offset}, |normal| = 1
struct Halfspace {
    Vec normal;
    double offset = 0.0;
};

// Closed convex set with nonempty interior, given as a halfspace
// intersection (polytope / halfspace / wedge) or as a ball. The interior
// point stored at construction certifies nonempty interior.
class ConvexBody {
  public:
    static ConvexBody make_halfspace(const Vec& normal, double offset);
    static ConvexBody make_ball(const Vec& center, double radius);
    static ConvexBody make_wedge(const Halfspace& a, const Halfspace& b, const Vec& interior);
    static ConvexBody make_polytope(std::vector<Halfspace> faces, const Vec& interior);

    // 2D wedge with apex at the origin opening downward; the interior angle
    // of the wedge is `opening` in (0, pi). Face normals tilt +-(pi-opening)/2
    // from vertical.
    static ConvexBody make_wedge_2d(double opening);

    BodyKind kind() const { return kind_; }
    int dim() const { return dim_; }
    const std::vector<Halfspace>& faces() const { return faces_; }
    const Vec& ball_center() const { return center_; }
    double ball_radius() const { return radius_; }
    const Vec& interior_point() const { return interior_; }

    bool contains(const Vec& x, double tol = 1e-12) const;

    // dist(x, C); zero inside. Polytopal kinds use exact projection by
    // active-set enumeration (faces are few).
    double distance(const Vec& x) const;

    bool on_boundary(const Vec& x, double tol = 1e-9) const;

    // Face indices active at x within tol (polytopal kinds only).
    std::vector<int> active_faces(const Vec& x, double tol = 1e-9) const;

    // Outward unit normal at boundary point x. Polytopal kinds require a
    // face id when x lies on a ridge (AmbiguityError otherwise); any valid
    // supporting halfspace normal is acceptable there.
    Vec outward_normal(const Vec& x, int face_id = -1) const;

    // Random point of C, used by support-inequality checks. Unbounded kinds
    // are sampled within `extent` of the interior point.
    Vec sample_point(Rng& rng, double extent = 10.0) const;

    struct BoundarySample {
        Vec point;
        Vec normal;
        int face_id = -1;  // -1 for ball
    };

    // Random boundary site with a valid supporting normal. For halfspace-
    // represented kinds the site is drawn on a uniformly chosen face via
    // interior ray casting plus tangential spread.
    BoundarySample sample_boundary(Rng& rng, double spread = 1.0) const;

    // Same, restricted to one face (polytopal kinds).
    BoundarySample sample_on_face(Rng& rng, int face_id, double spread = 1.0) const;

  private:
    BodyKind kind_ = BodyKind::halfspace;
    int dim_ = 0;
    std::vector<Halfspace> faces_;  // polytope / halfspace / wedge
    Vec center_;                    // ball
    double radius_ = 0.0;           // ball
    Vec interior_;

    double ray_exit(const Vec& p, const Vec& u, double cap_at) const;
};

// sup over a deterministic grid of the window of |dist(x,C1) - dist(x,C2)|.
double kuratowski_distance(const ConvexBody& c1, const ConvexBody& c2, const Vec& window_lo,
                           const Vec& window_hi, int grid_per_axis = 64);

}  // namespace capabp
