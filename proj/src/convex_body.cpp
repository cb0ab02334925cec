#include "capabp/convex_body.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "capabp/errors.hpp"

namespace capabp {

namespace {

constexpr double kUnitTol = 1e-12;

Vec checked_unit(const Vec& v, const char* who) {
    const double s = norm(v);
    if (!(s > 0.0) || !finite(v)) throw DomainError(std::string(who) + ": bad normal");
    Vec u = v / s;
    if (std::abs(norm(u) - 1.0) > kUnitTol) u = u / norm(u);
    return u;
}

}  // namespace

std::string body_kind_name(BodyKind k) {
    switch (k) {
        case BodyKind::polytope: return "polytope";
        case BodyKind::ball: return "ball";
        case BodyKind::halfspace: return "halfspace";
        case BodyKind::wedge: return "wedge";
    }
    return "?";
}

BodyKind body_kind_from_name(const std::string& name) {
    if (name == "polytope") return BodyKind::polytope;
    if (name == "ball") return BodyKind::ball;
    if (name == "halfspace") return BodyKind::halfspace;
    if (name == "wedge") return BodyKind::wedge;
    throw DomainError("unknown body kind: " + name);
}

ConvexBody ConvexBody::make_halfspace(const Vec& normal, double offset) {
    ConvexBody b;
    b.kind_ = BodyKind::halfspace;
    b.dim_ = normal.dim();
    Vec u = checked_unit(normal, "halfspace");
    b.faces_ = {Halfspace{u, offset}};
    b.interior_ = u * (offset - 1.0);
    return b;
}

ConvexBody ConvexBody::make_ball(const Vec& center, double radius) {
    if (!(radius > 0.0)) throw DomainError("ball: radius must be positive");
    ConvexBody b;
    b.kind_ = BodyKind::ball;
    b.dim_ = center.dim();
    b.center_ = center;
    b.radius_ = radius;
    b.interior_ = center;
    return b;
}

ConvexBody ConvexBody::make_wedge(const Halfspace& a, const Halfspace& b, const Vec& interior) {
    ConvexBody w;
    w.kind_ = BodyKind::wedge;
    w.dim_ = a.normal.dim();
    w.faces_ = {Halfspace{checked_unit(a.normal, "wedge"), a.offset},
                Halfspace{checked_unit(b.normal, "wedge"), b.offset}};
    w.interior_ = interior;
    if (!w.contains(interior, -1e-9))
        throw DomainError("wedge: interior point is not strictly inside");
    return w;
}

ConvexBody ConvexBody::make_wedge_2d(double opening) {
    if (!(opening > 0.0 && opening < M_PI))
        throw DomainError("wedge: opening angle must be in (0, pi)");
    const double alpha = 0.5 * (M_PI - opening);
    Halfspace h1{Vec{std::sin(alpha), std::cos(alpha)}, 0.0};
    Halfspace h2{Vec{-std::sin(alpha), std::cos(alpha)}, 0.0};
    return make_wedge(h1, h2, Vec{0.0, -1.0});
}

ConvexBody ConvexBody::make_polytope(std::vector<Halfspace> faces, const Vec& interior) {
    if (faces.empty()) throw DomainError("polytope: needs at least one face");
    ConvexBody p;
    p.kind_ = BodyKind::polytope;
    p.dim_ = interior.dim();
    for (auto& f : faces) f.normal = checked_unit(f.normal, "polytope");
    p.faces_ = std::move(faces);
    p.interior_ = interior;
    if (!p.contains(interior, -1e-9))
        throw DomainError("polytope: interior point is not strictly inside");
    return p;
}

bool ConvexBody::contains(const Vec& x, double tol) const {
    if (kind_ == BodyKind::ball) return dist(x, center_) <= radius_ + tol;
    for (const auto& f : faces_)
        if (dot(f.normal, x) - f.offset > tol) return false;
    return true;
}

double ConvexBody::distance(const Vec& x) const {
    if (kind_ == BodyKind::ball) return std::max(0.0, dist(x, center_) - radius_);
    if (contains(x, 0.0)) return 0.0;
    if (faces_.size() == 1) return std::max(0.0, dot(faces_[0].normal, x) - faces_[0].offset);

    // Exact projection onto the halfspace intersection: enumerate active
    // subsets, project onto their affine hull, keep feasible candidates.
    const int m = static_cast<int>(faces_.size());
    const int d = dim_;
    if (m > 20) throw InternalError("distance: too many faces for subset enumeration");
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> subset;
    auto consider = [&](const std::vector<int>& s) {
        const int k = static_cast<int>(s.size());
        Eigen::MatrixXd A(k, d);
        Eigen::VectorXd rhs(k);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < d; ++j) A(i, j) = faces_[s[i]].normal[j];
            rhs(i) = dot(faces_[s[i]].normal, x) - faces_[s[i]].offset;
        }
        Eigen::MatrixXd G = A * A.transpose();
        Eigen::FullPivLU<Eigen::MatrixXd> lu(G);
        if (!lu.isInvertible()) return;
        Eigen::VectorXd mu = lu.solve(rhs);
        Vec y = x;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < d; ++j) y[j] -= mu(i) * faces_[s[i]].normal[j];
        if (!contains(y, 1e-9)) return;
        best = std::min(best, dist(x, y));
    };
    std::function<void(int, int)> rec = [&](int start, int want) {
        if (want == 0) {
            consider(subset);
            return;
        }
        for (int i = start; i <= m - want; ++i) {
            subset.push_back(i);
            rec(i + 1, want - 1);
            subset.pop_back();
        }
    };
    for (int k = 1; k <= std::min(d, m); ++k) rec(0, k);
    if (!std::isfinite(best)) throw InternalError("distance: projection enumeration failed");
    return best;
}

bool ConvexBody::on_boundary(const Vec& x, double tol) const {
    if (kind_ == BodyKind::ball) return std::abs(dist(x, center_) - radius_) <= tol;
    if (!contains(x, tol)) return distance(x) <= tol;
    // inside: distance to boundary is the smallest face slack (faces are
    // irredundant by construction)
    double slack = std::numeric_limits<double>::infinity();
    for (const auto& f : faces_) slack = std::min(slack, f.offset - dot(f.normal, x));
    return slack <= tol;
}

std::vector<int> ConvexBody::active_faces(const Vec& x, double tol) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(faces_.size()); ++i)
        if (std::abs(dot(faces_[i].normal, x) - faces_[i].offset) <= tol) out.push_back(i);
    return out;
}

Vec ConvexBody::outward_normal(const Vec& x, int face_id) const {
    if (!on_boundary(x, 1e-9)) throw DomainError("outward_normal: point is not on the boundary");
    if (kind_ == BodyKind::ball) return normalized(x - center_);
    if (face_id >= 0) {
        if (face_id >= static_cast<int>(faces_.size()))
            throw DomainError("outward_normal: face id out of range");
        if (std::abs(dot(faces_[face_id].normal, x) - faces_[face_id].offset) > 1e-9)
            throw DomainError("outward_normal: face is not active at the point");
        return faces_[face_id].normal;
    }
    const auto act = active_faces(x);
    if (act.empty()) throw DomainError("outward_normal: no active face at boundary point");
    if (act.size() > 1)
        throw AmbiguityError("outward_normal: ridge point needs an explicit face id");
    return faces_[act[0]].normal;
}

double ConvexBody::ray_exit(const Vec& p, const Vec& u, double cap_at) const {
    if (kind_ == BodyKind::ball) {
        const Vec q = p - center_;
        const double w = dot(u, q);
        const double c = norm2(q) - radius_ * radius_;
        const double disc = w * w - c;
        if (disc <= 0.0) return cap_at;
        return std::min(cap_at, -w + std::sqrt(disc));
    }
    double t = cap_at;
    for (const auto& f : faces_) {
        const double du = dot(f.normal, u);
        if (du > 1e-14) t = std::min(t, (f.offset - dot(f.normal, p)) / du);
    }
    return std::max(0.0, t);
}

Vec ConvexBody::sample_point(Rng& rng, double extent) const {
    const Vec u = rng.unit_vector(dim_);
    const double t = ray_exit(interior_, u, extent);
    return interior_ + u * (rng.uniform01() * 0.999 * t);
}

ConvexBody::BoundarySample ConvexBody::sample_boundary(Rng& rng, double spread) const {
    if (kind_ == BodyKind::ball) {
        const Vec u = rng.unit_vector(dim_);
        return {center_ + u * radius_, u, -1};
    }
    const int f = rng.uniform_int(static_cast<int>(faces_.size()));
    return sample_on_face(rng, f, spread);
}

ConvexBody::BoundarySample ConvexBody::sample_on_face(Rng& rng, int face_id,
                                                      double spread) const {
    if (kind_ == BodyKind::ball) return sample_boundary(rng, spread);
    if (face_id < 0 || face_id >= static_cast<int>(faces_.size()))
        throw DomainError("sample_on_face: face id out of range");
    const Vec a = faces_[face_id].normal;
    const double b = faces_[face_id].offset;

    // Anchor: cast a ray from the interior point roughly along the face
    // normal until it exits through this face.
    Vec anchor;
    bool found = false;
    double wobble = 0.0;
    for (int attempt = 0; attempt < 200 && !found; ++attempt) {
        Vec u = a;
        if (wobble > 0.0) {
            Vec g = rng.unit_vector(dim_);
            u = normalized(a + g * wobble);
        }
        const double t = ray_exit(interior_, u, 1e6);
        const Vec hit = interior_ + u * t;
        if (std::abs(dot(a, hit) - b) <= 1e-9) {
            anchor = hit;
            found = true;
        }
        wobble = std::min(1.0, wobble + 0.05);
    }
    if (!found) throw InternalError("sample_on_face: could not reach the requested face");
    // exact snap onto the face plane
    anchor -= a * (dot(a, anchor) - b);

    // Tangential spread within the face.
    Vec w = rng.unit_vector(dim_);
    w -= a * dot(a, w);
    const double wn = norm(w);
    if (wn < 1e-9) return {anchor, a, face_id};
    w = w / wn;
    double tmax = spread;
    for (int j = 0; j < static_cast<int>(faces_.size()); ++j) {
        if (j == face_id) continue;
        const double du = dot(faces_[j].normal, w);
        if (du > 1e-14)
            tmax = std::min(tmax, (faces_[j].offset - dot(faces_[j].normal, anchor)) / du);
    }
    const Vec p = anchor + w * (rng.uniform01() * 0.9 * std::max(0.0, tmax));
    return {p - a * (dot(a, p) - b), a, face_id};
}

double kuratowski_distance(const ConvexBody& c1, const ConvexBody& c2, const Vec& window_lo,
                           const Vec& window_hi, int grid_per_axis) {
    const int d = window_lo.dim();
    if (d != window_hi.dim() || d != c1.dim() || d != c2.dim())
        throw DomainError("kuratowski_distance: dimension mismatch");
    for (int i = 0; i < d; ++i)
        if (!(window_hi[i] > window_lo[i]))
            throw DomainError("kuratowski_distance: window must have positive volume");
    long total = 1;
    for (int i = 0; i < d; ++i) total *= grid_per_axis;
    double sup = 0.0;
    Vec x(d);
    for (long idx = 0; idx < total; ++idx) {
        long rem = idx;
        for (int i = 0; i < d; ++i) {
            const int gi = static_cast<int>(rem % grid_per_axis);
            rem /= grid_per_axis;
            x[i] = window_lo[i] +
                   (window_hi[i] - window_lo[i]) * (gi + 0.5) / grid_per_axis;
        }
        sup = std::max(sup, std::abs(c1.distance(x) - c2.distance(x)));
    }
    return sup;
}

}  // namespace capabp
