#include "cubesurf/geometry.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "cubesurf/error.hpp"

namespace cubesurf {

SegmentClearance segment_clearance(const Vec3& a0, const Vec3& a1, const Vec3& b0, const Vec3& b1) {
  Vec3 d1 = a1 - a0;
  Vec3 d2 = b1 - b0;
  Vec3 r = a0 - b0;
  double a = norm2(d1);
  double e = norm2(d2);
  if (a <= kEpsGeom * kEpsGeom || e <= kEpsGeom * kEpsGeom)
    fail(ErrorCode::DegenerateEdge, "segment shorter than tolerance");

  double f = dot(d2, r);
  double c = dot(d1, r);
  double b = dot(d1, d2);
  double denom = a * e - b * b;

  double s = 0;
  if (denom > 0) s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
  double t = (b * s + f) / e;
  if (t < 0) {
    t = 0;
    s = std::clamp(-c / a, 0.0, 1.0);
  } else if (t > 1) {
    t = 1;
    s = std::clamp((b - c) / a, 0.0, 1.0);
  }

  Vec3 pa = a0 + d1 * s;
  Vec3 pb = b0 + d2 * t;
  return {norm(pa - pb), pa, pb};
}

namespace {

struct Tri {
  Vec3 v0, v1, v2;
};

struct TriContact {
  bool any = false;
  bool coplanar = false;
  Vec3 seg_a, seg_b;            // transversal contact segment (may be a point)
  std::vector<Vec3> poly;       // coplanar overlap polygon
};

using Vec2 = std::array<double, 2>;

struct PlaneBasis {
  Vec3 origin, u, v;
  Vec2 to2(const Vec3& p) const { return {dot(p - origin, u), dot(p - origin, v)}; }
  Vec3 to3(const Vec2& q) const { return origin + u * q[0] + v * q[1]; }
};

double cross2(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double polygon_area(const std::vector<Vec2>& poly) {
  double twice = 0;
  for (size_t i = 0; i < poly.size(); ++i) {
    const Vec2& p = poly[i];
    const Vec2& q = poly[(i + 1) % poly.size()];
    twice += p[0] * q[1] - p[1] * q[0];
  }
  return std::abs(twice) / 2;
}

// Sutherland-Hodgman clip of a polygon against a convex CCW clipper.
std::vector<Vec2> clip_convex(std::vector<Vec2> subject, const std::vector<Vec2>& clipper) {
  for (size_t i = 0; i < clipper.size() && !subject.empty(); ++i) {
    const Vec2& p = clipper[i];
    const Vec2& q = clipper[(i + 1) % clipper.size()];
    std::vector<Vec2> out;
    for (size_t j = 0; j < subject.size(); ++j) {
      const Vec2& s = subject[j];
      const Vec2& e = subject[(j + 1) % subject.size()];
      double side_s = cross2(p, q, s);
      double side_e = cross2(p, q, e);
      bool in_s = side_s >= -kEpsGeom;
      bool in_e = side_e >= -kEpsGeom;
      if (in_s) out.push_back(s);
      if (in_s != in_e) {
        double t = side_s / (side_s - side_e);
        out.push_back({s[0] + t * (e[0] - s[0]), s[1] + t * (e[1] - s[1])});
      }
    }
    subject = std::move(out);
  }
  return subject;
}

void coplanar_overlap(const Tri& ta, const Tri& tb, const Vec3& normal_a, TriContact& contact) {
  PlaneBasis basis;
  basis.origin = ta.v0;
  basis.u = normalized(ta.v1 - ta.v0);
  basis.v = normalized(cross(normal_a, basis.u));

  std::vector<Vec2> subject{basis.to2(ta.v0), basis.to2(ta.v1), basis.to2(ta.v2)};
  std::vector<Vec2> clipper{basis.to2(tb.v0), basis.to2(tb.v1), basis.to2(tb.v2)};
  if (cross2(clipper[0], clipper[1], clipper[2]) < 0) std::swap(clipper[1], clipper[2]);

  std::vector<Vec2> overlap = clip_convex(std::move(subject), clipper);
  if (overlap.size() < 3 || polygon_area(overlap) <= kEpsGeom) return;

  contact.any = true;
  contact.coplanar = true;
  contact.poly.clear();
  for (const Vec2& q : overlap) contact.poly.push_back(basis.to3(q));
}

// Intersection points of triangle edges with the other plane, given signed
// vertex distances. Vertices on the plane are collected directly.
void collect_plane_crossings(const Tri& t, const std::array<double, 3>& d, std::vector<Vec3>& out) {
  const Vec3* v[3] = {&t.v0, &t.v1, &t.v2};
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3;
    if (std::abs(d[static_cast<size_t>(i)]) <= kEpsGeom) {
      out.push_back(*v[i]);
      continue;
    }
    double di = d[static_cast<size_t>(i)];
    double dj = d[static_cast<size_t>(j)];
    if ((di > kEpsGeom && dj < -kEpsGeom) || (di < -kEpsGeom && dj > kEpsGeom)) {
      double s = di / (di - dj);
      out.push_back(*v[i] + (*v[j] - *v[i]) * s);
    }
  }
}

TriContact tri_tri_contact(const Tri& ta, const Tri& tb) {
  TriContact contact;

  Vec3 na = cross(ta.v1 - ta.v0, ta.v2 - ta.v0);
  Vec3 nb = cross(tb.v1 - tb.v0, tb.v2 - tb.v0);
  double la = norm(na);
  double lb = norm(nb);
  if (la <= kEpsGeom || lb <= kEpsGeom) return contact;
  Vec3 nah = na / la;
  Vec3 nbh = nb / lb;

  std::array<double, 3> db = {dot(nah, tb.v0 - ta.v0), dot(nah, tb.v1 - ta.v0), dot(nah, tb.v2 - ta.v0)};
  if ((db[0] > kEpsGeom && db[1] > kEpsGeom && db[2] > kEpsGeom) ||
      (db[0] < -kEpsGeom && db[1] < -kEpsGeom && db[2] < -kEpsGeom))
    return contact;

  std::array<double, 3> da = {dot(nbh, ta.v0 - tb.v0), dot(nbh, ta.v1 - tb.v0), dot(nbh, ta.v2 - tb.v0)};
  if ((da[0] > kEpsGeom && da[1] > kEpsGeom && da[2] > kEpsGeom) ||
      (da[0] < -kEpsGeom && da[1] < -kEpsGeom && da[2] < -kEpsGeom))
    return contact;

  bool b_in_plane_a = std::abs(db[0]) <= kEpsGeom && std::abs(db[1]) <= kEpsGeom && std::abs(db[2]) <= kEpsGeom;
  Vec3 line_dir = cross(nah, nbh);
  if (b_in_plane_a || norm(line_dir) <= 1e-12) {
    coplanar_overlap(ta, tb, nah, contact);
    return contact;
  }

  Vec3 dir = normalized(line_dir);
  std::vector<Vec3> pa, pb;
  collect_plane_crossings(ta, da, pa);
  collect_plane_crossings(tb, db, pb);
  if (pa.empty() || pb.empty()) return contact;

  auto interval = [&](const std::vector<Vec3>& pts, double& tmin, double& tmax, Vec3& pmin, Vec3& pmax) {
    tmin = std::numeric_limits<double>::infinity();
    tmax = -tmin;
    for (const Vec3& p : pts) {
      double t = dot(dir, p - ta.v0);
      if (t < tmin) {
        tmin = t;
        pmin = p;
      }
      if (t > tmax) {
        tmax = t;
        pmax = p;
      }
    }
  };

  double a_lo, a_hi, b_lo, b_hi;
  Vec3 pa_lo, pa_hi, pb_lo, pb_hi;
  interval(pa, a_lo, a_hi, pa_lo, pa_hi);
  interval(pb, b_lo, b_hi, pb_lo, pb_hi);

  double lo = std::max(a_lo, b_lo);
  double hi = std::min(a_hi, b_hi);
  if (hi - lo < -kEpsGeom) return contact;

  contact.any = true;
  contact.seg_a = (a_lo >= b_lo) ? pa_lo : pb_lo;
  contact.seg_b = (a_hi <= b_hi) ? pa_hi : pb_hi;
  return contact;
}

void require_proper_quad(const Quad& q) {
  Vec3 n1 = cross(q[1] - q[0], q[2] - q[0]);
  Vec3 n2 = cross(q[2] - q[0], q[3] - q[0]);
  if (norm(n1) <= kEpsGeom || norm(n2) <= kEpsGeom)
    fail(ErrorCode::DegenerateFace, "quad corners collinear within tolerance");
}

}  // namespace

bool faces_intersect(const Quad& a, const Quad& b, bool share_edge,
                     const std::optional<Vec3>& shared_vertex) {
  if (share_edge) return false;
  require_proper_quad(a);
  require_proper_quad(b);

  const Tri tris_a[2] = {{a[0], a[1], a[2]}, {a[0], a[2], a[3]}};
  const Tri tris_b[2] = {{b[0], b[1], b[2]}, {b[0], b[2], b[3]}};

  for (const Tri& ta : tris_a) {
    for (const Tri& tb : tris_b) {
      TriContact contact = tri_tri_contact(ta, tb);
      if (!contact.any) continue;
      if (!shared_vertex) return true;
      const Vec3& sv = *shared_vertex;
      if (contact.coplanar) {
        for (const Vec3& p : contact.poly)
          if (norm(p - sv) > kEpsGeom) return true;
      } else {
        if (norm(contact.seg_a - sv) > kEpsGeom || norm(contact.seg_b - sv) > kEpsGeom) return true;
      }
    }
  }
  return false;
}

}  // namespace cubesurf
