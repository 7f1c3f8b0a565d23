#pragma once

// Distance queries against a simplicial complex: closest-point primitives for
// points/segments/triangles and a BVH-backed index over a fixed set of
// simplices. The BVH prunes with conservative box bounds only; the reported
// minimum is always the true minimum over all indexed simplices (up to double
// rounding in the primitive itself).

#include <algorithm>
#include <vector>

#include "topoffset/core.hpp"

namespace topo {

struct Sphere {
  Point3 center;
  double radius = 0.0;  // >= 0
};

// Closest point on segment [a,b] to p.
inline Point3 closest_point_segment(const Point3& p, const Point3& a, const Point3& b) {
  Vec3 ab = b - a;
  double t = dot(p - a, ab);
  if (t <= 0.0) return a;
  double d = norm2(ab);
  if (t >= d) return b;
  return a + ab * (t / d);
}

// Closest point on triangle (a,b,c) to p; also reports barycentric coords.
inline Point3 closest_point_triangle(const Point3& p, const Point3& a, const Point3& b,
                                     const Point3& c, double* bary = nullptr) {
  // Ericson, Real-Time Collision Detection, 5.1.5.
  Vec3 ab = b - a, ac = c - a, ap = p - a;
  double d1 = dot(ab, ap), d2 = dot(ac, ap);
  auto set_bary = [&](double u, double v, double w) {
    if (bary) { bary[0] = u; bary[1] = v; bary[2] = w; }
  };
  if (d1 <= 0.0 && d2 <= 0.0) { set_bary(1, 0, 0); return a; }

  Vec3 bp = p - b;
  double d3 = dot(ab, bp), d4 = dot(ac, bp);
  if (d3 >= 0.0 && d4 <= d3) { set_bary(0, 1, 0); return b; }

  double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
    double v = d1 / (d1 - d3);
    set_bary(1 - v, v, 0);
    return a + ab * v;
  }

  Vec3 cp = p - c;
  double d5 = dot(ab, cp), d6 = dot(ac, cp);
  if (d6 >= 0.0 && d5 <= d6) { set_bary(0, 0, 1); return c; }

  double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
    double w = d2 / (d2 - d6);
    set_bary(1 - w, 0, w);
    return a + ac * w;
  }

  double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
    double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
    set_bary(0, 1 - w, w);
    return b + (c - b) * w;
  }

  double denom = 1.0 / (va + vb + vc);
  double v = vb * denom, w = vc * denom;
  set_bary(1 - v - w, v, w);
  return a + ab * v + ac * w;
}

// One indexed simplex: a point, segment, or triangle over explicit vertex ids.
// Vertex ids refer to the caller's mesh and ride along so that distance-field
// values can be interpolated at the closest point.
struct IndexedSimplex {
  int dim = 0;                  // 0 point, 1 segment, 2 triangle
  std::array<int, 3> v{-1, -1, -1};
};

struct ClosestHit {
  double distance = std::numeric_limits<double>::infinity();
  Point3 point;                    // closest point on the complex
  int simplex = -1;                // index into the simplex list
  std::array<double, 3> bary{1, 0, 0};  // barycentric coords on that simplex
};

class DistanceIndex {
 public:
  DistanceIndex() = default;

  // Builds over the given simplices; `position` maps vertex id -> coordinates.
  template <class PositionFn>
  DistanceIndex(std::vector<IndexedSimplex> simplices, PositionFn&& position)
      : simplices_(std::move(simplices)) {
    if (simplices_.empty()) throw Error("empty complex");
    coords_.resize(simplices_.size());
    boxes_.resize(simplices_.size());
    for (size_t i = 0; i < simplices_.size(); ++i) {
      const auto& s = simplices_[i];
      for (int k = 0; k <= s.dim; ++k) {
        coords_[i][k] = position(s.v[k]);
        boxes_[i].expand(coords_[i][k]);
      }
    }
    std::vector<int> items(simplices_.size());
    for (size_t i = 0; i < items.size(); ++i) items[i] = static_cast<int>(i);
    root_ = build(items.begin(), items.end());
  }

  size_t size() const { return simplices_.size(); }
  const IndexedSimplex& simplex(int i) const { return simplices_[i]; }
  const std::array<Point3, 3>& simplex_coords(int i) const { return coords_[i]; }

  AABB bounds() const { return nodes_.empty() ? AABB{} : nodes_[root_].box; }

  ClosestHit closest(const Point3& p) const {
    ClosestHit hit;
    search(root_, p, hit);
    return hit;
  }

  double distance(const Point3& p) const { return closest(p).distance; }

 private:
  struct Node {
    AABB box;
    int left = -1, right = -1;  // children; leaf iff left < 0
    int begin = 0, end = 0;     // leaf range into order_
  };

  static constexpr int kLeafSize = 4;

  template <class It>
  int build(It first, It last) {
    Node node;
    for (It it = first; it != last; ++it) node.box.expand(boxes_[*it]);
    int count = static_cast<int>(last - first);
    if (count <= kLeafSize) {
      node.begin = static_cast<int>(order_.size());
      order_.insert(order_.end(), first, last);
      node.end = static_cast<int>(order_.size());
      nodes_.push_back(node);
      return static_cast<int>(nodes_.size()) - 1;
    }
    Vec3 extent = node.box.hi - node.box.lo;
    int axis = 0;
    if (extent.y > extent[axis]) axis = 1;
    if (extent.z > extent[axis]) axis = 2;
    It mid = first + count / 2;
    std::nth_element(first, mid, last, [&](int a, int b) {
      return boxes_[a].center()[axis] < boxes_[b].center()[axis];
    });
    int l = build(first, mid);
    int r = build(mid, last);
    node.left = l;
    node.right = r;
    nodes_.push_back(node);
    return static_cast<int>(nodes_.size()) - 1;
  }

  void leaf_scan(const Node& node, const Point3& p, ClosestHit& hit) const {
    for (int k = node.begin; k < node.end; ++k) {
      int i = order_[k];
      const auto& s = simplices_[i];
      const auto& c = coords_[i];
      Point3 q;
      std::array<double, 3> bary{1, 0, 0};
      switch (s.dim) {
        case 0: q = c[0]; break;
        case 1: {
          q = closest_point_segment(p, c[0], c[1]);
          double len2 = dist2(c[0], c[1]);
          double t = len2 > 0 ? dot(q - c[0], c[1] - c[0]) / len2 : 0.0;
          bary = {1 - t, t, 0};
          break;
        }
        default: {
          double b[3];
          q = closest_point_triangle(p, c[0], c[1], c[2], b);
          bary = {b[0], b[1], b[2]};
          break;
        }
      }
      double d = dist(p, q);
      if (d < hit.distance) {
        hit.distance = d;
        hit.point = q;
        hit.simplex = i;
        hit.bary = bary;
      }
    }
  }

  void search(int ni, const Point3& p, ClosestHit& hit) const {
    const Node& node = nodes_[ni];
    // Small relative slack keeps the box bound from pruning a true minimum
    // through rounding.
    if (node.box.dist_lower_bound(p) * (1.0 - 1e-12) > hit.distance) return;
    if (node.left < 0) {
      leaf_scan(node, p, hit);
      return;
    }
    double dl = nodes_[node.left].box.dist_lower_bound(p);
    double dr = nodes_[node.right].box.dist_lower_bound(p);
    int a = node.left, b = node.right;
    if (dr < dl) std::swap(a, b);
    search(a, p, hit);
    search(b, p, hit);
  }

  std::vector<IndexedSimplex> simplices_;
  std::vector<std::array<Point3, 3>> coords_;
  std::vector<AABB> boxes_;
  std::vector<int> order_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

inline double distance_to_complex(const Point3& p, const DistanceIndex& idx) {
  return idx.distance(p);
}

// True iff every point of the sphere is within distance d of the complex.
inline bool sphere_within(const Sphere& s, const DistanceIndex& idx, double d) {
  return idx.distance(s.center) + s.radius <= d;
}

// True iff every point of the sphere is at distance >= d from the complex.
inline bool sphere_beyond(const Sphere& s, const DistanceIndex& idx, double d) {
  return idx.distance(s.center) - s.radius >= d;
}

// Bounding sphere of up to four points: farthest-pair diameter, then grown
// to contain stragglers (Ritter), then verified.
inline Sphere bounding_sphere(const std::array<Point3, 4>& pts) {
  int bi = 0, bj = 1;
  double best = -1.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      double d = dist2(pts[i], pts[j]);
      if (d > best) { best = d; bi = i; bj = j; }
    }
  Sphere s;
  s.center = (pts[bi] + pts[bj]) * 0.5;
  s.radius = 0.5 * std::sqrt(best);
  for (const auto& p : pts) {
    double d = dist(p, s.center);
    if (d > s.radius) {
      double nr = 0.5 * (s.radius + d);
      s.center = s.center + (p - s.center) * ((d - nr) / d);
      s.radius = nr;
    }
  }
  for (const auto& p : pts)  // containment must hold exactly in double
    s.radius = std::fmax(s.radius, dist(p, s.center));
  s.radius = std::nextafter(s.radius, std::numeric_limits<double>::infinity());
  return s;
}

}  // namespace topo
