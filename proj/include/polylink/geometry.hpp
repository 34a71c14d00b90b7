#pragma once

// Spherical triangles, cone spheres glued from copies of the base
// half-triangle, and bracketed distance and diameter estimates on them.

#include <array>
#include <optional>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "polylink/angles.hpp"
#include "polylink/classifier.hpp"
#include "polylink/covers.hpp"

namespace polylink {

class DegenerateTriangle : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotConverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Vec3 {
  double x = 0, y = 0, z = 0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const { return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x}; }
  double norm() const { return std::sqrt(dot(*this)); }
  Vec3 normalized() const { return *this * (1.0 / norm()); }
};

/// Great-circle distance between unit vectors.
double sphere_distance(const Vec3& a, const Vec3& b);
/// Spherical excess of the triangle abc on the unit sphere.
double spherical_excess(const Vec3& a, const Vec3& b, const Vec3& c);
/// Distance from p to the minor arc ab.
double point_arc_distance(const Vec3& p, const Vec3& a, const Vec3& b);

struct SphericalTriangle {
  std::array<double, 3> angles{};
  std::array<double, 3> sides{};  // side i is opposite angle i
  double area = 0;
};

/// Sides from the dual law of cosines. Throws DegenerateTriangle unless the
/// angle sum exceeds pi and every angle lies in (0, pi).
SphericalTriangle solve_triangle(const std::array<double, 3>& angles);

/// Points of the dyadic subdivision of a spherical triangle: (i, j, k) with
/// i + j + k = 2^level, corner c at coordinate c equal to 2^level. Odd points
/// are geodesic midpoints of the previous level, so edge points are evenly
/// spaced in arc length.
class TriangleLattice {
 public:
  TriangleLattice(const std::array<Vec3, 3>& corners, int level);

  int level() const { return level_; }
  int n() const { return n_; }
  const Vec3& at(int i, int j, int /*k*/) const { return pts_[index(i, j)]; }
  /// Point s steps from the first corner of edge e; edges are (0,1), (1,2), (0,2).
  const Vec3& edge_point(int e, int s) const;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * (n_ + 1) + j; }
  int level_;
  int n_;
  std::vector<Vec3> pts_;
};

/// Closed sphere assembled from 2d copies of the base half-triangle: copy
/// (i, +) and its mirror (i, -) for every sheet i, glued as dictated by the
/// constellation.
class ConeSurface {
 public:
  struct Vertex {
    int label = 0;    // branch point index 0..2
    int corners = 0;  // triangle corners meeting here
    RationalAngle angle;
  };

  ConeSurface(const Constellation& cover, BaseFamily base);

  BaseFamily base() const { return base_; }
  const Constellation& cover() const { return cover_; }
  const SphericalTriangle& triangle() const { return triangle_; }
  /// Corners of the positive copy on the unit sphere; negative copies are the
  /// reflection through the plane of edge (0,1).
  const std::array<Vec3, 3>& corners(bool negative) const { return negative ? mirror_corners_ : corners_; }

  int triangle_count() const { return static_cast<int>(corner_vertex_.size()); }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return edge_count_; }
  int euler_characteristic() const { return vertex_count() - edge_count() + triangle_count(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  int corner_vertex(int t, int c) const { return corner_vertex_[t][c]; }
  int edge_id(int t, int e) const { return edge_id_[t][e]; }
  static bool is_negative(int t) { return t % 2 == 1; }

  /// Vertices whose angle differs from 2pi, by vertex id.
  std::vector<int> cone_vertices() const;
  ConeTuple cone_angles() const;
  RationalAngle exact_area() const;
  /// Sum of spherical excesses over the triangles subdivided to `level`.
  double numerical_area(int level = 2) const;

  /// For a double: each vertex folded onto the polygon and developed into the
  /// unit sphere. Folding and developing are 1-Lipschitz, so spherical
  /// distances between these points bound geodesic distances from below.
  std::optional<std::vector<Vec3>> folded_positions() const;

 private:
  BaseFamily base_;
  Constellation cover_;
  SphericalTriangle triangle_;
  std::array<Vec3, 3> corners_, mirror_corners_;
  std::vector<std::array<int, 3>> corner_vertex_;
  std::vector<std::array<int, 3>> edge_id_;
  std::vector<Vertex> vertices_;
  int edge_count_ = 0;
};

struct DistanceEstimate {
  int refinement = 0;
  int sample_level = 0;
  /// Over all coarse vertices: realizable path lengths (upper) and certified
  /// lower bounds on the geodesic distance.
  std::vector<std::vector<double>> upper, lower;
  std::vector<int> cone_vertices;
  double diameter_lower = 0;
  double diameter_upper = 0;
  double slack = 0;  // twice the largest sample-cell circumradius
  bool folded = false;  // lower bounds include the developed polygon
};

/// Shortest paths on the subdivided surface. Upper bounds come from chords
/// between boundary points of each triangle; lower bounds from the minimum
/// distance between the edge cells a geodesic must cross.
DistanceEstimate estimate_distances(const ConeSurface& s, int refinement, int sample_level = 3);

struct LinkDiameter {
  int table_index = 0;
  int refinement = 0;
  double lower = 0;
  double upper = 0;
};

struct Epsilon0Bracket {
  double lower = 0;
  double upper = 0;
  std::vector<LinkDiameter> links;
};

struct CertifyOptions {
  int min_refinement = 3;
  int max_refinement = 6;
  int sample_level = 3;
  int jobs = 1;
};

/// Bracket for the largest link diameter. Lower bounds use the finest
/// refinement; each link's upper bound is refined until it drops below pi.
/// Throws NotConverged if some link stays at or above pi.
Epsilon0Bracket certify_epsilon0(const std::vector<LinkRecord>& records, const CertifyOptions& options = {});

/// Subdivided mesh with per-triangle vertices (seams duplicated).
std::string to_off(const ConeSurface& s, int level);
std::string to_obj(const ConeSurface& s, int level);
/// Cone-point distance matrix rows: i, j, angle_i, angle_j, lower, upper.
std::string distance_csv(const ConeSurface& s, const DistanceEstimate& d);

}  // namespace polylink
