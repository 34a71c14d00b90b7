#pragma once

// Euclidean point clouds on a dyadic grid and the constructive net, shrink
// and wide-triangle procedures on them.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polylink/angles.hpp"

namespace polylink {

using Wide = __int128;

class TooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Points with coordinates k / 2^30, |coordinate| <= 2^10, stored as the
/// integers k. Squared distances are exact in 128-bit arithmetic, so every
/// comparison below is exact. `ids` maps each point back to the cloud it was
/// cut from.
class PointCloud {
 public:
  static constexpr int kScaleBits = 30;
  static constexpr std::int64_t kLimit = std::int64_t(1) << (kScaleBits + 10);

  explicit PointCloud(int dim);
  /// Rounds every coordinate to the grid; throws std::out_of_range past the limit.
  static PointCloud from_doubles(int dim, const std::vector<double>& coords);

  int dim() const { return dim_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::int64_t* point(std::size_t i) const { return coords_.data() + i * dim_; }
  double coordinate(std::size_t i, int k) const;
  std::size_t id(std::size_t i) const { return ids_[i]; }

  void add(const std::vector<std::int64_t>& grid_point, std::size_t id);
  PointCloud subset(const std::vector<std::size_t>& indices) const;

  /// Squared distance in grid units.
  Wide dist2(std::size_t i, std::size_t j) const;
  double dist(std::size_t i, std::size_t j) const;
  /// Distances are divided by this to give real lengths.
  static double unit() { return static_cast<double>(std::int64_t(1) << kScaleBits); }

 private:
  int dim_;
  std::vector<std::int64_t> coords_;
  std::vector<std::size_t> ids_;
};

/// Lexicographically first pair (i < j) of maximal distance. Needs size >= 2.
std::pair<std::size_t, std::size_t> diameter_pair(const PointCloud& s);
Wide diameter2(const PointCloud& s);

/// Radius factor * sqrt(base2) with base2 a squared grid distance.
struct NetRadius {
  Wide base2 = 0;
  Rational factor{1};

  /// d2 <= radius^2, exactly.
  bool covers(Wide d2) const;
  double value() const;  // in real units
};

/// Maximal r-separated subset taken greedily in index order: centers are
/// pairwise more than r apart and every point is within r of one.
std::vector<std::size_t> greedy_net(const PointCloud& x, const NetRadius& r);
std::vector<std::size_t> greedy_net(const PointCloud& x, double r);

/// floor((1 + 8/alpha)^n).
std::int64_t net_bound(const Rational& alpha, int n);

/// Separation and covering of a net, one message per failure.
std::vector<std::string> net_violations(const PointCloud& x, const std::vector<std::size_t>& centers,
                                        const NetRadius& r);

struct ShrinkStep {
  std::size_t p = 0, q = 0;  // diameter pair
  std::size_t x = 0;         // endpoint opposite the kept half
  bool kept_p_half = false;  // X = P (then x = q)
  std::size_t half_size = 0;
  std::size_t net_size = 0;
  std::vector<std::size_t> next;  // S' as indices into S
};

/// One step of the shrink construction with ratio alpha in (0, 1).
/// Throws TooSmall if |S| < 2.
ShrinkStep shrink_step(const PointCloud& s, const Rational& alpha);

/// The three guarantees d(x, S') >= d/2, diam S' <= alpha d/2 and
/// |S'| >= |S| / (2 floor((1 + 8/alpha)^n)), checked exactly.
std::vector<std::string> shrink_step_violations(const PointCloud& s, const Rational& alpha, const ShrinkStep& st);

/// x_1, ..., x_k as indices into S, k <= m: shrink steps while the
/// set has two points and fewer than m - 2 steps were taken, then the
/// diameter pair of the final set (or its single point).
std::vector<std::size_t> shrink_sequence(const PointCloud& s, const Rational& alpha, long m);

/// d(x_{i+1}, x_{i+2}) <= alpha d(x_i, x_{i+1}) for every i, exactly.
/// Returns the first failing i.
std::optional<std::size_t> decay_violation(const PointCloud& s, const std::vector<std::size_t>& seq,
                                           const Rational& alpha);

/// Angle at b between a and c.
double angle_at(const PointCloud& s, std::size_t a, std::size_t b, std::size_t c);

struct WideTriangle {
  std::size_t x = 0, y = 0, z = 0;  // indices into S
  bool from_sequence = true;         // else from the exhaustive fallback
  std::size_t sequence_length = 0;
};

/// |yz| < |xy|, angle xzy <= (pi - eps)/2 and angle xyz > eps.
bool wide_triangle_holds(const PointCloud& s, const WideTriangle& t, double epsilon);

/// Shrink sequence with alpha = 1/3 and m = m_n((pi - eps)/2) for the ambient
/// dimension (at least 2), then every pair of earlier points seen from the
/// last one. Clouds of at most `fallback_limit` points that yield nothing are
/// searched over all triples. Throws TooSmall if |S| < 3.
std::optional<WideTriangle> find_wide_triangle(const PointCloud& s, double epsilon,
                                               std::size_t fallback_limit = 128);

/// Distinct points uniform on the grid k/2^20 in [0,1)^dim.
PointCloud uniform_cube(std::size_t count, int dim, std::uint64_t seed);
/// `levels` clusters of `per_level` points: cluster i sits at 27^-i e_1 with
/// spread 27^-i / 16. Levels beyond 5 fall below the grid.
PointCloud clustered_cloud(int levels, std::size_t per_level, int dim, std::uint64_t seed);

/// One point per row, comma or whitespace separated; a non-numeric first
/// row is taken as a header.
PointCloud read_csv(std::istream& in);
std::string to_csv(const PointCloud& s);

}  // namespace polylink
