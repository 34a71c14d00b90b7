#pragma once

// Exact angles as rational multiples of pi, cone-angle tuples and the two
// spherical base orbifolds S^2/S4 and S^2/D6.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polylink {

/// Exact rational number num/den with den > 0, kept in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(-num_, den_); }

  bool operator==(const Rational& o) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;

  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// An angle (or area) equal to coefficient * pi, held exactly.
class RationalAngle {
 public:
  constexpr RationalAngle() = default;
  explicit RationalAngle(Rational coefficient) : c_(coefficient) {}
  RationalAngle(std::int64_t num, std::int64_t den) : c_(num, den) {}

  static RationalAngle full_turn() { return RationalAngle(2, 1); }

  const Rational& coefficient() const { return c_; }
  double radians() const;

  RationalAngle operator+(const RationalAngle& o) const { return RationalAngle(c_ + o.c_); }
  RationalAngle operator-(const RationalAngle& o) const { return RationalAngle(c_ - o.c_); }
  RationalAngle operator*(std::int64_t k) const { return RationalAngle(c_ * Rational(k)); }
  RationalAngle operator-() const { return RationalAngle(-c_); }
  /// Exact ratio of two angles.
  Rational operator/(const RationalAngle& o) const { return c_ / o.c_; }

  bool operator==(const RationalAngle& o) const = default;
  std::strong_ordering operator<=>(const RationalAngle& o) const { return c_ <=> o.c_; }

  /// "p/q", meaning (p/q)*pi.
  std::string str() const;
  /// Parses "p/q" or "p" (both meaning a multiple of pi).
  static RationalAngle parse(std::string_view text);

 private:
  Rational c_;
};

std::ostream& operator<<(std::ostream& os, const RationalAngle& a);

/// Unordered tuple of cone angles, each strictly between 0 and 2*pi, stored
/// sorted ascending so that multiset equality is structural equality.
class ConeTuple {
 public:
  ConeTuple() = default;
  explicit ConeTuple(std::vector<RationalAngle> angles);
  ConeTuple(std::initializer_list<RationalAngle> angles)
      : ConeTuple(std::vector<RationalAngle>(angles)) {}

  const std::vector<RationalAngle>& angles() const { return angles_; }
  std::size_t size() const { return angles_.size(); }
  bool empty() const { return angles_.empty(); }
  const RationalAngle& min() const { return angles_.front(); }

  bool operator==(const ConeTuple&) const = default;
  std::strong_ordering operator<=>(const ConeTuple& o) const;

  std::string str() const;  // "(1/2, 3/2, ...)" in units of pi

 private:
  std::vector<RationalAngle> angles_;
};

/// Spherical Gauss-Bonnet area 4pi - sum(2pi - alpha_i). May be <= 0.
RationalAngle gb_area(const ConeTuple& tuple);

enum class BaseFamily { S4, D6 };

std::string family_name(BaseFamily f);  // "S4" / "D6"
BaseFamily parse_family(std::string_view text);

struct BranchPoint {
  std::string label;  // y1..y3 or z1..z3
  RationalAngle angle;
  int order = 1;
};

/// One of the two base orbifolds S^2(pi, 2pi/3, pi/2) = S^2/S4 and
/// S^2(pi, pi, pi/3) = S^2/D6. Branch points are listed in the order used by
/// every constellation: sigma_1 sigma_2 sigma_3 = id.
struct BaseOrbifold {
  BaseFamily family;
  std::vector<BranchPoint> branch_points;
  RationalAngle area;
  int rotation_group_order;

  std::size_t size() const { return branch_points.size(); }
  int order(std::size_t j) const { return branch_points[j].order; }
};

const BaseOrbifold& s4_base();
const BaseOrbifold& d6_base();
const BaseOrbifold& base_of(BaseFamily f);

/// Non-2pi cone angles realizable over a base: l * 2pi/k_j for 1 <= l < k_j.
std::set<RationalAngle> allowed_angles(BaseFamily family);

}  // namespace polylink
