#include "polylink/angles.hpp"

#include <algorithm>
#include <charconv>
#include <numbers>
#include <numeric>
#include <sstream>

namespace polylink {

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto first = s.data();
  auto last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::operator+(const Rational& o) const {
  std::int64_t l = std::lcm(den_, o.den_);
  return Rational(num_ * (l / den_) + o.num_ * (l / o.den_), l);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  std::int64_t g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
  std::int64_t g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rational((num_ / g1) * (o.num_ / g2), (den_ / g2) * (o.den_ / g1));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  return *this * Rational(o.den_, o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  // Denominators here stay tiny (<= 12 * small), so cross-multiplication is safe.
  return num_ * o.den_ <=> o.num_ * den_;
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

double RationalAngle::radians() const { return c_.to_double() * std::numbers::pi; }

std::string RationalAngle::str() const { return c_.str(); }

RationalAngle RationalAngle::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return RationalAngle(parse_int(text), 1);
  return RationalAngle(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const RationalAngle& a) { return os << a.str(); }

ConeTuple::ConeTuple(std::vector<RationalAngle> angles) : angles_(std::move(angles)) {
  const RationalAngle zero(0, 1);
  for (const auto& a : angles_) {
    if (a <= zero || a >= RationalAngle::full_turn()) {
      throw std::invalid_argument("cone angle " + a.str() + " pi is not in (0, 2pi)");
    }
  }
  std::sort(angles_.begin(), angles_.end());
}

std::strong_ordering ConeTuple::operator<=>(const ConeTuple& o) const {
  if (angles_.size() != o.angles_.size()) return angles_.size() <=> o.angles_.size();
  return std::lexicographical_compare_three_way(angles_.begin(), angles_.end(), o.angles_.begin(),
                                                o.angles_.end());
}

std::string ConeTuple::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < angles_.size(); ++i) os << (i ? ", " : "") << angles_[i].str();
  os << ")";
  return os.str();
}

RationalAngle gb_area(const ConeTuple& tuple) {
  RationalAngle area(4, 1);
  for (const auto& a : tuple.angles()) area = area - (RationalAngle::full_turn() - a);
  return area;
}

std::string family_name(BaseFamily f) { return f == BaseFamily::S4 ? "S4" : "D6"; }

BaseFamily parse_family(std::string_view text) {
  if (text == "S4" || text == "s4") return BaseFamily::S4;
  if (text == "D6" || text == "d6") return BaseFamily::D6;
  throw std::invalid_argument("unknown base family '" + std::string(text) + "'");
}

const BaseOrbifold& s4_base() {
  static const BaseOrbifold base{BaseFamily::S4,
                                 {{"y1", RationalAngle(1, 1), 2},
                                  {"y2", RationalAngle(2, 3), 3},
                                  {"y3", RationalAngle(1, 2), 4}},
                                 RationalAngle(1, 6),
                                 24};
  return base;
}

const BaseOrbifold& d6_base() {
  static const BaseOrbifold base{BaseFamily::D6,
                                 {{"z1", RationalAngle(1, 1), 2},
                                  {"z2", RationalAngle(1, 1), 2},
                                  {"z3", RationalAngle(1, 3), 6}},
                                 RationalAngle(1, 3),
                                 12};
  return base;
}

const BaseOrbifold& base_of(BaseFamily f) { return f == BaseFamily::S4 ? s4_base() : d6_base(); }

std::set<RationalAngle> allowed_angles(BaseFamily family) {
  std::set<RationalAngle> out;
  for (const auto& bp : base_of(family).branch_points) {
    for (int l = 1; l < bp.order; ++l) out.insert(RationalAngle(2 * l, bp.order));
  }
  return out;
}

}  // namespace polylink
