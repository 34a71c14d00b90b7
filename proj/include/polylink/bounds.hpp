#pragma once

// Outward-rounded MPFR intervals, the packing threshold m_n and the explicit
// cardinality bound B(n, eps).

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <mpfr.h>

#include "polylink/angles.hpp"

namespace polylink {

using BigCount = boost::multiprecision::cpp_int;

class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed interval [lo, hi] of MPFR floats. Every operation rounds the lower
/// end down and the upper end up, so the true value stays enclosed.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(Interval o) noexcept;
  ~Interval();

  static Interval exact(long v, mpfr_prec_t prec);
  static Interval from_double(double v, mpfr_prec_t prec);
  static Interval rational(const Rational& q, mpfr_prec_t prec);
  /// Decimal literal such as "2.5" or "-1e-3".
  static Interval decimal(const std::string& text, mpfr_prec_t prec);
  static Interval pi(mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }
  long double lo_ld() const { return mpfr_get_ld(lo_, MPFR_RNDD); }
  long double hi_ld() const { return mpfr_get_ld(hi_, MPFR_RNDU); }
  long double mid_ld() const;
  /// Upper minus lower end, rounded up.
  long double width() const;
  bool contains_zero() const;
  /// Midpoint in scientific notation with `digits` significant digits.
  std::string str(int digits) const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Throws std::domain_error if b contains zero.
  friend Interval operator/(const Interval& a, const Interval& b);

  Interval sqrt() const;  // lower end clamped at 0
  /// Monotone pieces only: sin on [-pi/2, pi/2], cos on [0, pi], asin on [-1, 1].
  Interval sin() const;
  Interval cos() const;
  Interval asin() const;
  Interval pow(unsigned k) const;  // k-th power of a nonnegative interval

  /// Common floor of both ends, or nothing when they differ.
  std::optional<long> certified_floor() const;

 private:
  mpfr_t lo_, hi_;
};

/// A real number evaluable to any working precision. When the value is a
/// known rational multiple of pi the coefficient is carried along, which lets
/// m_n settle exact integer boundaries.
struct RealExpr {
  std::function<Interval(mpfr_prec_t)> eval;
  std::optional<Rational> over_pi;

  Interval operator()(mpfr_prec_t prec) const { return eval(prec); }
};

RealExpr constant(const Rational& q);
RealExpr pi_times(const Rational& q);
RealExpr decimal(const std::string& text);

/// "5pi/6", "pi/2", "pi", "2pi/3", "-pi/4" or a decimal in radians.
struct AngleInput {
  std::string text;
  bool pi_multiple = false;
  Rational coefficient;  // value / pi when pi_multiple

  RealExpr value() const;
  double approx() const;
};
AngleInput parse_angle_input(std::string_view text);

/// (pi - eps) / 2.
RealExpr narrow_delta(const RealExpr& eps);

struct PrecisionOptions {
  mpfr_prec_t start_bits = 192;  // about 57 decimal digits
  mpfr_prec_t max_bits = 1 << 14;
};

/// I_t((n-1)/2, 1/2) for t in [0, 1], n >= 2, from the closed forms at
/// a = 1 (n odd) and a = 1/2 (n even) and the recurrence in a.
Interval reg_inc_beta(const Interval& t, int n);

/// floor(2 / I_{sin^2(delta/2)}((n-1)/2, 1/2)) + 2 with a certified floor.
/// Throws std::domain_error outside delta in (0, pi), n >= 2, and
/// PrecisionExhausted if the quotient straddles an integer at max_bits.
long m_n(const RealExpr& delta, int n, const PrecisionOptions& options = {});
long m_n(double delta, int n, const PrecisionOptions& options = {});

/// 2 * (2 * 25^n)^(m - 2).
BigCount bound_from_m(int n, long m);
/// bound_from_m(n, m_n((pi - eps)/2, n)).
BigCount bound_B(int n, const RealExpr& eps, const PrecisionOptions& options = {});
std::size_t decimal_digits(const BigCount& v);

}  // namespace polylink
