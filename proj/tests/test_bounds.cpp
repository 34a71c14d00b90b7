#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "polylink/bounds.hpp"

using namespace polylink;
using Big = boost::multiprecision::cpp_bin_float_50;

namespace {

// With x = sin^2(phi) the incomplete beta integral becomes
// int_0^phi sin^(n-2) over int_0^(pi/2) sin^(n-2), which has no endpoint
// singularity for n >= 2.
Big beta_oracle(const Big& phi, int n) {
  boost::math::quadrature::tanh_sinh<Big> q;
  auto f = [n](Big x) { return n == 2 ? Big(1) : Big(pow(sin(x), n - 2)); };
  return q.integrate(f, Big(0), phi) / q.integrate(f, Big(0), boost::math::constants::half_pi<Big>());
}

// Quotients within 1e-25 of an integer are taken to be that integer; at
// rational multiples of pi with n = 2 the quotient is exact.
long m_oracle(const Big& delta, int n) {
  Big q = 2 / beta_oracle(delta / 2, n);
  Big r = round(q);
  return static_cast<long>(abs(q - r) < Big("1e-25") ? r : floor(q)) + 2;
}

Big parse_big(const std::string& s) { return Big(s); }

}  // namespace

TEST_CASE("interval arithmetic encloses") {
  auto third = Interval::rational(Rational(1, 3), 128);
  auto one = third + third + third;
  CHECK(mpfr_cmp_ui(one.lo(), 1) <= 0);
  CHECK(mpfr_cmp_ui(one.hi(), 1) >= 0);
  CHECK(one.width() < 1e-36L);
  auto p = Interval::pi(200);
  CHECK(p.str(40).rfind("3.14159265358979323846264338327950288419", 0) == 0);
  CHECK(Interval::exact(9, 64).sqrt().certified_floor() == 3);
  CHECK_THROWS_AS(one / (third - third), std::domain_error);
  auto s = Interval::rational(Rational(1, 6), 128) * Interval::pi(128);
  auto half = s.sin();
  CHECK(mpfr_cmp_d(half.lo(), 0.5) <= 0);
  CHECK(mpfr_cmp_d(half.hi(), 0.5) >= 0);
}

TEST_CASE("regularized incomplete beta against quadrature") {
  for (int n : {2, 3, 4, 5, 7, 10, 16}) {
    for (const char* phi_text : {"0.05", "0.3", "0.7853981633974483096156608458198757210492923498437764", "1.2", "1.5"}) {
      Big phi(phi_text);
      Big t = pow(sin(phi), 2);
      std::string t_text = t.str(60, std::ios_base::scientific);
      auto got = reg_inc_beta(Interval::decimal(t_text, 256), n);
      Big want = beta_oracle(asin(sqrt(Big(t_text))), n);
      CAPTURE(n);
      CAPTURE(phi_text);
      CHECK(abs(parse_big(got.str(45)) - want) < Big("1e-30"));
      CHECK(got.width() < 1e-40L);
    }
  }
}

TEST_CASE("regularized incomplete beta closed forms") {
  auto one = Interval::exact(1, 128);
  for (int n = 2; n <= 12; ++n) {
    auto v = reg_inc_beta(one, n);
    CHECK(mpfr_cmp_ui(v.lo(), 1) <= 0);
    CHECK(mpfr_cmp_ui(v.hi(), 1) >= 0);
  }
  // n = 3: 1 - sqrt(1 - t); n = 2: (2/pi) asin(sqrt t)
  auto q = Interval::rational(Rational(3, 4), 128);
  CHECK(reg_inc_beta(q, 3).mid_ld() == doctest::Approx(0.5));
  CHECK(reg_inc_beta(Interval::rational(Rational(1, 2), 128), 2).mid_ld() == doctest::Approx(0.5));
  CHECK(reg_inc_beta(Interval::exact(0, 128), 5).mid_ld() == 0.0L);
}

TEST_CASE("packing threshold at known angles") {
  CHECK(m_n(pi_times(Rational(1, 12)), 3) == 235);
  CHECK(m_n(pi_times(Rational(1, 2)), 3) == 8);
  CHECK(m_n(pi_times(Rational(2, 3)), 3) == 6);
  CHECK(m_n(pi_times(Rational(1, 4)), 2) == 10);
  CHECK(m_n(pi_times(Rational(1, 3)), 2) == 8);
  CHECK(m_n(pi_times(Rational(2, 5)), 2) == 7);
  CHECK(m_n(decimal("1.0"), 3) == m_oracle(Big(1), 3));
  CHECK(m_n(1.0, 3) == m_oracle(Big(1), 3));
}

TEST_CASE("n = 3 grid against the cap formula") {
  const int N = 1000;
  int agree = 0;
  for (int k = 1; k <= N; ++k) {
    Big delta = boost::math::constants::pi<Big>() * k / (N + 1);
    long want = static_cast<long>(floor(2 / (1 - cos(delta / 2)))) + 2;
    agree += m_n(pi_times(Rational(k, N + 1)), 3) == want;
  }
  CHECK(agree == N);
}

TEST_CASE("other dimensions against quadrature") {
  for (int n : {2, 4, 5, 6}) {
    for (int k : {1, 7, 20, 33, 47}) {
      Big delta = boost::math::constants::pi<Big>() * k / 50;
      CAPTURE(n);
      CAPTURE(k);
      CHECK(m_n(pi_times(Rational(k, 50)), n) == m_oracle(delta, n));
    }
  }
}

TEST_CASE("monotonicity") {
  for (int n = 2; n <= 6; ++n) {
    long prev = m_n(pi_times(Rational(1, 64)), n);
    for (int k = 2; k < 64; ++k) {
      long m = m_n(pi_times(Rational(k, 64)), n);
      CHECK(m <= prev);
      prev = m;
    }
  }
  for (int k : {3, 16, 40}) {
    for (int n = 2; n < 8; ++n) CHECK(m_n(pi_times(Rational(k, 64)), n) <= m_n(pi_times(Rational(k, 64)), n + 1));
  }
  BigCount prev = bound_B(3, pi_times(Rational(1, 32)));
  for (int k = 2; k < 32; ++k) {
    BigCount b = bound_B(3, pi_times(Rational(k, 32)));
    CHECK(b >= prev);
    prev = b;
  }
}

TEST_CASE("B(3, 5pi/6)") {
  BigCount b = bound_B(3, parse_angle_input("5pi/6").value());
  BigCount want = 2;
  for (int i = 0; i < 233; ++i) want *= 31250;
  CHECK(b == want);
  CHECK(decimal_digits(b) == 1048);
  CHECK(bound_from_m(3, 3) == 62500);
  CHECK(bound_from_m(2, 2) == 2);
  CHECK_THROWS_AS(bound_from_m(3, 1), std::domain_error);
}

TEST_CASE("integer boundary without a known pi multiple") {
  RealExpr bare;
  bare.eval = [](mpfr_prec_t p) { return Interval::pi(p) * Interval::rational(Rational(1, 4), p); };
  CHECK_THROWS_AS(m_n(bare, 2, {128, 512}), PrecisionExhausted);
  CHECK(m_n(pi_times(Rational(1, 4)), 2, {128, 512}) == 10);
}

TEST_CASE("domain checks") {
  CHECK_THROWS_AS(m_n(pi_times(Rational(1, 4)), 1), std::domain_error);
  CHECK_THROWS_AS(m_n(pi_times(Rational(0)), 3), std::domain_error);
  CHECK_THROWS_AS(m_n(pi_times(Rational(1)), 3), std::domain_error);
  CHECK_THROWS_AS(bound_B(1, pi_times(Rational(1, 2))), std::domain_error);
  CHECK_THROWS_AS(bound_B(3, pi_times(Rational(1))), std::domain_error);
  CHECK_THROWS_AS(bound_B(3, constant(Rational(0))), std::domain_error);
}

TEST_CASE("angle input") {
  auto a = parse_angle_input("5pi/6");
  CHECK(a.pi_multiple);
  CHECK(a.coefficient == Rational(5, 6));
  CHECK(parse_angle_input("pi").coefficient == Rational(1));
  CHECK(parse_angle_input("-pi/4").coefficient == Rational(-1, 4));
  CHECK(parse_angle_input("2pi/3").coefficient == Rational(2, 3));
  auto d = parse_angle_input(" 2.5 ");
  CHECK(!d.pi_multiple);
  CHECK(d.approx() == doctest::Approx(2.5));
  CHECK(parse_angle_input("1e-3").approx() == doctest::Approx(1e-3));
  CHECK_THROWS_AS(parse_angle_input("pie"), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle_input("pi/0"), std::invalid_argument);
  CHECK(*narrow_delta(a.value()).over_pi == Rational(1, 12));
}
