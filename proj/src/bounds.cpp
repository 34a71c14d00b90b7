#include "polylink/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <regex>

namespace polylink {

Interval::Interval(mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) {
  mpfr_init2(lo_, mpfr_get_prec(o.lo_));
  mpfr_init2(hi_, mpfr_get_prec(o.hi_));
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : Interval(mpfr_get_prec(o.lo_)) {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::exact(long v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::from_double(double v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_d(r.lo_, v, MPFR_RNDD);
  mpfr_set_d(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::rational(const Rational& q, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_, q.num(), MPFR_RNDD);
  mpfr_div_si(r.lo_, r.lo_, q.den(), MPFR_RNDD);
  mpfr_set_si(r.hi_, q.num(), MPFR_RNDU);
  mpfr_div_si(r.hi_, r.hi_, q.den(), MPFR_RNDU);
  return r;
}

Interval Interval::decimal(const std::string& text, mpfr_prec_t prec) {
  Interval r(prec);
  if (mpfr_set_str(r.lo_, text.c_str(), 10, MPFR_RNDD) != 0 ||
      mpfr_set_str(r.hi_, text.c_str(), 10, MPFR_RNDU) != 0) {
    throw std::invalid_argument("not a decimal number: " + text);
  }
  return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

long double Interval::mid_ld() const {
  mpfr_t m;
  mpfr_init2(m, precision() + 1);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  long double v = mpfr_get_ld(m, MPFR_RNDN);
  mpfr_clear(m);
  return v;
}

long double Interval::width() const {
  mpfr_t w;
  mpfr_init2(w, precision());
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  long double v = mpfr_get_ld(w, MPFR_RNDU);
  mpfr_clear(w);
  return v;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

std::string Interval::str(int digits) const {
  mpfr_t m;
  mpfr_init2(m, precision() + 1);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), m);
  std::string out(buf);
  mpfr_free_str(buf);
  mpfr_clear(m);
  return out;
}

namespace {

mpfr_prec_t joint(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

void set_lo(mpfr_t dst, const mpfr_t src) { mpfr_set(dst, src, MPFR_RNDD); }
void set_hi(mpfr_t dst, const mpfr_t src) { mpfr_set(dst, src, MPFR_RNDU); }

}  // namespace

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  mpfr_prec_t p = joint(a, b);
  Interval r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  const mpfr_t* xs[2] = {&a.lo_, &a.hi_};
  const mpfr_t* ys[2] = {&b.lo_, &b.hi_};
  bool first = true;
  for (auto* x : xs) {
    for (auto* y : ys) {
      mpfr_mul(t, *x, *y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) set_lo(r.lo_, t);
      mpfr_mul(t, *x, *y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) set_hi(r.hi_, t);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by an interval containing 0");
  Interval inv(b.precision());
  mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
  return a * inv;
}

Interval Interval::sqrt() const {
  Interval r(precision());
  if (mpfr_sgn(lo_) <= 0) {
    mpfr_set_zero(r.lo_, 1);
  } else {
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  }
  if (mpfr_sgn(hi_) <= 0) {
    mpfr_set_zero(r.hi_, 1);
  } else {
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  }
  return r;
}

Interval Interval::sin() const {
  Interval r(precision());
  mpfr_sin(r.lo_, lo_, MPFR_RNDD);
  mpfr_sin(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::cos() const {
  Interval r(precision());
  mpfr_cos(r.lo_, hi_, MPFR_RNDD);
  mpfr_cos(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::asin() const {
  Interval c(*this);
  if (mpfr_cmp_si(c.lo_, -1) < 0) mpfr_set_si(c.lo_, -1, MPFR_RNDD);
  if (mpfr_cmp_si(c.hi_, 1) > 0) mpfr_set_si(c.hi_, 1, MPFR_RNDU);
  Interval r(precision());
  mpfr_asin(r.lo_, c.lo_, MPFR_RNDD);
  mpfr_asin(r.hi_, c.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::pow(unsigned k) const {
  Interval r(precision());
  mpfr_pow_ui(r.lo_, lo_, k, MPFR_RNDD);
  mpfr_pow_ui(r.hi_, hi_, k, MPFR_RNDU);
  return r;
}

std::optional<long> Interval::certified_floor() const {
  if (!mpfr_fits_slong_p(lo_, MPFR_RNDD) || !mpfr_fits_slong_p(hi_, MPFR_RNDD)) {
    throw std::overflow_error("floor out of range");
  }
  long a = mpfr_get_si(lo_, MPFR_RNDD);
  long b = mpfr_get_si(hi_, MPFR_RNDD);
  if (a != b) return std::nullopt;
  return a;
}

RealExpr constant(const Rational& q) {
  return {[q](mpfr_prec_t p) { return Interval::rational(q, p); }, std::nullopt};
}

RealExpr pi_times(const Rational& q) {
  return {[q](mpfr_prec_t p) { return Interval::rational(q, p) * Interval::pi(p); }, q};
}

RealExpr decimal(const std::string& text) {
  Interval::decimal(text, 64);  // validate now
  return {[text](mpfr_prec_t p) { return Interval::decimal(text, p); }, std::nullopt};
}

RealExpr AngleInput::value() const { return pi_multiple ? pi_times(coefficient) : decimal(text); }

double AngleInput::approx() const {
  return static_cast<double>(value()(64).mid_ld());
}

AngleInput parse_angle_input(std::string_view text) {
  static const std::regex pi_form(R"(\s*([+-]?)(\d*)\s*\*?\s*pi\s*(?:/\s*(\d+))?\s*)");
  static const std::regex dec_form(R"(\s*[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?\s*)");
  std::string s(text);
  std::smatch m;
  AngleInput out;
  out.text = s;
  if (std::regex_match(s, m, pi_form)) {
    std::int64_t num = m[2].length() ? std::stoll(m[2].str()) : 1;
    std::int64_t den = m[3].matched ? std::stoll(m[3].str()) : 1;
    if (den == 0) throw std::invalid_argument("zero denominator in angle: " + s);
    if (m[1].str() == "-") num = -num;
    out.pi_multiple = true;
    out.coefficient = Rational(num, den);
    return out;
  }
  if (std::regex_match(s, dec_form)) {
    out.text.erase(std::remove_if(out.text.begin(), out.text.end(), ::isspace), out.text.end());
    return out;
  }
  throw std::invalid_argument("cannot parse angle: " + s);
}

RealExpr narrow_delta(const RealExpr& eps) {
  RealExpr out;
  out.eval = [eps](mpfr_prec_t p) {
    return (Interval::pi(p) - eps(p)) * Interval::rational(Rational(1, 2), p);
  };
  if (eps.over_pi) out.over_pi = (Rational(1) - *eps.over_pi) * Rational(1, 2);
  return out;
}

Interval reg_inc_beta(const Interval& t, int n) {
  if (n < 2) throw std::domain_error("reg_inc_beta: n must be at least 2");
  mpfr_prec_t p = t.precision();
  Interval one = Interval::exact(1, p);
  Interval c = (one - t).sqrt();  // sqrt(1 - t)
  Interval value(p), beta(p), power(p);
  Rational a;
  if (n % 2 == 1) {
    a = Rational(1);
    value = one - c;
    beta = Interval::exact(2, p);
    power = t;
  } else {
    a = Rational(1, 2);
    Interval s = t.sqrt();
    value = Interval::exact(2, p) * s.asin() / Interval::pi(p);
    beta = Interval::pi(p);
    power = s;
  }
  const Rational target(n - 1, 2);
  while (a < target) {
    // I_t(a+1, b) = I_t(a, b) - t^a (1-t)^b / (a B(a, b)) with b = 1/2
    Interval ia = Interval::rational(a, p);
    value = value - power * c / (ia * beta);
    beta = beta * ia / Interval::rational(a + Rational(1, 2), p);
    power = power * t;
    a = a + Rational(1);
  }
  return value;
}

namespace {

// Exact I when delta/2 = pi/3: t = 3/4, sqrt(1 - t) = 1/2 (odd n) and, for
// n = 2, I = delta/pi. Other rational multiples of pi do not put 2/I on an
// integer for these n, so interval refinement terminates there.
std::optional<long> exact_m(const Rational& over_pi, int n) {
  if (n == 2) {
    Rational q = Rational(2) / over_pi;
    return q.num() / q.den() + 2;
  }
  if (n % 2 == 1 && n <= 15 && over_pi == Rational(2, 3)) {
    Rational t(3, 4), c(1, 2), value = Rational(1) - c, beta(2), power = t;
    for (Rational a(1); a < Rational(n - 1, 2); a = a + Rational(1)) {
      value = value - power * c / (a * beta);
      beta = beta * a / (a + Rational(1, 2));
      power = power * t;
    }
    Rational q = Rational(2) / value;
    return q.num() / q.den() + 2;
  }
  return std::nullopt;
}

}  // namespace

long m_n(const RealExpr& delta, int n, const PrecisionOptions& options) {
  if (n < 2) throw std::domain_error("m_n: n must be at least 2");
  if (delta.over_pi) {
    if (*delta.over_pi <= Rational(0) || *delta.over_pi >= Rational(1)) {
      throw std::domain_error("m_n: delta must lie in (0, pi)");
    }
    if (auto m = exact_m(*delta.over_pi, n)) return *m;
  }
  for (mpfr_prec_t p = options.start_bits; p <= options.max_bits; p *= 2) {
    Interval d = delta(p);
    if (p == options.start_bits) {
      Interval pi = Interval::pi(p);
      if (mpfr_sgn(d.hi()) <= 0 || mpfr_cmp(d.lo(), pi.hi()) >= 0) {
        throw std::domain_error("m_n: delta must lie in (0, pi)");
      }
    }
    Interval s = (d * Interval::rational(Rational(1, 2), p)).sin();
    Interval t = s * s;
    Interval i = reg_inc_beta(t, n);
    if (i.contains_zero()) continue;
    Interval q = Interval::exact(2, p) / i;
    if (auto f = q.certified_floor()) return *f + 2;
  }
  throw PrecisionExhausted("m_n: floor not certified at " + std::to_string(options.max_bits) + " bits");
}

long m_n(double delta, int n, const PrecisionOptions& options) {
  if (!(delta > 0 && delta < std::numbers::pi)) throw std::domain_error("m_n: delta must lie in (0, pi)");
  return m_n(RealExpr{[delta](mpfr_prec_t p) { return Interval::from_double(delta, p); }, std::nullopt}, n,
             options);
}

BigCount bound_from_m(int n, long m) {
  if (n < 1 || m < 2) throw std::domain_error("bound_from_m: need n >= 1 and m >= 2");
  BigCount base = 2 * boost::multiprecision::pow(BigCount(25), static_cast<unsigned>(n));
  return 2 * boost::multiprecision::pow(base, static_cast<unsigned>(m - 2));
}

BigCount bound_B(int n, const RealExpr& eps, const PrecisionOptions& options) {
  Interval e = eps(64);
  if (mpfr_sgn(e.hi()) <= 0 || mpfr_cmp(e.lo(), Interval::pi(64).hi()) >= 0) {
    throw std::domain_error("bound_B: epsilon must lie in (0, pi)");
  }
  return bound_from_m(n, m_n(narrow_delta(eps), n, options));
}

std::size_t decimal_digits(const BigCount& v) {
  return v < 0 ? v.str().size() - 1 : v.str().size();
}

}  // namespace polylink
