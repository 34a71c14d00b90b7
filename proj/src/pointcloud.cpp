#include "polylink/pointcloud.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <limits>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "polylink/bounds.hpp"

namespace polylink {

PointCloud::PointCloud(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("PointCloud: dimension must be positive");
}

PointCloud PointCloud::from_doubles(int dim, const std::vector<double>& coords) {
  if (coords.size() % dim != 0) throw std::invalid_argument("PointCloud: coordinate count not a multiple of dim");
  PointCloud out(dim);
  std::vector<std::int64_t> p(dim);
  for (std::size_t i = 0; i < coords.size() / dim; ++i) {
    for (int k = 0; k < dim; ++k) {
      double v = std::ldexp(coords[i * dim + k], kScaleBits);
      if (!(std::fabs(v) <= static_cast<double>(kLimit))) throw std::out_of_range("PointCloud: coordinate too large");
      p[k] = std::llround(v);
    }
    out.add(p, i);
  }
  return out;
}

double PointCloud::coordinate(std::size_t i, int k) const {
  return std::ldexp(static_cast<double>(point(i)[k]), -kScaleBits);
}

void PointCloud::add(const std::vector<std::int64_t>& grid_point, std::size_t id) {
  if (static_cast<int>(grid_point.size()) != dim_) throw std::invalid_argument("PointCloud: wrong dimension");
  for (auto v : grid_point) {
    if (v > kLimit || v < -kLimit) throw std::out_of_range("PointCloud: coordinate too large");
  }
  coords_.insert(coords_.end(), grid_point.begin(), grid_point.end());
  ids_.push_back(id);
}

PointCloud PointCloud::subset(const std::vector<std::size_t>& indices) const {
  PointCloud out(dim_);
  out.coords_.reserve(indices.size() * dim_);
  for (auto i : indices) {
    out.coords_.insert(out.coords_.end(), point(i), point(i) + dim_);
    out.ids_.push_back(ids_[i]);
  }
  return out;
}

Wide PointCloud::dist2(std::size_t i, std::size_t j) const {
  const std::int64_t* a = point(i);
  const std::int64_t* b = point(j);
  Wide s = 0;
  for (int k = 0; k < dim_; ++k) {
    Wide d = static_cast<Wide>(a[k]) - b[k];
    s += d * d;
  }
  return s;
}

double PointCloud::dist(std::size_t i, std::size_t j) const {
  return static_cast<double>(std::sqrt(static_cast<long double>(dist2(i, j)))) / unit();
}

std::pair<std::size_t, std::size_t> diameter_pair(const PointCloud& s) {
  const std::size_t n = s.size();
  if (n < 2) throw TooSmall("diameter_pair: fewer than two points");
  const int dim = s.dim();
  std::vector<long double> centroid(dim, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (int k = 0; k < dim; ++k) centroid[k] += s.point(i)[k];
  }
  for (auto& c : centroid) c /= n;
  std::vector<long double> radius(n);
  for (std::size_t i = 0; i < n; ++i) {
    long double r = 0;
    for (int k = 0; k < dim; ++k) {
      long double d = s.point(i)[k] - centroid[k];
      r += d * d;
    }
    radius[i] = std::sqrt(r);
  }

  // Seed with a double sweep, then scan only pairs whose radii can reach it.
  std::pair<std::size_t, std::size_t> best{0, 1};
  Wide best2 = s.dist2(0, 1);
  auto offer = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::pair<std::size_t, std::size_t> p{std::min(i, j), std::max(i, j)};
    Wide d = s.dist2(i, j);
    if (d > best2 || (d == best2 && p < best)) {
      best2 = d;
      best = p;
    }
  };
  std::size_t a = 0;
  for (int sweep = 0; sweep < 2; ++sweep) {
    std::size_t far = a;
    Wide far2 = -1;
    for (std::size_t j = 0; j < n; ++j) {
      Wide d = s.dist2(a, j);
      if (d > far2) {
        far2 = d;
        far = j;
      }
    }
    offer(a, far);
    a = far;
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return radius[x] != radius[y] ? radius[x] > radius[y] : x < y;
  });
  auto reach = [&] { return std::sqrt(static_cast<long double>(best2)) * (1 - 1e-12L) - 2; };
  for (std::size_t u = 0; u < n; ++u) {
    std::size_t i = order[u];
    if (2 * radius[i] < reach()) break;
    for (std::size_t v = u + 1; v < n; ++v) {
      std::size_t j = order[v];
      if (radius[i] + radius[j] < reach()) break;
      offer(i, j);
    }
  }
  return best;
}

Wide diameter2(const PointCloud& s) {
  if (s.size() < 2) return 0;
  auto [p, q] = diameter_pair(s);
  return s.dist2(p, q);
}

bool NetRadius::covers(Wide d2) const {
  Wide num = factor.num(), den = factor.den();
  return d2 * den * den <= num * num * base2;
}

double NetRadius::value() const {
  return factor.to_double() * static_cast<double>(std::sqrt(static_cast<long double>(base2))) / PointCloud::unit();
}

namespace {

// Greedy net over points in index order; `within(d2)` says whether a squared
// distance is at most the radius. Centers are bucketed in cells of side at
// least the radius, so only neighbouring cells need checking.
template <typename Within>
std::vector<std::size_t> net_impl(const PointCloud& x, long double radius_grid, Within within) {
  std::vector<std::size_t> centers;
  const int dim = x.dim();
  if (dim > 3 || !(radius_grid > 0)) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      bool covered = false;
      for (auto c : centers) {
        if (within(x.dist2(i, c))) {
          covered = true;
          break;
        }
      }
      if (!covered) centers.push_back(i);
    }
    return centers;
  }
  const long double cell = radius_grid * (1 + 1e-9L) + 1;
  std::map<std::array<std::int64_t, 3>, std::vector<std::size_t>> grid;
  auto key_of = [&](std::size_t i) {
    std::array<std::int64_t, 3> k{0, 0, 0};
    for (int d = 0; d < dim; ++d) k[d] = static_cast<std::int64_t>(std::floor(x.point(i)[d] / cell));
    return k;
  };
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto k = key_of(i);
    bool covered = false;
    std::array<std::int64_t, 3> lo{0, 0, 0}, hi{0, 0, 0};
    for (int d = 0; d < dim; ++d) {
      lo[d] = -1;
      hi[d] = 1;
    }
    for (auto a = lo[0]; a <= hi[0] && !covered; ++a) {
      for (auto b = lo[1]; b <= hi[1] && !covered; ++b) {
        for (auto c = lo[2]; c <= hi[2] && !covered; ++c) {
          auto it = grid.find({k[0] + a, k[1] + b, k[2] + c});
          if (it == grid.end()) continue;
          for (auto ctr : it->second) {
            if (within(x.dist2(i, ctr))) {
              covered = true;
              break;
            }
          }
        }
      }
    }
    if (!covered) {
      centers.push_back(i);
      grid[k].push_back(i);
    }
  }
  return centers;
}

long double radius_in_grid(const NetRadius& r) {
  return r.factor.to_double() * std::sqrt(static_cast<long double>(r.base2));
}

}  // namespace

std::vector<std::size_t> greedy_net(const PointCloud& x, const NetRadius& r) {
  return net_impl(x, radius_in_grid(r), [&](Wide d2) { return r.covers(d2); });
}

std::vector<std::size_t> greedy_net(const PointCloud& x, double r) {
  if (!(r > 0)) throw std::invalid_argument("greedy_net: radius must be positive");
  long double rg = static_cast<long double>(r) * PointCloud::unit();
  long double r2 = rg * rg;
  return net_impl(x, rg, [&](Wide d2) { return static_cast<long double>(d2) <= r2; });
}

std::int64_t net_bound(const Rational& alpha, int n) {
  Rational base = Rational(1) + Rational(8) / alpha;
  boost::multiprecision::cpp_int num = boost::multiprecision::pow(boost::multiprecision::cpp_int(base.num()), n);
  boost::multiprecision::cpp_int den = boost::multiprecision::pow(boost::multiprecision::cpp_int(base.den()), n);
  return static_cast<std::int64_t>(num / den);
}

std::vector<std::string> net_violations(const PointCloud& x, const std::vector<std::size_t>& centers,
                                        const NetRadius& r) {
  std::vector<std::string> out;
  for (std::size_t a = 0; a < centers.size(); ++a) {
    for (std::size_t b = a + 1; b < centers.size(); ++b) {
      if (r.covers(x.dist2(centers[a], centers[b]))) {
        out.push_back("centers " + std::to_string(centers[a]) + " and " + std::to_string(centers[b]) +
                      " are within the radius");
      }
    }
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    bool covered = std::any_of(centers.begin(), centers.end(), [&](std::size_t c) { return r.covers(x.dist2(i, c)); });
    if (!covered) out.push_back("point " + std::to_string(i) + " is not covered");
  }
  return out;
}

ShrinkStep shrink_step(const PointCloud& s, const Rational& alpha) {
  if (s.size() < 2) throw TooSmall("shrink_step: fewer than two points");
  if (alpha <= Rational(0) || alpha >= Rational(1)) throw std::domain_error("shrink_step: alpha must lie in (0, 1)");
  ShrinkStep out;
  std::tie(out.p, out.q) = diameter_pair(s);
  const Wide d2 = s.dist2(out.p, out.q);
  std::vector<std::size_t> p_half, q_half;
  for (std::size_t i = 0; i < s.size(); ++i) {
    (s.dist2(i, out.p) <= s.dist2(i, out.q) ? p_half : q_half).push_back(i);
  }
  out.kept_p_half = p_half.size() >= q_half.size();
  const auto& half = out.kept_p_half ? p_half : q_half;
  out.x = out.kept_p_half ? out.q : out.p;
  out.half_size = half.size();

  PointCloud x = s.subset(half);
  NetRadius r{d2, alpha * Rational(1, 4)};
  auto centers = greedy_net(x, r);
  out.net_size = centers.size();

  // Ball populations; the largest (first on ties) becomes S'.
  std::size_t best = 0, best_count = 0;
  for (std::size_t c = 0; c < centers.size(); ++c) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (r.covers(x.dist2(i, centers[c]))) ++count;
    }
    if (count > best_count) {
      best_count = count;
      best = c;
    }
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (r.covers(x.dist2(i, centers[best]))) out.next.push_back(half[i]);
  }
  return out;
}

std::vector<std::string> shrink_step_violations(const PointCloud& s, const Rational& alpha, const ShrinkStep& st) {
  std::vector<std::string> out;
  const Wide d2 = diameter2(s);
  if (st.next.empty()) {
    out.push_back("S' is empty");
    return out;
  }
  for (auto i : st.next) {
    if (4 * s.dist2(st.x, i) < d2) {
      out.push_back("d(x, S') < d/2 at point " + std::to_string(i));
      break;
    }
  }
  const Wide next2 = diameter2(s.subset(st.next));
  const Wide num = alpha.num(), den = alpha.den();
  if (4 * den * den * next2 > num * num * d2) out.push_back("diam S' > alpha d/2");
  const Wide bound = 2 * static_cast<Wide>(net_bound(alpha, s.dim()));
  if (static_cast<Wide>(st.next.size()) * bound < static_cast<Wide>(s.size())) {
    out.push_back("|S'| = " + std::to_string(st.next.size()) + " below |S| / " + std::to_string(static_cast<long long>(bound)));
  }
  return out;
}

std::vector<std::size_t> shrink_sequence(const PointCloud& s, const Rational& alpha, long m) {
  if (s.size() < 2) throw TooSmall("shrink_sequence: fewer than two points");
  if (m < 3) throw std::domain_error("shrink_sequence: m must be at least 3");
  std::vector<std::size_t> seq;
  std::vector<std::size_t> where(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) where[i] = i;
  PointCloud cur = s;
  long steps = 0;
  while (cur.size() >= 2 && steps < m - 2) {
    ShrinkStep st = shrink_step(cur, alpha);
    seq.push_back(where[st.x]);
    std::vector<std::size_t> next_where;
    for (auto i : st.next) next_where.push_back(where[i]);
    cur = cur.subset(st.next);
    where = std::move(next_where);
    ++steps;
  }
  if (cur.size() >= 2) {
    auto [p, q] = diameter_pair(cur);
    seq.push_back(where[p]);
    seq.push_back(where[q]);
  } else {
    seq.push_back(where[0]);
  }
  return seq;
}

std::optional<std::size_t> decay_violation(const PointCloud& s, const std::vector<std::size_t>& seq,
                                           const Rational& alpha) {
  Wide num = alpha.num(), den = alpha.den();
  for (std::size_t i = 0; i + 2 < seq.size(); ++i) {
    Wide next = s.dist2(seq[i + 1], seq[i + 2]);
    Wide prev = s.dist2(seq[i], seq[i + 1]);
    if (next * den * den > num * num * prev) return i;
  }
  return std::nullopt;
}

double angle_at(const PointCloud& s, std::size_t a, std::size_t b, std::size_t c) {
  Wide dot = 0;
  for (int k = 0; k < s.dim(); ++k) {
    Wide u = static_cast<Wide>(s.point(a)[k]) - s.point(b)[k];
    Wide v = static_cast<Wide>(s.point(c)[k]) - s.point(b)[k];
    dot += u * v;
  }
  long double na = std::sqrt(static_cast<long double>(s.dist2(a, b)));
  long double nc = std::sqrt(static_cast<long double>(s.dist2(c, b)));
  if (na == 0 || nc == 0) return std::numeric_limits<double>::quiet_NaN();
  long double cosine = std::clamp(static_cast<long double>(dot) / na / nc, -1.0L, 1.0L);
  return static_cast<double>(std::acos(cosine));
}

bool wide_triangle_holds(const PointCloud& s, const WideTriangle& t, double epsilon) {
  if (t.x == t.y || t.y == t.z || t.x == t.z) return false;
  if (!(s.dist2(t.y, t.z) < s.dist2(t.x, t.y))) return false;
  double at_z = angle_at(s, t.x, t.z, t.y);
  double at_y = angle_at(s, t.x, t.y, t.z);
  return at_z <= (std::numbers::pi - epsilon) / 2 && at_y > epsilon;
}

std::optional<WideTriangle> find_wide_triangle(const PointCloud& s, double epsilon, std::size_t fallback_limit) {
  if (s.size() < 3) throw TooSmall("find_wide_triangle: fewer than three points");
  if (!(epsilon > 0 && epsilon < std::numbers::pi)) throw std::domain_error("find_wide_triangle: epsilon must lie in (0, pi)");
  const int n = std::max(s.dim(), 2);
  RealExpr eps{[epsilon](mpfr_prec_t p) { return Interval::from_double(epsilon, p); }, std::nullopt};
  const long m = m_n(narrow_delta(eps), n);
  auto seq = shrink_sequence(s, Rational(1, 3), m);
  if (seq.size() >= 3) {
    const std::size_t z = seq.back();
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      for (std::size_t j = i + 1; j + 1 < seq.size(); ++j) {
        WideTriangle t{seq[i], seq[j], z, true, seq.size()};
        if (wide_triangle_holds(s, t, epsilon)) return t;
      }
    }
  }
  if (s.size() <= fallback_limit) {
    for (std::size_t x = 0; x < s.size(); ++x) {
      for (std::size_t y = 0; y < s.size(); ++y) {
        for (std::size_t z = 0; z < s.size(); ++z) {
          WideTriangle t{x, y, z, false, seq.size()};
          if (wide_triangle_holds(s, t, epsilon)) return t;
        }
      }
    }
  }
  return std::nullopt;
}

PointCloud uniform_cube(std::size_t count, int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PointCloud out(dim);
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::int64_t> p(dim);
  while (out.size() < count) {
    for (int k = 0; k < dim; ++k) p[k] = static_cast<std::int64_t>(rng() >> 44) << (PointCloud::kScaleBits - 20);
    if (seen.insert(p).second) out.add(p, out.size());
  }
  return out;
}

PointCloud clustered_cloud(int levels, std::size_t per_level, int dim, std::uint64_t seed) {
  if (levels < 1 || per_level < 1) throw std::invalid_argument("clustered_cloud: need levels and points");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-0.5, 0.5);
  PointCloud out(dim);
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::int64_t> p(dim);
  for (int level = 0; level < levels; ++level) {
    const double scale = std::pow(27.0, -level);
    std::size_t made = 0;
    for (int attempt = 0; made < per_level && attempt < 1000; ++attempt) {
      for (int k = 0; k < dim; ++k) {
        double v = (k == 0 ? scale : 0.0) + unit(rng) * scale / 8;
        p[k] = std::llround(std::ldexp(v, PointCloud::kScaleBits));
      }
      if (seen.insert(p).second) {
        out.add(p, out.size());
        ++made;
      }
    }
  }
  return out;
}

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::optional<double> parse_double(const std::string& s) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

PointCloud read_csv(std::istream& in) {
  std::string line;
  std::vector<double> coords;
  int dim = 0;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    auto fields = split_row(line);
    if (fields.empty() || fields[0][0] == '#') continue;
    std::vector<double> vals;
    bool numeric = true;
    for (auto& f : fields) {
      auto v = parse_double(f);
      if (!v) {
        numeric = false;
        break;
      }
      vals.push_back(*v);
    }
    if (!numeric) {
      if (dim == 0 && coords.empty()) continue;  // header
      throw std::invalid_argument("read_csv: non-numeric row " + std::to_string(row));
    }
    if (dim == 0) dim = static_cast<int>(vals.size());
    if (static_cast<int>(vals.size()) != dim) {
      throw std::invalid_argument("read_csv: row " + std::to_string(row) + " has the wrong number of coordinates");
    }
    coords.insert(coords.end(), vals.begin(), vals.end());
  }
  if (dim == 0) throw std::invalid_argument("read_csv: no points");
  return PointCloud::from_doubles(dim, coords);
}

std::string to_csv(const PointCloud& s) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (int k = 0; k < s.dim(); ++k) {
      if (k) out += ',';
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, s.coordinate(i, k));
      out.append(buf, ptr);
    }
    out += '\n';
  }
  return out;
}

}  // namespace polylink
