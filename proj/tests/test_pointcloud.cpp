#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <sstream>

#include "polylink/bounds.hpp"
#include "polylink/pointcloud.hpp"
#include "properties.hpp"

using namespace polylink;
using std::numbers::pi;

TEST_CASE("grid representation") {
  auto s = PointCloud::from_doubles(2, {0.5, -0.25, 1.0, 1.0});
  REQUIRE(s.size() == 2);
  CHECK(s.coordinate(0, 1) == -0.25);
  CHECK(s.dist(0, 1) == doctest::Approx(std::hypot(0.5, 1.25)));
  CHECK(s.id(1) == 1);
  CHECK_THROWS_AS(PointCloud::from_doubles(1, {4096.0}), std::out_of_range);
  CHECK_THROWS(PointCloud::from_doubles(2, {1.0}));
  auto sub = s.subset({1});
  CHECK(sub.size() == 1);
  CHECK(sub.id(0) == 1);
}

TEST_CASE("diameter pair is the first maximal pair") {
  auto s = PointCloud::from_doubles(1, {0, 1, 0, 1});
  CHECK(diameter_pair(s) == std::pair<std::size_t, std::size_t>{0, 1});
  auto u = uniform_cube(300, 2, 4);
  auto [i, j] = diameter_pair(u);
  Wide best = 0;
  std::pair<std::size_t, std::size_t> first{0, 0};
  for (std::size_t a = 0; a < u.size(); ++a) {
    for (std::size_t b = a + 1; b < u.size(); ++b) {
      if (u.dist2(a, b) > best) {
        best = u.dist2(a, b);
        first = {a, b};
      }
    }
  }
  CHECK(std::pair(i, j) == first);
  CHECK(diameter2(u) == best);
}

TEST_CASE("greedy net examples") {
  auto one = PointCloud::from_doubles(2, {0.3, 0.3});
  CHECK(greedy_net(one, 0.5) == std::vector<std::size_t>{0});
  auto two = PointCloud::from_doubles(1, {0, 1});
  CHECK(greedy_net(two, 0.125).size() == 2);
  CHECK(greedy_net(two, 1.0).size() == 1);

  auto u = uniform_cube(10000, 2, 7);
  NetRadius r{diameter2(u), Rational(1, 8)};  // alpha = 1/2
  auto net = greedy_net(u, r);
  CHECK(net_bound(Rational(1, 2), 2) == 289);
  CHECK(static_cast<std::int64_t>(net.size()) <= 289);
  CHECK(net_violations(u, net, r).empty());
}

TEST_CASE("net bound arithmetic") {
  CHECK(net_bound(Rational(1, 3), 1) == 25);
  CHECK(net_bound(Rational(1, 3), 3) == 15625);
  CHECK(net_bound(Rational(2, 3), 2) == 169);
  CHECK(net_bound(Rational(3, 5), 1) == 14);  // 1 + 40/3
}

TEST_CASE("shrink step on two points") {
  auto two = PointCloud::from_doubles(1, {0, 1});
  auto st = shrink_step(two, Rational(1, 2));
  CHECK(st.x == 1);
  CHECK(st.kept_p_half);
  CHECK(st.next == std::vector<std::size_t>{0});
  CHECK(shrink_step_violations(two, Rational(1, 2), st).empty());
  CHECK_THROWS_AS(shrink_step(PointCloud::from_doubles(1, {0}), Rational(1, 2)), TooSmall);
}

TEST_CASE("shrink step guarantees on a uniform cloud") {
  auto u = uniform_cube(2000, 3, 9);
  for (auto alpha : {Rational(1, 3), Rational(1, 2), Rational(9, 10)}) {
    auto st = shrink_step(u, alpha);
    CHECK(shrink_step_violations(u, alpha, st).empty());
    double d = std::sqrt(static_cast<double>(diameter2(u))) / PointCloud::unit();
    for (std::size_t i : st.next) CHECK(u.dist(st.x, i) >= d / 2 - 1e-12);
  }
}

TEST_CASE("shrink sequence") {
  auto two = PointCloud::from_doubles(1, {0, 1});
  auto seq = shrink_sequence(two, Rational(1, 3), 5);
  CHECK(seq.size() == 2);

  auto big = uniform_cube(100000, 2, 11);
  auto long_seq = shrink_sequence(big, Rational(1, 3), 1000);
  CHECK(long_seq.size() >= 3);
  CHECK(!decay_violation(big, long_seq, Rational(1, 3)));

  // a hand-made violation is caught
  auto line = PointCloud::from_doubles(1, {0, 1, 0.5});
  CHECK(decay_violation(line, {0, 1, 2}, Rational(1, 3)) == std::size_t{0});
}

TEST_CASE("length threshold for three points") {
  // |S| >= 2 (2 floor((1 + 8/alpha)^n)) forces k = 3
  Rational alpha(2, 3);
  std::size_t threshold = 2 * 2 * static_cast<std::size_t>(net_bound(alpha, 2));
  for (std::uint64_t seed : {1, 2, 3}) {
    auto u = uniform_cube(threshold, 2, seed);
    CHECK(shrink_sequence(u, alpha, 3).size() == 3);
  }
}

TEST_CASE("clustered clouds give one point per scale") {
  for (int levels = 2; levels <= 5; ++levels) {
    auto c = clustered_cloud(levels, 5, 2, 1);
    auto seq = shrink_sequence(c, Rational(1, 3), 100);
    CAPTURE(levels);
    CHECK(seq.size() >= static_cast<std::size_t>(levels));
    CHECK(!decay_violation(c, seq, Rational(1, 3)));
  }
}

TEST_CASE("wide triangle on three collinear points") {
  auto col = PointCloud::from_doubles(1, {0, 1, 1.1});
  auto w = find_wide_triangle(col, pi / 2);
  REQUIRE(w);
  CHECK(w->y == 1);
  CHECK(angle_at(col, w->x, w->y, w->z) == doctest::Approx(pi));
  CHECK(wide_triangle_holds(col, *w, pi / 2));
  CHECK_THROWS_AS(find_wide_triangle(PointCloud::from_doubles(1, {0, 1}), 1.0), TooSmall);
}

TEST_CASE("wide triangle on a dense cloud") {
  auto u = uniform_cube(10000, 2, 3);
  CHECK(!find_wide_triangle(u, 3.0));  // permitted, and what happens here
  auto w = find_wide_triangle(u, pi / 4);
  if (w) CHECK(wide_triangle_holds(u, *w, pi / 4));
}

TEST_CASE("a clustered cloud yields a triangle from the sequence") {
  auto c = clustered_cloud(5, 20, 2, 2);
  auto w = find_wide_triangle(c, pi / 2);
  REQUIRE(w);
  CHECK(w->from_sequence);
  CHECK(wide_triangle_holds(c, *w, pi / 2));
  CHECK(angle_at(c, w->x, w->y, w->z) > pi / 2);
  CHECK(c.dist2(w->y, w->z) < c.dist2(w->x, w->y));
}

TEST_CASE("CSV round trip") {
  auto u = uniform_cube(50, 3, 12);
  std::istringstream in("x,y,z\n" + to_csv(u));
  auto back = read_csv(in);
  REQUIRE(back.size() == u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) CHECK(back.dist2(i, j) == u.dist2(i, j));
  }
  std::istringstream bad("1,2\n3\n");
  CHECK_THROWS(read_csv(bad));
}

TEST_CASE("generators are deterministic and distinct") {
  auto a = uniform_cube(500, 2, 42), b = uniform_cube(500, 2, 42);
  CHECK(to_csv(a) == to_csv(b));
  CHECK(to_csv(a) != to_csv(uniform_cube(500, 2, 43)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) CHECK(a.dist2(i, j) > 0);
  }
}

TEST_CASE("random clouds: every postcondition") {
  auto t = props::run(300, 1000);
  CHECK(t.clouds == 300);
  for (const auto& v : t.violations) FAIL_CHECK(v);
  MESSAGE(t.triangles_found << " wide triangles found, " << t.triangles_missed << " not found");
}
