#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "polylink/angles.hpp"
#include "polylink/branching.hpp"

using namespace polylink;

namespace {

RationalAngle A(std::int64_t p, std::int64_t q = 1) { return RationalAngle(p, q); }

}  // namespace

TEST_CASE("rational arithmetic is exact and reduced") {
  Rational a(6, -8);
  CHECK(a.num() == -3);
  CHECK(a.den() == 4);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("angle parsing and printing") {
  CHECK(RationalAngle::parse("3/2") == A(3, 2));
  CHECK(RationalAngle::parse("1") == A(1));
  CHECK(A(6, 4).str() == "3/2");
  CHECK(A(1, 2) + A(1, 3) == A(5, 6));
  CHECK(A(2, 3) * 3 == A(2));
  CHECK(A(3, 2) / A(1, 2) == Rational(3));
}

TEST_CASE("cone tuples are sorted and bounded") {
  ConeTuple t{A(3, 2), A(1), A(1, 2)};
  CHECK(t.angles().front() == A(1, 2));
  CHECK(t.angles().back() == A(3, 2));
  CHECK(t == ConeTuple{A(1, 2), A(3, 2), A(1)});
  CHECK_THROWS(ConeTuple{A(2)});
  CHECK_THROWS(ConeTuple{A(0)});
}

TEST_CASE("Gauss-Bonnet area") {
  CHECK(gb_area(ConeTuple{}) == A(4));
  CHECK(gb_area(ConeTuple{A(1), A(3, 2), A(3, 2), A(3, 2)}) == A(3, 2));
  CHECK(gb_area(ConeTuple{A(1), A(1), A(1)}) == A(1));
  // order does not matter and tuples are canonical anyway
  CHECK(gb_area(ConeTuple{A(3, 2), A(1), A(1, 2)}) == gb_area(ConeTuple{A(1, 2), A(1), A(3, 2)}));
}

TEST_CASE("base orbifolds") {
  for (auto f : {BaseFamily::S4, BaseFamily::D6}) {
    const auto& b = base_of(f);
    REQUIRE(b.size() == 3);
    RationalAngle deficit(0, 1);
    for (const auto& p : b.branch_points) {
      CHECK(p.angle * p.order == RationalAngle::full_turn());
      deficit = deficit + (RationalAngle::full_turn() - p.angle);
    }
    // area from Gauss-Bonnet on the three branch points
    CHECK(b.area == A(4) - deficit);
  }
  CHECK(s4_base().area == A(1, 6));
  CHECK(d6_base().area == A(1, 3));
  CHECK(s4_base().rotation_group_order == 24);
  CHECK(d6_base().rotation_group_order == 12);
  CHECK(s4_base().order(0) == 2);
  CHECK(s4_base().order(1) == 3);
  CHECK(s4_base().order(2) == 4);
  CHECK(d6_base().order(2) == 6);
}

TEST_CASE("allowed angles") {
  std::set<RationalAngle> s4{A(1, 2), A(2, 3), A(1), A(4, 3), A(3, 2)};
  std::set<RationalAngle> d6{A(1, 3), A(2, 3), A(1), A(4, 3), A(5, 3)};
  CHECK(allowed_angles(BaseFamily::S4) == s4);
  CHECK(allowed_angles(BaseFamily::D6) == d6);
  std::set<RationalAngle> all = s4;
  all.insert(d6.begin(), d6.end());
  CHECK(all.size() == 7);
}

TEST_CASE("tuple enumeration over S4, four cone points") {
  auto positive = enumerate_tuples(BaseFamily::S4, 4, {true, false});
  auto lune = enumerate_tuples(BaseFamily::S4, 4, {true, true});
  CHECK(positive.size() == 32);
  CHECK(lune.size() == 31);
  std::vector<ConeTuple> rejected;
  for (const auto& t : positive) {
    if (std::find(lune.begin(), lune.end(), t) == lune.end()) rejected.push_back(t);
  }
  REQUIRE(rejected.size() == 1);
  CHECK(rejected[0] == ConeTuple{A(1, 2), A(3, 2), A(3, 2), A(3, 2)});
  CHECK(std::is_sorted(positive.begin(), positive.end()));
}

TEST_CASE("tuple enumeration over S4, seven cone points") {
  auto t = enumerate_tuples(BaseFamily::S4, 7, {true, false});
  REQUIRE(t.size() == 3);
  std::vector<RationalAngle> a(7, A(3, 2));
  CHECK(std::find(t.begin(), t.end(), ConeTuple(a)) != t.end());
  a[0] = A(4, 3);
  CHECK(std::find(t.begin(), t.end(), ConeTuple(a)) != t.end());
  a[1] = A(4, 3);
  CHECK(std::find(t.begin(), t.end(), ConeTuple(a)) != t.end());
}

TEST_CASE("positivity ceilings") {
  CHECK(positivity_ceiling(BaseFamily::S4) == 7);
  CHECK(positivity_ceiling(BaseFamily::D6) == 11);
  CHECK(enumerate_tuples(BaseFamily::S4, 8, {true, false}).empty());
  CHECK(enumerate_tuples(BaseFamily::D6, 12, {true, false}).empty());
  CHECK(!enumerate_tuples(BaseFamily::D6, 11, {true, false}).empty());
}

TEST_CASE("six cone points: positivity admits more than three tuples") {
  auto t = enumerate_tuples(BaseFamily::S4, 6, {true, false});
  std::vector<RationalAngle> a{A(4, 3), A(4, 3), A(3, 2), A(3, 2), A(3, 2), A(3, 2)};
  CHECK(std::find(t.begin(), t.end(), ConeTuple(a)) != t.end());
  CHECK(t.size() > 3);
  std::size_t with_data = 0;
  for (const auto& tuple : t) {
    if (passes_lune(tuple) && !enumerate_branching(tuple, BaseFamily::S4).empty()) ++with_data;
  }
  CHECK(with_data == 0);
}

TEST_CASE("degree from area") {
  CHECK(degree_of(ConeTuple{A(4, 3), A(3, 2), A(3, 2), A(3, 2)}, BaseFamily::S4) == 11);
  CHECK(degree_of(ConeTuple{A(1, 3), A(1), A(1)}, BaseFamily::D6) == 1);
  CHECK(degree_of(ConeTuple{A(4, 3), A(4, 3), A(4, 3), A(3, 2), A(3, 2)}, BaseFamily::S4) == 6);
  CHECK_THROWS_AS(degree_of(ConeTuple{A(1, 2), A(1), A(1)}, BaseFamily::D6), NotIntegral);
}

TEST_CASE("branching data") {
  auto one = enumerate_branching(ConeTuple{A(1), A(3, 2), A(3, 2), A(3, 2)}, BaseFamily::S4);
  REQUIRE(one.size() == 1);
  CHECK(one[0].degree == 9);
  CHECK(one[0].columns[0] == std::vector<int>{1, 2, 2, 2, 2});
  CHECK(one[0].columns[1] == std::vector<int>{3, 3, 3});
  CHECK(one[0].columns[2] == std::vector<int>{3, 3, 3});

  CHECK(enumerate_branching(ConeTuple{A(4, 3), A(3, 2), A(3, 2), A(3, 2)}, BaseFamily::S4).empty());

  auto id = enumerate_branching(ConeTuple{A(1, 3), A(1), A(1)}, BaseFamily::D6);
  REQUIRE(id.size() == 1);
  CHECK(id[0].degree == 1);
  CHECK(id[0].columns == std::vector<std::vector<int>>{{1}, {1}, {1}});
  CHECK(is_swap_canonical(id[0]));

  // (2pi/3, pi, pi) over D6 in degree 2: the z1/z2 exchange pairs up data
  auto two = enumerate_branching(ConeTuple{A(2, 3), A(1), A(1)}, BaseFamily::D6);
  int canonical = 0;
  for (const auto& d : two) canonical += is_swap_canonical(d);
  CHECK(two.size() == 2);
  CHECK(canonical == 1);
}

TEST_CASE("every datum sums to its degree and reproduces its tuple") {
  for (auto f : {BaseFamily::S4, BaseFamily::D6}) {
    const auto& base = base_of(f);
    for (int n = 3; n <= positivity_ceiling(f); ++n) {
      for (const auto& t : enumerate_tuples(f, n)) {
        for (const auto& d : enumerate_branching(t, f)) {
          for (std::size_t j = 0; j < 3; ++j) {
            int sum = 0;
            for (int l : d.columns[j]) {
              CHECK(l >= 1);
              CHECK(l <= base.order(j));
              sum += l;
            }
            CHECK(sum == d.degree);
          }
          CHECK(d.cone_angles() == t);
        }
      }
    }
  }
}

TEST_CASE("S4 tuples needing an odd y1 column without an angle pi have no data") {
  for (int n = 3; n <= 7; ++n) {
    for (const auto& t : enumerate_tuples(BaseFamily::S4, n)) {
      int d = 0;
      try {
        d = degree_of(t, BaseFamily::S4);
      } catch (const NotIntegral&) {
        continue;
      }
      bool has_pi = std::find(t.angles().begin(), t.angles().end(), A(1)) != t.angles().end();
      if (d % 2 == 1 && !has_pi) CHECK(enumerate_branching(t, BaseFamily::S4).empty());
    }
  }
}
