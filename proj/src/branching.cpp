#include "polylink/branching.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace polylink {

ConeTuple BranchingDatum::cone_angles() const {
  const auto& b = base_of(base);
  std::vector<RationalAngle> angles;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const int k = b.order(j);
    for (int l : columns[j]) {
      if (l < k) angles.emplace_back(2 * l, k);
    }
  }
  return ConeTuple(std::move(angles));
}

std::string BranchingDatum::str() const {
  const auto& b = base_of(base);
  std::ostringstream os;
  os << family_name(base) << " d=" << degree;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    os << " " << b.branch_points[j].label << "(";
    for (std::size_t i = 0; i < columns[j].size(); ++i) os << (i ? "," : "") << columns[j][i];
    os << ")";
  }
  return os.str();
}

int positivity_ceiling(BaseFamily base) {
  // The smallest deficit 2pi - alpha over the allowed angles bounds n.
  const auto angles = allowed_angles(base);
  const RationalAngle min_deficit = RationalAngle::full_turn() - *angles.rbegin();
  const Rational ratio = RationalAngle(4, 1) / min_deficit;
  // Strict inequality n * min_deficit < 4pi.
  std::int64_t n = ratio.num() / ratio.den();
  if (ratio.is_integer()) --n;
  return static_cast<int>(n);
}

bool passes_positivity(const ConeTuple& tuple) { return gb_area(tuple) > RationalAngle(0, 1); }

bool passes_lune(const ConeTuple& tuple) {
  if (tuple.empty()) return true;
  return gb_area(tuple) < tuple.min() * 2;
}

std::vector<ConeTuple> enumerate_tuples(BaseFamily base, int n, TupleFilters filters) {
  std::vector<ConeTuple> out;
  if (n < 0) return out;
  const std::vector<RationalAngle> alphabet = [&] {
    auto s = allowed_angles(base);
    return std::vector<RationalAngle>(s.begin(), s.end());
  }();
  std::vector<RationalAngle> current;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(current.size()) == n) {
      ConeTuple t(current);
      if (filters.positivity && !passes_positivity(t)) return;
      if (filters.lune && !passes_lune(t)) return;
      out.push_back(std::move(t));
      return;
    }
    for (std::size_t i = from; i < alphabet.size(); ++i) {
      current.push_back(alphabet[i]);
      rec(i);
      current.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

int degree_of(const ConeTuple& tuple, BaseFamily base) {
  const RationalAngle area = gb_area(tuple);
  const Rational ratio = area / base_of(base).area;
  if (!ratio.is_integer() || ratio.num() <= 0) {
    throw NotIntegral("area " + area.str() + " pi is not a positive integer multiple of the " +
                      family_name(base) + " base area");
  }
  return static_cast<int>(ratio.num());
}

std::vector<BranchingDatum> enumerate_branching(const ConeTuple& tuple, BaseFamily base) {
  int degree = 0;
  try {
    degree = degree_of(tuple, base);
  } catch (const NotIntegral&) {
    return {};
  }
  const auto& b = base_of(base);
  const std::size_t npts = b.size();

  // Distinct angle values with multiplicities, and for each value the branch
  // points able to produce it together with the multiplicity l it needs.
  std::map<RationalAngle, int> counts;
  for (const auto& a : tuple.angles()) ++counts[a];
  struct Value {
    int count;
    std::vector<std::pair<std::size_t, int>> options;  // (branch point, l)
  };
  std::vector<Value> values;
  for (const auto& [angle, count] : counts) {
    Value v{count, {}};
    for (std::size_t j = 0; j < npts; ++j) {
      const Rational l = angle / RationalAngle(2, b.order(j));
      if (l.is_integer() && l.num() >= 1 && l.num() < b.order(j)) {
        v.options.emplace_back(j, static_cast<int>(l.num()));
      }
    }
    if (v.options.empty()) return {};
    values.push_back(std::move(v));
  }

  std::set<BranchingDatum> found;
  std::vector<std::vector<int>> columns(npts);

  std::function<void(std::size_t)> assign_value;
  // Distribute `remaining` copies of values[vi] among its options from index oi on.
  std::function<void(std::size_t, std::size_t, int)> distribute = [&](std::size_t vi, std::size_t oi,
                                                                      int remaining) {
    const auto& v = values[vi];
    if (oi + 1 == v.options.size()) {
      auto [j, l] = v.options[oi];
      for (int c = 0; c < remaining; ++c) columns[j].push_back(l);
      assign_value(vi + 1);
      for (int c = 0; c < remaining; ++c) columns[j].pop_back();
      return;
    }
    auto [j, l] = v.options[oi];
    for (int take = 0; take <= remaining; ++take) {
      for (int c = 0; c < take; ++c) columns[j].push_back(l);
      distribute(vi, oi + 1, remaining - take);
      for (int c = 0; c < take; ++c) columns[j].pop_back();
    }
  };
  assign_value = [&](std::size_t vi) {
    if (vi == values.size()) {
      BranchingDatum datum{base, degree, {}};
      for (std::size_t j = 0; j < npts; ++j) {
        int sum = 0;
        for (int l : columns[j]) sum += l;
        const int rest = degree - sum;
        if (rest < 0 || rest % b.order(j) != 0) return;
        std::vector<int> col = columns[j];
        col.insert(col.end(), rest / b.order(j), b.order(j));
        std::sort(col.begin(), col.end());
        datum.columns.push_back(std::move(col));
      }
      found.insert(std::move(datum));
      return;
    }
    distribute(vi, 0, values[vi].count);
  };
  assign_value(0);
  return {found.begin(), found.end()};
}

bool is_swap_canonical(const BranchingDatum& datum) {
  if (datum.base != BaseFamily::D6) return true;
  return datum.columns[0] <= datum.columns[1];
}

}  // namespace polylink
