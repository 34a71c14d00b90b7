#include "polylink/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

namespace polylink {

namespace {

constexpr std::array<std::pair<SubgroupType, const char*>, 11> kNames{{
    {SubgroupType::Trivial, "1"},
    {SubgroupType::C2, "C2"},
    {SubgroupType::C3, "C3"},
    {SubgroupType::C4, "C4"},
    {SubgroupType::C6, "C6"},
    {SubgroupType::D2, "D2"},
    {SubgroupType::D3, "D3"},
    {SubgroupType::D4, "D4"},
    {SubgroupType::D6, "D6"},
    {SubgroupType::A4, "A4"},
    {SubgroupType::S4, "S4"},
}};

RotationGroupModel make_model(BaseFamily family, int points, const std::vector<std::vector<int>>& g1,
                              const std::vector<std::vector<int>>& g3) {
  RotationGroupModel m{family, {}, {}};
  m.generators[0] = Permutation::from_cycles(points, g1);
  m.generators[2] = Permutation::from_cycles(points, g3);
  m.generators[1] = m.generators[0].inverse().then(m.generators[2].inverse());
  std::set<Permutation> seen{Permutation::identity(points)};
  std::deque<Permutation> queue{Permutation::identity(points)};
  while (!queue.empty()) {
    Permutation h = queue.front();
    queue.pop_front();
    for (const auto& g : m.generators) {
      Permutation x = h.then(g);
      if (seen.insert(x).second) queue.push_back(x);
    }
  }
  m.elements.assign(seen.begin(), seen.end());
  return m;
}

}  // namespace

std::string subgroup_name(SubgroupType t) {
  for (const auto& [k, v] : kNames)
    if (k == t) return v;
  return "?";
}

SubgroupType parse_subgroup(std::string_view text) {
  for (const auto& [k, v] : kNames)
    if (text == v) return k;
  throw std::invalid_argument("unknown subgroup type: " + std::string(text));
}

int subgroup_order(SubgroupType t) {
  switch (t) {
    case SubgroupType::Trivial: return 1;
    case SubgroupType::C2: return 2;
    case SubgroupType::C3: return 3;
    case SubgroupType::C4:
    case SubgroupType::D2: return 4;
    case SubgroupType::C6:
    case SubgroupType::D3: return 6;
    case SubgroupType::D4: return 8;
    case SubgroupType::D6:
    case SubgroupType::A4: return 12;
    case SubgroupType::S4: return 24;
  }
  return 0;
}

std::vector<std::string> RotationGroupModel::violations() const {
  std::vector<std::string> out;
  const auto& b = base_of(family);
  for (std::size_t j = 0; j < 3; ++j) {
    if (generators[j].order() != b.order(j)) out.push_back("generator " + std::to_string(j + 1) + " has wrong order");
  }
  if (!generators[0].then(generators[1]).then(generators[2]).is_identity()) {
    out.push_back("generators do not multiply to the identity");
  }
  if (static_cast<int>(elements.size()) != b.rotation_group_order) {
    out.push_back("generated group has order " + std::to_string(elements.size()));
  }
  return out;
}

const RotationGroupModel& s4_model() {
  // Rotations of the cube acting on its four body diagonals.
  static const RotationGroupModel m = make_model(BaseFamily::S4, 4, {{0, 1}}, {{0, 1, 2, 3}});
  return m;
}

const RotationGroupModel& d6_model() {
  // Rotations of the hexagonal prism acting on the six side faces.
  static const RotationGroupModel m = make_model(BaseFamily::D6, 6, {{1, 5}, {2, 4}}, {{0, 1, 2, 3, 4, 5}});
  return m;
}

const RotationGroupModel& model_of(BaseFamily f) { return f == BaseFamily::S4 ? s4_model() : d6_model(); }

SubgroupType classify_subgroup(const std::vector<Permutation>& elements) {
  int max_order = 1;
  for (const auto& e : elements) max_order = std::max(max_order, e.order());
  switch (elements.size()) {
    case 1: return SubgroupType::Trivial;
    case 2: return SubgroupType::C2;
    case 3: return SubgroupType::C3;
    case 4: return max_order == 4 ? SubgroupType::C4 : SubgroupType::D2;
    case 6: return max_order == 6 ? SubgroupType::C6 : SubgroupType::D3;
    case 8: return SubgroupType::D4;
    case 12: return max_order == 6 ? SubgroupType::D6 : SubgroupType::A4;
    case 24: return SubgroupType::S4;
    default: break;
  }
  throw InvariantViolation("subgroup of order " + std::to_string(elements.size()) + " is not a rotation group");
}

std::vector<Permutation> holonomy_elements(const Constellation& c, const RotationGroupModel& model) {
  const auto& els = model.elements;
  const int g = static_cast<int>(els.size());
  auto index_of = [&](const Permutation& p) {
    return static_cast<int>(std::lower_bound(els.begin(), els.end(), p) - els.begin());
  };
  std::vector<std::array<int, 3>> step(g);
  for (int h = 0; h < g; ++h)
    for (int j = 0; j < 3; ++j) step[h][j] = index_of(els[h].then(model.generators[j]));

  // Walk the covering of (sheet, group element) pairs from (0, e); the
  // elements reachable over sheet 0 are the images of loops at sheet 0.
  std::vector<char> seen(static_cast<std::size_t>(c.degree) * g, 0);
  const int e = index_of(Permutation::identity(els.front().size()));
  std::vector<std::pair<int, int>> stack{{0, e}};
  seen[e] = 1;
  while (!stack.empty()) {
    auto [i, h] = stack.back();
    stack.pop_back();
    for (int j = 0; j < 3; ++j) {
      const int i2 = c.sigma[j][i];
      const int h2 = step[h][j];
      char& s = seen[static_cast<std::size_t>(i2) * g + h2];
      if (!s) {
        s = 1;
        stack.emplace_back(i2, h2);
      }
    }
  }
  std::vector<Permutation> out;
  for (int h = 0; h < g; ++h)
    if (seen[h]) out.push_back(els[h]);
  return out;
}

SubgroupType holonomy_group(const Constellation& c, const RotationGroupModel& model) {
  return classify_subgroup(holonomy_elements(c, model));
}

std::optional<Permutation> find_reflection(const Constellation& c, BaseFamily base) {
  const int d = c.degree;
  const Permutation inv1 = c.sigma[0].inverse();
  const Permutation inv2 = c.sigma[1].inverse();
  const std::array<const Permutation*, 2> fwd{&c.sigma[0], &c.sigma[1]};
  const std::array<const Permutation*, 2> bwd{&inv1, &inv2};
  for (int a = 0; a < d; ++a) {
    // p(s(i)) = s^-1(p(i)) determines p from p(0) by transitivity.
    std::vector<int> p(d, -1);
    std::vector<int> stack{0};
    p[0] = a;
    bool ok = true;
    while (ok && !stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (int k = 0; k < 2 && ok; ++k) {
        const int x = (*fwd[k])[i];
        const int y = (*bwd[k])[p[i]];
        if (p[x] < 0) {
          p[x] = y;
          stack.push_back(x);
        } else if (p[x] != y) {
          ok = false;
        }
      }
    }
    if (!ok) continue;
    std::vector<int> copy = p;
    std::sort(copy.begin(), copy.end());
    if (std::adjacent_find(copy.begin(), copy.end()) != copy.end()) continue;
    bool involution = true;
    for (int i = 0; i < d; ++i) involution = involution && p[p[i]] == i;
    if (!involution) continue;
    bool fixed_edge = false;
    for (int i = 0; i < d && !fixed_edge; ++i) {
      fixed_edge = p[i] == i || p[i] == c.sigma[1][i] || p[i] == inv1[i];
    }
    if (!fixed_edge) continue;
    // Every cone point must lie on the fixed circle, otherwise the quotient
    // disk carries interior cone points. Vertices over the third branch point
    // of triangle i map to those of sigma_1-then-p applied to i.
    bool cones_fixed = true;
    const auto& b = base_of(base);
    for (int j = 0; j < 3 && cones_fixed; ++j) {
      for (const auto& cyc : c.sigma[j].cycles()) {
        if (static_cast<int>(cyc.size()) >= b.order(j)) continue;
        const int img = j < 2 ? p[cyc[0]] : p[c.sigma[0][cyc[0]]];
        if (std::find(cyc.begin(), cyc.end(), img) == cyc.end()) {
          cones_fixed = false;
          break;
        }
      }
    }
    if (cones_fixed) return Permutation(std::move(p));
  }
  return std::nullopt;
}

bool is_double(const Constellation& c, BaseFamily base) { return find_reflection(c, base).has_value(); }

std::string LinkRecord::theta_str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < theta.size(); ++i) s += (i ? ", " : "") + theta[i].str();
  return s + ")";
}

namespace {

std::vector<Rational> theta_of(const ConeTuple& t) {
  std::vector<Rational> out;
  for (const auto& a : t.angles()) out.push_back(a.coefficient() / Rational(2));
  return out;
}

struct Job {
  BaseFamily base;
  int n;
  ConeTuple tuple;
  BranchingDatum datum;
  CoverEnumeration result;
};

void run_jobs(std::vector<Job>& jobs, int workers) {
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) jobs[i].result = enumerate_covers(jobs[i].datum);
  };
  workers = std::max(1, std::min<int>(workers, static_cast<int>(jobs.size())));
  if (workers == 1) {
    work();
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
}

}  // namespace

Classification classify_all(const ClassifyOptions& options) {
  Classification out;
  std::vector<Job> jobs;
  std::map<std::pair<BaseFamily, int>, std::size_t> stage_of;

  for (BaseFamily base : options.bases) {
    const int n_max = options.n_max > 0 ? options.n_max : positivity_ceiling(base);
    for (int n = options.n_min; n <= n_max; ++n) {
      StageCount sc{base, n};
      sc.tuples_positive = static_cast<int>(enumerate_tuples(base, n, {true, false}).size());
      const auto tuples = enumerate_tuples(base, n, {true, true});
      sc.tuples_lune = static_cast<int>(tuples.size());
      for (const auto& t : tuples) {
        try {
          degree_of(t, base);
        } catch (const NotIntegral&) {
          continue;
        }
        ++sc.tuples_integral;
        bool any = false;
        for (auto& datum : enumerate_branching(t, base)) {
          if (!is_swap_canonical(datum)) continue;
          any = true;
          ++sc.data;
          jobs.push_back({base, n, t, std::move(datum), {}});
        }
        if (any) ++sc.tuples_with_data;
      }
      stage_of[{base, n}] = out.stages.size();
      out.stages.push_back(sc);
    }
  }

  run_jobs(jobs, options.jobs);

  std::map<std::pair<ConeTuple, SubgroupType>, LinkRecord> merged;
  for (const auto& job : jobs) {
    StageCount& sc = out.stages[stage_of.at({job.base, job.n})];
    sc.nodes_visited += job.result.nodes_visited;
    if (job.result.covers.empty()) continue;
    ++sc.data_realized;
    std::set<Constellation> achiral;
    for (const auto& c : job.result.covers) {
      ++sc.covers;
      if (auto v = c.violations(job.base); !v.empty()) {
        throw InvariantViolation(job.datum.str() + ": " + v.front());
      }
      if (c.cone_angles(job.base) != job.tuple) throw InvariantViolation(job.datum.str() + ": cone angles differ");
      const Constellation m = class_representative(mirror(c), job.datum);
      achiral.insert(std::min(c, m));

      Realization r{job.datum, c, holonomy_group(c, model_of(job.base)), is_double(c, job.base)};
      auto& rec = merged[{job.tuple, r.holonomy}];
      if (rec.realizations.empty()) {
        rec.cone_angles = job.tuple;
        rec.theta = theta_of(job.tuple);
        rec.monodromy = r.holonomy;
      }
      rec.bases.insert(job.base);
      rec.is_double = rec.is_double || r.is_double;
      rec.realizations.push_back(std::move(r));
    }
    sc.achiral_covers += static_cast<int>(achiral.size());
  }

  for (auto& [key, rec] : merged) {
    if (rec.cone_angles.size() < 3 || rec.cone_angles.size() > 5) {
      throw InvariantViolation("link with " + std::to_string(rec.cone_angles.size()) + " cone points");
    }
    out.records.push_back(std::move(rec));
  }
  std::sort(out.records.begin(), out.records.end(), [](const LinkRecord& a, const LinkRecord& b) {
    if (a.theta.size() != b.theta.size()) return a.theta.size() < b.theta.size();
    if (a.theta != b.theta) return a.theta < b.theta;
    return subgroup_order(a.monodromy) < subgroup_order(b.monodromy);
  });
  // A filtered run keeps the row numbers of the full table.
  const bool filtered = options.bases.size() < 2 || options.n_min > 3 || options.n_max > 0;
  for (std::size_t i = 0; i < out.records.size(); ++i) {
    auto& rec = out.records[i];
    rec.table_index = static_cast<int>(i) + 1;
    if (!filtered) continue;
    for (const auto& g : golden_table()) {
      if (g.theta == rec.theta && g.monodromy == rec.monodromy) rec.table_index = g.index;
    }
  }
  return out;
}

int local_type_count(const Classification& c, std::optional<BaseFamily> only) {
  int links = 0;
  for (const auto& r : c.records)
    if (!only || r.bases.count(*only)) ++links;
  std::set<RationalAngle> angles;
  for (BaseFamily f : {BaseFamily::S4, BaseFamily::D6}) {
    if (only && f != *only) continue;
    const auto a = allowed_angles(f);
    angles.insert(a.begin(), a.end());
  }
  return links + static_cast<int>(angles.size()) + 1;
}

const std::vector<GoldenRow>& golden_table() {
  using S = SubgroupType;
  auto r = [](std::int64_t p, std::int64_t q) { return Rational(p, q); };
  // Version 1. Angles over 2pi, ascending; doubles; local monodromy.
  static const std::vector<GoldenRow> rows{
      {1, {r(1, 6), r(1, 2), r(1, 2)}, true, S::D6},
      {2, {r(1, 4), r(1, 4), r(2, 3)}, true, S::S4},
      {3, {r(1, 4), r(1, 3), r(1, 2)}, true, S::S4},
      {4, {r(1, 4), r(1, 3), r(3, 4)}, true, S::S4},
      {5, {r(1, 4), r(1, 2), r(1, 2)}, true, S::D4},
      {6, {r(1, 4), r(1, 2), r(2, 3)}, true, S::S4},
      {7, {r(1, 3), r(1, 3), r(1, 2)}, true, S::A4},
      {8, {r(1, 3), r(1, 3), r(2, 3)}, true, S::A4},
      {9, {r(1, 3), r(1, 2), r(1, 2)}, true, S::D3},
      {10, {r(1, 3), r(1, 2), r(2, 3)}, true, S::A4},
      {11, {r(1, 3), r(1, 2), r(3, 4)}, true, S::S4},
      {12, {r(1, 2), r(1, 2), r(1, 2)}, true, S::D2},
      {13, {r(1, 2), r(1, 2), r(2, 3)}, true, S::D3},
      {14, {r(1, 2), r(1, 2), r(3, 4)}, true, S::D4},
      {15, {r(1, 2), r(1, 2), r(5, 6)}, true, S::D6},
      {16, {r(1, 2), r(2, 3), r(2, 3)}, true, S::A4},
      {17, {r(1, 2), r(2, 3), r(3, 4)}, true, S::S4},
      {18, {r(2, 3), r(2, 3), r(2, 3)}, true, S::A4},
      {19, {r(2, 3), r(3, 4), r(3, 4)}, true, S::S4},
      {20, {r(1, 3), r(1, 2), r(2, 3), r(3, 4)}, true, S::S4},
      {21, {r(1, 2), r(1, 2), r(1, 2), r(2, 3)}, true, S::S4},
      {22, {r(1, 2), r(1, 2), r(1, 2), r(3, 4)}, false, S::S4},
      {23, {r(1, 2), r(1, 2), r(2, 3), r(2, 3)}, true, S::A4},
      {24, {r(1, 2), r(1, 2), r(2, 3), r(2, 3)}, true, S::S4},
      {25, {r(1, 2), r(1, 2), r(2, 3), r(3, 4)}, true, S::S4},
      {26, {r(1, 2), r(1, 2), r(3, 4), r(3, 4)}, true, S::S4},
      {27, {r(1, 2), r(2, 3), r(2, 3), r(3, 4)}, false, S::S4},
      {28, {r(1, 2), r(2, 3), r(3, 4), r(3, 4)}, true, S::S4},
      {29, {r(2, 3), r(2, 3), r(2, 3), r(2, 3)}, true, S::A4},
      {30, {r(2, 3), r(2, 3), r(3, 4), r(3, 4)}, true, S::S4},
      {31, {r(3, 4), r(3, 4), r(3, 4), r(3, 4)}, false, S::S4},
      {32, {r(2, 3), r(2, 3), r(2, 3), r(3, 4), r(3, 4)}, false, S::S4},
  };
  return rows;
}

namespace {

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(s));
  return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

std::string yes_no(bool b) { return b ? "Yes" : "No"; }

std::string theta_list(const std::vector<Rational>& theta) {
  std::string s = "(";
  for (std::size_t i = 0; i < theta.size(); ++i) s += (i ? ", " : "") + theta[i].str();
  return s + ")";
}

std::string bases_str(const LinkRecord& r) {
  std::string s;
  for (BaseFamily b : r.bases) s += (s.empty() ? "" : "+") + family_name(b);
  return s;
}

std::string degrees_str(const LinkRecord& r) {
  std::set<std::pair<BaseFamily, int>> ds;
  for (const auto& x : r.realizations) ds.insert({x.datum.base, x.datum.degree});
  std::string s;
  for (const auto& [b, d] : ds) s += (s.empty() ? "" : ";") + family_name(b) + ":" + std::to_string(d);
  return s;
}

}  // namespace

std::vector<GoldenRow> golden_from_json(const nlohmann::json& j) {
  std::vector<GoldenRow> rows;
  for (const auto& e : j) {
    GoldenRow r{e.at("index").get<int>(), {}, e.at("double").get<std::string>() == "Yes",
                parse_subgroup(e.at("monodromy").get<std::string>())};
    for (const auto& t : e.at("theta")) r.theta.push_back(parse_rational(t.get<std::string>()));
    rows.push_back(std::move(r));
  }
  return rows;
}

nlohmann::json golden_to_json(const std::vector<GoldenRow>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json theta = nlohmann::json::array();
    for (const auto& t : r.theta) theta.push_back(t.str());
    j.push_back({{"index", r.index}, {"theta", theta}, {"double", yes_no(r.is_double)},
                 {"monodromy", subgroup_name(r.monodromy)}});
  }
  return j;
}

std::vector<std::string> diff_against(const std::vector<LinkRecord>& records, const std::vector<GoldenRow>& golden) {
  std::vector<std::string> out;
  if (records.size() != golden.size()) {
    out.push_back("row count: computed " + std::to_string(records.size()) + ", expected " +
                  std::to_string(golden.size()));
  }
  const std::size_t n = std::min(records.size(), golden.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = records[i];
    const auto& g = golden[i];
    if (r.theta == g.theta && r.is_double == g.is_double && r.monodromy == g.monodromy) continue;
    std::ostringstream os;
    os << "row " << g.index << ": computed " << theta_list(r.theta) << " " << yes_no(r.is_double) << " "
       << subgroup_name(r.monodromy) << ", expected " << theta_list(g.theta) << " " << yes_no(g.is_double) << " "
       << subgroup_name(g.monodromy);
    out.push_back(os.str());
  }
  return out;
}

nlohmann::json to_json(const LinkRecord& r) {
  nlohmann::json theta = nlohmann::json::array();
  for (const auto& t : r.theta) theta.push_back(t.str());
  nlohmann::json angles = nlohmann::json::array();
  for (const auto& a : r.cone_angles.angles()) angles.push_back(a.str());
  nlohmann::json bases = nlohmann::json::array();
  for (BaseFamily b : r.bases) bases.push_back(family_name(b));
  nlohmann::json reals = nlohmann::json::array();
  for (const auto& x : r.realizations) {
    reals.push_back({{"base", family_name(x.datum.base)},
                     {"degree", x.datum.degree},
                     {"columns", x.datum.columns},
                     {"constellation", to_json(x.cover)},
                     {"holonomy", subgroup_name(x.holonomy)},
                     {"double", x.is_double}});
  }
  return {{"index", r.table_index},       {"theta", theta},
          {"cone_angles", angles},        {"double", yes_no(r.is_double)},
          {"monodromy", subgroup_name(r.monodromy)}, {"bases", bases},
          {"degrees", degrees_str(r)},    {"realization_count", r.realizations.size()},
          {"realizations", reals}};
}

std::string table_csv(const std::vector<LinkRecord>& records) {
  std::ostringstream os;
  os << "index,theta,double,monodromy,bases,degrees,realizations\n";
  for (const auto& r : records) {
    std::string theta;
    for (std::size_t i = 0; i < r.theta.size(); ++i) theta += (i ? " " : "") + r.theta[i].str();
    os << r.table_index << "," << theta << "," << yes_no(r.is_double) << "," << subgroup_name(r.monodromy) << ","
       << bases_str(r) << "," << degrees_str(r) << "," << r.realizations.size() << "\n";
  }
  return os.str();
}

std::string table_text(const std::vector<LinkRecord>& records) {
  std::ostringstream os;
  os << std::left << std::setw(4) << "#" << std::setw(32) << "theta" << std::setw(8) << "Double" << std::setw(11)
     << "Monodromy" << std::setw(8) << "Bases" << std::setw(14) << "Degrees"
     << "Realizations\n";
  for (const auto& r : records) {
    os << std::left << std::setw(4) << r.table_index << std::setw(32) << r.theta_str() << std::setw(8)
       << yes_no(r.is_double) << std::setw(11) << subgroup_name(r.monodromy) << std::setw(8) << bases_str(r)
       << std::setw(14) << degrees_str(r) << r.realizations.size() << "\n";
  }
  return os.str();
}

}  // namespace polylink
