#include "polylink/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "polylink/bounds.hpp"
#include "polylink/classifier.hpp"
#include "polylink/geometry.hpp"
#include "polylink/pointcloud.hpp"

namespace polylink {

namespace {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::set<BaseFamily> bases_of(const std::string& base) {
  if (base == "all") return {BaseFamily::S4, BaseFamily::D6};
  if (base == "s4" || base == "S4") return {BaseFamily::S4};
  if (base == "d6" || base == "D6") return {BaseFamily::D6};
  throw ConfigError("unknown base '" + base + "' (expected s4, d6 or all)");
}

ClassifyOptions classify_options(const RunConfig& config) {
  ClassifyOptions o;
  o.bases = bases_of(config.base);
  if (config.n_min) o.n_min = config.n_min;
  o.n_max = config.n_max;
  if (o.n_min < 3) throw ConfigError("--n-min must be at least 3");
  if (o.n_max && o.n_max < o.n_min) throw ConfigError("--n-max below --n-min");
  o.jobs = std::max(config.jobs, 1);
  return o;
}

const LinkRecord& record_at(const Classification& c, int row) {
  for (const auto& r : c.records) {
    if (r.table_index == row) return r;
  }
  throw ConfigError("no table row " + std::to_string(row));
}

const Realization& realization_at(const LinkRecord& r, int k) {
  if (k < 0 || k >= static_cast<int>(r.realizations.size())) {
    throw ConfigError("row " + std::to_string(r.table_index) + " has " + std::to_string(r.realizations.size()) +
                      " realizations");
  }
  return r.realizations[k];
}

std::string fixed(double v, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

int bits_for(int digits) { return std::max(64, static_cast<int>(std::ceil(digits * 3.3219280948873626)) + 16); }

std::string pass(bool ok) { return ok ? "ok" : "VIOLATED"; }

}  // namespace

int run_classify(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  auto options = classify_options(config);
  if (config.format != "table" && config.format != "json" && config.format != "csv") {
    throw ConfigError("classify: format must be table, json or csv");
  }
  Classification c = classify_all(options);
  if (config.format == "table") {
    out << table_text(c.records);
  } else if (config.format == "csv") {
    out << table_csv(c.records);
  } else {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : c.records) j.push_back(to_json(r));
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  RunConfig all = config;
  all.base = "all";
  Classification c = classify_all(classify_options(all));

  if (config.counts_only) {
    int d6 = 0, s4 = 0, both = 0;
    int by_size[6] = {0, 0, 0, 0, 0, 0};
    for (const auto& r : c.records) {
      bool on_s4 = r.bases.count(BaseFamily::S4) > 0;
      bool on_d6 = r.bases.count(BaseFamily::D6) > 0;
      d6 += on_d6;
      s4 += on_s4;
      both += on_s4 && on_d6;
      if (on_s4 && r.theta.size() < 6) ++by_size[r.theta.size()];
    }
    struct Check {
      std::string name;
      int value, expected;
    };
    const Check checks[] = {{"links", static_cast<int>(c.records.size()), 32},
                            {"over D6", d6, 5},
                            {"over S4", s4, 30},
                            {"over both", both, 3},
                            {"S4 with 3 cone points", by_size[3], 17},
                            {"S4 with 4 cone points", by_size[4], 12},
                            {"S4 with 5 cone points", by_size[5], 1}};
    bool ok = true;
    for (const auto& ch : checks) {
      bool good = ch.value == ch.expected;
      ok = ok && good;
      out << (good ? "ok   " : "FAIL ") << ch.name << ": " << ch.value << " (expected " << ch.expected << ")\n";
    }
    return ok ? kExitOk : kExitMismatch;
  }

  std::vector<GoldenRow> golden;
  if (config.golden.empty()) {
    golden = golden_table();
  } else {
    std::ifstream in(config.golden);
    if (!in) throw ConfigError("cannot read " + config.golden);
    nlohmann::json j;
    try {
      in >> j;
      golden = golden_from_json(j);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("bad golden file " + config.golden + ": " + e.what());
    }
  }
  auto diffs = diff_against(c.records, golden);
  if (diffs.empty()) {
    out << "table matches: " << golden.size() << " rows\n";
    return kExitOk;
  }
  for (const auto& d : diffs) err << d << "\n";
  out << "table differs in " << diffs.size() << " row(s)\n";
  return kExitMismatch;
}

int run_dessin(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  if (config.format != "dot" && config.format != "table") throw ConfigError("dessin: format must be dot");
  RunConfig all = config;
  all.base = "all";
  Classification c = classify_all(classify_options(all));
  const auto& rec = record_at(c, config.row);
  const auto& real = realization_at(rec, config.realization);
  out << to_dot(dessin_of(real.cover, real.datum.base), "row" + std::to_string(rec.table_index));
  return kExitOk;
}

int run_surface(const RunConfig& config, std::ostream& out, std::ostream& err) {
  RunConfig all = config;
  all.base = "all";
  Classification c = classify_all(classify_options(all));
  if (config.refinement < 0 || config.refinement > 8) throw ConfigError("--refinement must lie in 0..8");

  if (config.certify) {
    CertifyOptions o;
    o.max_refinement = config.max_refinement;
    o.min_refinement = std::min(o.min_refinement, o.max_refinement);
    o.sample_level = config.sample_level;
    o.jobs = std::max(config.jobs, 1);
    try {
      Epsilon0Bracket b = certify_epsilon0(c.records, o);
      out << "row,refinement,diameter_lower,diameter_upper\n";
      for (const auto& l : b.links) {
        out << l.table_index << "," << l.refinement << "," << fixed(l.lower) << "," << fixed(l.upper) << "\n";
      }
      out << "epsilon0 in [" << fixed(b.lower) << ", " << fixed(b.upper) << "]\n";
      return kExitOk;
    } catch (const NotConverged& e) {
      err << e.what() << "\n";
      return kExitMismatch;
    }
  }

  const auto& rec = record_at(c, config.row);
  const auto& real = realization_at(rec, config.realization);
  ConeSurface s(real.cover, real.datum.base);
  if (config.format == "off") {
    out << to_off(s, config.refinement);
  } else if (config.format == "obj") {
    out << to_obj(s, config.refinement);
  } else if (config.format == "csv") {
    out << distance_csv(s, estimate_distances(s, config.refinement, config.sample_level));
  } else if (config.format == "table") {
    DistanceEstimate d = estimate_distances(s, config.refinement, config.sample_level);
    out << "row " << rec.table_index << " " << rec.theta_str() << " over " << family_name(real.datum.base) << "\n";
    out << "triangles " << s.triangle_count() << ", edges " << s.edge_count() << ", vertices " << s.vertex_count()
        << ", euler characteristic " << s.euler_characteristic() << "\n";
    out << "area exact " << fixed(s.exact_area().radians(), 12) << ", numerical " << fixed(s.numerical_area(3), 12)
        << "\n";
    out << "diameter in [" << fixed(d.diameter_lower) << ", " << fixed(d.diameter_upper) << "] at refinement "
        << d.refinement << "\n";
  } else {
    throw ConfigError("surface: format must be off, obj, csv or table");
  }
  return kExitOk;
}

int run_bounds(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  const int n = config.dimension;
  if (n < 2) throw ConfigError("bounds: --n must be at least 2");
  if (config.precision_digits < 10 || config.precision_digits > 4000) {
    throw ConfigError("bounds: --digits must lie in 10..4000");
  }
  PrecisionOptions prec;
  prec.start_bits = bits_for(config.precision_digits);
  prec.max_bits = std::max<mpfr_prec_t>(prec.start_bits * 64, 1 << 14);

  if (config.epsilon_grid) {
    if (config.grid_points < 1) throw ConfigError("bounds: --grid-points must be positive");
    const int g = config.grid_points;
    int agree = 0, compared = 0;
    out << "k,delta,m,closed_form\n";
    for (int k = 1; k <= g; ++k) {
      Rational q(k, g + 1);
      long m = m_n(pi_times(q), n, prec);
      std::string closed = "-";
      if (n == 2 || n == 3) {
        long cf = 0;
        if (n == 2) {
          cf = 2 * (g + 1) / k + 2;
        } else {
          long double d = static_cast<long double>(q.to_double()) * std::numbers::pi_v<long double>;
          cf = static_cast<long>(std::floor(2 / (1 - std::cos(d / 2)))) + 2;
        }
        closed = std::to_string(cf);
        ++compared;
        agree += cf == m;
      }
      out << k << "," << fixed(q.to_double() * std::numbers::pi, 12) << "," << m << "," << closed << "\n";
    }
    out << "closed form agrees on " << agree << "/" << compared << " grid points\n";
    return agree == compared ? kExitOk : kExitMismatch;
  }

  if (config.epsilon.empty()) throw ConfigError("bounds: --epsilon or --epsilon-grid required");
  AngleInput eps;
  try {
    eps = parse_angle_input(config.epsilon);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  RealExpr e = eps.value();
  RealExpr delta = narrow_delta(e);
  Interval dv = delta(prec.start_bits);
  if (!(mpfr_sgn(dv.lo()) > 0) || mpfr_cmp(dv.hi(), Interval::pi(prec.start_bits).lo()) >= 0) {
    throw ConfigError("bounds: epsilon must lie in (0, pi)");
  }
  Interval ev = e(prec.start_bits);
  if (mpfr_sgn(ev.lo()) <= 0) throw ConfigError("bounds: epsilon must lie in (0, pi)");
  Interval s = (dv * Interval::rational(Rational(1, 2), prec.start_bits)).sin();
  Interval ibeta = reg_inc_beta(s * s, n);
  long m = m_n(delta, n, prec);
  BigCount b = bound_from_m(n, m);
  out << "n = " << n << "\n";
  out << "epsilon = " << eps.text << "\n";
  out << "delta = (pi - epsilon)/2 = " << dv.str(config.precision_digits) << "\n";
  out << "I = " << ibeta.str(config.precision_digits) << "\n";
  out << "m = " << m << "\n";
  out << "B = 2 * (2 * 25^" << n << ")^" << (m - 2) << "\n";
  out << "B digits = " << decimal_digits(b) << "\n";
  out << "B = " << b.str() << "\n";
  return kExitOk;
}

int run_narrow_demo(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!config.seed) throw ConfigError("narrow-demo: --seed is required");
  if (config.dimension < 1 || config.dimension > 8) throw ConfigError("narrow-demo: --n must lie in 1..8");
  Rational alpha;
  try {
    alpha = RationalAngle::parse(config.alpha).coefficient();
  } catch (const std::exception&) {
    throw ConfigError("narrow-demo: bad --alpha '" + config.alpha + "'");
  }
  if (alpha <= Rational(0) || alpha >= Rational(1)) throw ConfigError("narrow-demo: --alpha must lie in (0, 1)");
  AngleInput eps;
  try {
    eps = parse_angle_input(config.epsilon.empty() ? "pi/2" : config.epsilon);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const double epsilon = eps.approx();
  if (!(epsilon > 0 && epsilon < std::numbers::pi)) throw ConfigError("narrow-demo: epsilon must lie in (0, pi)");

  int violations = 0;
  const int clouds = config.input.empty() ? std::max(config.clouds, 1) : 1;
  for (int k = 0; k < clouds; ++k) {
    const std::uint64_t seed = *config.seed + k;
    PointCloud s(config.dimension);
    if (!config.input.empty()) {
      std::ifstream in(config.input);
      if (!in) throw ConfigError("cannot read " + config.input);
      s = read_csv(in);
    } else if (config.generator == "uniform") {
      s = uniform_cube(config.points, config.dimension, seed);
    } else if (config.generator == "clustered") {
      std::size_t per = std::max<std::size_t>(1, config.points / std::max(config.levels, 1));
      s = clustered_cloud(config.levels, per, config.dimension, seed);
    } else {
      throw ConfigError("narrow-demo: generator must be uniform or clustered");
    }
    if (s.size() < 3) throw ConfigError("narrow-demo: need at least three points");
    const int n = s.dim();

    out << "cloud " << k << ": " << s.size() << " points in dimension " << n;
    if (config.input.empty()) out << ", seed " << seed;
    out << "\n";
    auto [p, q] = diameter_pair(s);
    const Wide d2 = s.dist2(p, q);
    out << "  diameter " << fixed(s.dist(p, q), 9) << " between points " << p << " and " << q << "\n";

    NetRadius r{d2, alpha * Rational(1, 4)};
    auto centers = greedy_net(s, r);
    auto net_bad = net_violations(s, centers, r);
    const auto bound = net_bound(alpha, n);
    bool net_ok = net_bad.empty() && static_cast<std::int64_t>(centers.size()) <= bound;
    out << "  net at alpha d/4: " << centers.size() << " centers, bound " << bound << ", " << pass(net_ok) << "\n";

    ShrinkStep st = shrink_step(s, alpha);
    auto step_bad = shrink_step_violations(s, alpha, st);
    out << "  shrink step: x = " << st.x << ", |S'| = " << st.next.size() << ", kept "
        << (st.kept_p_half ? "P" : "Q") << ", " << pass(step_bad.empty()) << "\n";
    for (const auto& v : step_bad) err << "  " << v << "\n";

    RealExpr e{[epsilon](mpfr_prec_t b) { return Interval::from_double(epsilon, b); }, std::nullopt};
    const long m = m_n(narrow_delta(e), std::max(n, 2));
    auto seq = shrink_sequence(s, alpha, m);
    bool decay_ok = !decay_violation(s, seq, alpha).has_value();
    out << "  shrink sequence (m = " << m << "): " << seq.size() << " points, decay " << pass(decay_ok) << "\n   ";
    for (auto i : seq) out << " " << i;
    out << "\n";

    auto w = find_wide_triangle(s, epsilon);
    bool wide_ok = true;
    if (w) {
      wide_ok = wide_triangle_holds(s, *w, epsilon);
      out << "  wide triangle: x = " << w->x << ", y = " << w->y << ", z = " << w->z << ", angle xyz "
          << fixed(angle_at(s, w->x, w->y, w->z), 9) << " > " << fixed(epsilon, 9) << " ("
          << (w->from_sequence ? "sequence" : "exhaustive") << "), " << pass(wide_ok) << "\n";
    } else {
      out << "  wide triangle: not found\n";
    }
    violations += !net_ok + !step_bad.empty() + !decay_ok + !wide_ok;
  }
  out << "violations: " << violations << "\n";
  return violations ? kExitMismatch : kExitOk;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* target = &out;
  if (!config.output.empty()) {
    file.open(config.output);
    if (!file) {
      err << "cannot write " << config.output << "\n";
      return kExitConfig;
    }
    target = &file;
  }
  try {
    if (config.command == "classify") return run_classify(config, *target, err);
    if (config.command == "verify") return run_verify(config, *target, err);
    if (config.command == "dessin") return run_dessin(config, *target, err);
    if (config.command == "surface") return run_surface(config, *target, err);
    if (config.command == "bounds") return run_bounds(config, *target, err);
    if (config.command == "narrow-demo") return run_narrow_demo(config, *target, err);
    err << "unknown command '" << config.command << "'\n";
    return kExitConfig;
  } catch (const PrecisionExhausted& e) {
    err << e.what() << "\n";
    return kExitPrecision;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    err << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace polylink
