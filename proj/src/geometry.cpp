#include "polylink/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <limits>
#include <numbers>
#include <numeric>
#include <queue>
#include <sstream>
#include <thread>

namespace polylink {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::array<std::array<int, 2>, 3> kEdgeCorners{{{0, 1}, {1, 2}, {0, 2}}};

double clamp_unit(double x) { return std::max(-1.0, std::min(1.0, x)); }

double arc_arc_distance(const Vec3& a1, const Vec3& b1, const Vec3& a2, const Vec3& b2) {
  return std::min({point_arc_distance(a1, a2, b2), point_arc_distance(b1, a2, b2), point_arc_distance(a2, a1, b1),
                   point_arc_distance(b2, a1, b1)});
}

double circumradius(const Vec3& a, const Vec3& b, const Vec3& c) {
  Vec3 n = (b - a).cross(c - a).normalized();
  if (n.dot(a) < 0) n = n * -1.0;
  return std::acos(clamp_unit(n.dot(a)));
}

}  // namespace

double sphere_distance(const Vec3& a, const Vec3& b) { return std::atan2(a.cross(b).norm(), a.dot(b)); }

double spherical_excess(const Vec3& a, const Vec3& b, const Vec3& c) {
  const double num = std::abs(a.dot(b.cross(c)));
  const double den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
  return 2.0 * std::atan2(num, den);
}

double point_arc_distance(const Vec3& p, const Vec3& a, const Vec3& b) {
  const Vec3 n = a.cross(b);
  const double len = n.norm();
  if (len == 0) return std::min(sphere_distance(p, a), sphere_distance(p, b));
  const Vec3 u = n * (1.0 / len);
  if (a.cross(p).dot(u) >= 0 && p.cross(b).dot(u) >= 0) return std::asin(std::min(1.0, std::abs(p.dot(u))));
  return std::min(sphere_distance(p, a), sphere_distance(p, b));
}

SphericalTriangle solve_triangle(const std::array<double, 3>& angles) {
  const double sum = angles[0] + angles[1] + angles[2];
  for (double a : angles) {
    if (!(a > 0 && a < std::numbers::pi)) throw DegenerateTriangle("angle outside (0, pi)");
  }
  if (!(sum > std::numbers::pi)) throw DegenerateTriangle("angle sum must exceed pi");
  SphericalTriangle t;
  t.angles = angles;
  for (int i = 0; i < 3; ++i) {
    const double a = angles[i], b = angles[(i + 1) % 3], c = angles[(i + 2) % 3];
    t.sides[i] = std::acos(clamp_unit((std::cos(a) + std::cos(b) * std::cos(c)) / (std::sin(b) * std::sin(c))));
  }
  t.area = sum - std::numbers::pi;
  return t;
}

TriangleLattice::TriangleLattice(const std::array<Vec3, 3>& corners, int level) : level_(level), n_(1 << level) {
  // Level-0 grid in (i, j) layout with n = 1.
  std::vector<Vec3> grid(4);
  grid[1 * 2 + 0] = corners[0];  // (1,0,0)
  grid[0 * 2 + 1] = corners[1];  // (0,1,0)
  grid[0 * 2 + 0] = corners[2];  // (0,0,1)
  int n = 1;
  for (int l = 1; l <= level; ++l) {
    const int m = 2 * n;
    std::vector<Vec3> next(static_cast<std::size_t>(m + 1) * (m + 1));
    auto old = [&](int i, int j) -> const Vec3& { return grid[static_cast<std::size_t>(i / 2) * (n + 1) + j / 2]; };
    for (int i = 0; i <= m; ++i) {
      for (int j = 0; i + j <= m; ++j) {
        const int k = m - i - j;
        Vec3 v;
        if (i % 2 == 0 && j % 2 == 0) {
          v = old(i, j);
        } else if (i % 2 == 1 && j % 2 == 1) {
          v = (old(i + 1, j - 1) + old(i - 1, j + 1)).normalized();
        } else if (i % 2 == 1) {  // i and k odd
          v = (old(i + 1, j) + old(i - 1, j)).normalized();
        } else {  // j and k odd
          v = (old(i, j + 1) + old(i, j - 1)).normalized();
        }
        (void)k;
        next[static_cast<std::size_t>(i) * (m + 1) + j] = v;
      }
    }
    grid = std::move(next);
    n = m;
  }
  pts_ = std::move(grid);
}

const Vec3& TriangleLattice::edge_point(int e, int s) const {
  switch (e) {
    case 0: return at(n_ - s, s, 0);
    case 1: return at(0, n_ - s, s);
    default: return at(n_ - s, 0, s);
  }
}

ConeSurface::ConeSurface(const Constellation& cover, BaseFamily base) : base_(base), cover_(cover) {
  if (auto v = cover.violations(base); !v.empty()) throw std::invalid_argument("ConeSurface: " + v.front());
  const auto& b = base_of(base);
  const double pi = std::numbers::pi;
  triangle_ = solve_triangle({pi / b.order(0), pi / b.order(1), pi / b.order(2)});
  const double a1 = triangle_.sides[1], a2 = triangle_.sides[2], A0 = triangle_.angles[0];
  corners_ = {Vec3{0, 0, 1}, Vec3{std::sin(a2), 0, std::cos(a2)},
              Vec3{std::sin(a1) * std::cos(A0), std::sin(a1) * std::sin(A0), std::cos(a1)}};
  for (int c = 0; c < 3; ++c) mirror_corners_[c] = Vec3{corners_[c].x, -corners_[c].y, corners_[c].z};

  const int d = cover.degree;
  const int tcount = 2 * d;
  std::vector<std::array<std::pair<int, int>, 3>> partner(tcount);
  auto glue = [&](int t1, int t2, int e) {
    partner[t1][e] = {t2, e};
    partner[t2][e] = {t1, e};
  };
  const Permutation inv1 = cover.sigma[0].inverse();
  for (int i = 0; i < d; ++i) {
    glue(2 * i, 2 * i + 1, 0);
    glue(2 * i + 1, 2 * cover.sigma[1][i], 1);
    glue(2 * i + 1, 2 * inv1[i], 2);
  }

  std::vector<int> parent(3 * tcount);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  edge_id_.assign(tcount, {-1, -1, -1});
  for (int t = 0; t < tcount; ++t) {
    for (int e = 0; e < 3; ++e) {
      const auto [u, f] = partner[t][e];
      if (u == t) throw std::logic_error("ConeSurface: edge glued to itself");
      for (int c : kEdgeCorners[e]) parent[find(3 * t + c)] = find(3 * u + c);
      if (edge_id_[t][e] < 0) edge_id_[t][e] = edge_id_[u][f] = edge_count_++;
    }
  }
  std::vector<int> id_of(3 * tcount, -1);
  corner_vertex_.assign(tcount, {});
  for (int t = 0; t < tcount; ++t) {
    for (int c = 0; c < 3; ++c) {
      const int r = find(3 * t + c);
      if (id_of[r] < 0) {
        id_of[r] = static_cast<int>(vertices_.size());
        vertices_.push_back({c, 0, {}});
      }
      corner_vertex_[t][c] = id_of[r];
      ++vertices_[id_of[r]].corners;
    }
  }
  for (auto& v : vertices_) v.angle = RationalAngle(v.corners, b.order(v.label));
}

std::optional<std::vector<Vec3>> ConeSurface::folded_positions() const {
  const auto refl = find_reflection(cover_, base_);
  if (!refl) return std::nullopt;
  const int F = triangle_count();
  auto image = [&](int t) { return ConeSurface::is_negative(t) ? 2 * (*refl)[t / 2] : 2 * (*refl)[t / 2] + 1; };
  std::vector<std::array<int, 3>> neighbor(F);
  for (int t = 0; t < F; ++t)
    for (int e = 0; e < 3; ++e)
      for (int u = 0; u < F; ++u)
        if (u != t && edge_id_[u][e] == edge_id_[t][e]) neighbor[t][e] = u;

  // Develop the half on the side of triangle 0 without crossing the fixed circle.
  std::vector<std::array<Vec3, 3>> pos(F);
  std::vector<char> in_half(F, 0);
  pos[0] = corners(false);
  in_half[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int t = stack.back();
    stack.pop_back();
    for (int e = 0; e < 3; ++e) {
      const int u = neighbor[t][e];
      if (image(t) == u || in_half[u]) continue;
      const int a = kEdgeCorners[e][0], b = kEdgeCorners[e][1], c = 3 - a - b;
      const Vec3 m = pos[t][a].cross(pos[t][b]).normalized();
      pos[u][a] = pos[t][a];
      pos[u][b] = pos[t][b];
      pos[u][c] = pos[t][c] - m * (2 * pos[t][c].dot(m));
      in_half[u] = 1;
      stack.push_back(u);
    }
  }
  std::vector<Vec3> out(vertex_count());
  std::vector<char> set(vertex_count(), 0);
  for (int t = 0; t < F; ++t) {
    const int h = in_half[t] ? t : image(t);
    if (!in_half[h]) throw std::logic_error("folded_positions: halves do not partition the surface");
    for (int c = 0; c < 3; ++c) {
      const int v = corner_vertex_[t][c];
      if (!set[v]) {
        out[v] = pos[h][c];
        set[v] = 1;
      }
    }
  }
  return out;
}

std::vector<int> ConeSurface::cone_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (vertices_[v].angle != RationalAngle::full_turn()) out.push_back(v);
  return out;
}

ConeTuple ConeSurface::cone_angles() const {
  std::vector<RationalAngle> a;
  for (int v : cone_vertices()) a.push_back(vertices_[v].angle);
  return ConeTuple(std::move(a));
}

RationalAngle ConeSurface::exact_area() const {
  const auto& b = base_of(base_);
  const Rational per = Rational(1, b.order(0)) + Rational(1, b.order(1)) + Rational(1, b.order(2)) - Rational(1);
  return RationalAngle(per * Rational(triangle_count()));
}

double ConeSurface::numerical_area(int level) const {
  double total = 0;
  for (bool neg : {false, true}) {
    const TriangleLattice lat(corners(neg), level);
    const int n = lat.n();
    double sum = 0;
    for (int a = 0; a <= n - 1; ++a)
      for (int b = 0; a + b <= n - 1; ++b) {
        const int c = n - 1 - a - b;
        sum += spherical_excess(lat.at(a + 1, b, c), lat.at(a, b + 1, c), lat.at(a, b, c + 1));
      }
    for (int a = 0; a <= n - 2; ++a)
      for (int b = 0; a + b <= n - 2; ++b) {
        const int c = n - 2 - a - b;
        sum += spherical_excess(lat.at(a + 1, b + 1, c), lat.at(a + 1, b, c + 1), lat.at(a, b + 1, c + 1));
      }
    total += sum * (triangle_count() / 2);
  }
  return total;
}

namespace {

// Graph whose edges live inside triangles: every triangle carries the same
// local weight matrix (mirror copies are congruent with matching labels).
struct LocalGraph {
  int locals = 0;
  std::vector<double> weight;                          // locals x locals
  std::vector<std::vector<int>> global;                // per triangle, local -> node
  std::vector<std::vector<std::pair<int, int>>> incid;  // node -> (triangle, local)

  void finish(int nodes) {
    incid.assign(nodes, {});
    for (int t = 0; t < static_cast<int>(global.size()); ++t)
      for (int l = 0; l < locals; ++l) incid[global[t][l]].emplace_back(t, l);
  }

  std::vector<double> dijkstra(std::vector<double> dist) const {
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (int v = 0; v < static_cast<int>(dist.size()); ++v)
      if (dist[v] < kInf) pq.emplace(dist[v], v);
    while (!pq.empty()) {
      auto [du, u] = pq.top();
      pq.pop();
      if (du > dist[u]) continue;
      for (auto [t, lu] : incid[u]) {
        const double* row = &weight[static_cast<std::size_t>(lu) * locals];
        const auto& g = global[t];
        for (int lv = 0; lv < locals; ++lv) {
          const double nd = du + row[lv];
          const int v = g[lv];
          if (nd < dist[v]) {
            dist[v] = nd;
            pq.emplace(nd, v);
          }
        }
      }
    }
    return dist;
  }
};

// Lattice coordinates of boundary local u: corners 0..2, then edge points.
Vec3 boundary_point(const TriangleLattice& lat, int u) {
  const int n = lat.n();
  if (u < 3) return lat.edge_point(u == 2 ? 1 : 0, u == 0 ? 0 : n);
  const int e = (u - 3) / (n - 1);
  const int s = (u - 3) % (n - 1) + 1;
  return lat.edge_point(e, s);
}

}  // namespace

DistanceEstimate estimate_distances(const ConeSurface& surf, int refinement, int sample_level) {
  if (refinement < 0) throw std::invalid_argument("estimate_distances: refinement must be >= 0");
  DistanceEstimate out;
  out.refinement = refinement;
  out.cone_vertices = surf.cone_vertices();
  const TriangleLattice lat(surf.corners(false), refinement);
  const int n = lat.n();
  const int V = surf.vertex_count();
  const int E = surf.edge_count();
  const int F = surf.triangle_count();

  // Upper graph: corners and edge points, chords between any two.
  LocalGraph up;
  up.locals = 3 * n;
  up.weight.resize(static_cast<std::size_t>(up.locals) * up.locals);
  std::vector<Vec3> bpts(up.locals);
  for (int u = 0; u < up.locals; ++u) bpts[u] = boundary_point(lat, u);
  for (int u = 0; u < up.locals; ++u)
    for (int v = 0; v < up.locals; ++v) up.weight[static_cast<std::size_t>(u) * up.locals + v] = sphere_distance(bpts[u], bpts[v]);
  up.global.assign(F, std::vector<int>(up.locals));
  for (int t = 0; t < F; ++t) {
    for (int c = 0; c < 3; ++c) up.global[t][c] = surf.corner_vertex(t, c);
    for (int e = 0; e < 3; ++e)
      for (int s = 1; s < n; ++s) up.global[t][3 + e * (n - 1) + s - 1] = V + surf.edge_id(t, e) * (n - 1) + s - 1;
  }
  const int up_nodes = V + E * (n - 1);
  up.finish(up_nodes);

  // Lower graph: corners and the cells of every edge. A geodesic meets a
  // triangle either along a whole edge (corner to corner) or in a segment
  // joining points on two different edges, or a corner and the opposite edge.
  // Cells are the n uniform pieces, split geometrically toward both corners
  // so that passing next to a vertex costs little.
  std::vector<double> breaks;
  for (int k = 0; k <= n; ++k) breaks.push_back(static_cast<double>(k) / n);
  for (int m = 1; m <= refinement + 4; ++m) {
    const double t = 1.0 / (static_cast<double>(n) * (1 << m));
    breaks.push_back(t);
    breaks.push_back(1.0 - t);
  }
  std::sort(breaks.begin(), breaks.end());
  const int cells = static_cast<int>(breaks.size()) - 1;
  std::array<std::vector<Vec3>, 3> edge_pts;
  for (int e = 0; e < 3; ++e) {
    const Vec3& a = bpts[kEdgeCorners[e][0]];
    const Vec3& b = bpts[kEdgeCorners[e][1]];
    const double len = sphere_distance(a, b);
    for (double t : breaks) edge_pts[e].push_back((a * std::sin((1 - t) * len) + b * std::sin(t * len)) * (1.0 / std::sin(len)));
  }
  LocalGraph low;
  low.locals = 3 + 3 * cells;
  low.weight.assign(static_cast<std::size_t>(low.locals) * low.locals, kInf);
  auto cell_edge = [&](int u) { return (u - 3) / cells; };
  auto cell_ends = [&](int u) {
    const int e = (u - 3) / cells, m = (u - 3) % cells;
    return std::pair<Vec3, Vec3>{edge_pts[e][m], edge_pts[e][m + 1]};
  };
  for (int u = 0; u < low.locals; ++u) {
    for (int v = 0; v < low.locals; ++v) {
      double w = kInf;
      if (u == v) {
        w = 0;
      } else if (u < 3 && v < 3) {
        w = sphere_distance(bpts[u], bpts[v]);
      } else if (u < 3 || v < 3) {
        const int c = u < 3 ? u : v;
        const int cell = u < 3 ? v : u;
        const int e = cell_edge(cell);
        if (kEdgeCorners[e][0] != c && kEdgeCorners[e][1] != c) {
          auto [a, b] = cell_ends(cell);
          w = point_arc_distance(bpts[c], a, b);
        }
      } else if (cell_edge(u) != cell_edge(v)) {
        auto [a1, b1] = cell_ends(u);
        auto [a2, b2] = cell_ends(v);
        w = arc_arc_distance(a1, b1, a2, b2);
      }
      low.weight[static_cast<std::size_t>(u) * low.locals + v] = w;
    }
  }
  low.global.assign(F, std::vector<int>(low.locals));
  for (int t = 0; t < F; ++t) {
    for (int c = 0; c < 3; ++c) low.global[t][c] = surf.corner_vertex(t, c);
    for (int e = 0; e < 3; ++e)
      for (int m = 0; m < cells; ++m) low.global[t][3 + e * cells + m] = V + surf.edge_id(t, e) * cells + m;
  }
  low.finish(V + E * cells);

  out.upper.assign(V, {});
  out.lower.assign(V, {});
  for (int v = 0; v < V; ++v) {
    std::vector<double> du(up_nodes, kInf), dl(V + E * cells, kInf);
    du[v] = 0;
    dl[v] = 0;
    du = up.dijkstra(std::move(du));
    dl = low.dijkstra(std::move(dl));
    out.upper[v].assign(du.begin(), du.begin() + V);
    out.lower[v].assign(dl.begin(), dl.begin() + V);
  }
  if (const auto fold = surf.folded_positions()) {
    out.folded = true;
    for (int v = 0; v < V; ++v)
      for (int w = 0; w < V; ++w) out.lower[v][w] = std::max(out.lower[v][w], sphere_distance((*fold)[v], (*fold)[w]));
  }
  for (int v = 0; v < V; ++v)
    for (int w = 0; w < V; ++w) {
      out.lower[v][w] = std::min(out.lower[v][w], out.upper[v][w]);
      out.diameter_lower = std::max(out.diameter_lower, out.lower[v][w]);
    }

  if (sample_level < 0) {
    out.sample_level = -1;
    out.diameter_upper = kInf;
    return out;
  }

  // Samples: lattice points of a coarser level; every point of the surface is
  // within one sample-cell circumradius of a sample.
  const int s = std::min(sample_level, refinement);
  out.sample_level = s;
  const int ns = 1 << s;
  const int step = n / ns;
  std::vector<Vec3> samples;
  for (int i = 0; i <= ns; ++i)
    for (int j = 0; i + j <= ns; ++j) samples.push_back(lat.at(i * step, j * step, (ns - i - j) * step));
  const TriangleLattice coarse(surf.corners(false), s);
  double rho = 0;
  for (int a = 0; a <= ns - 1; ++a)
    for (int b = 0; a + b <= ns - 1; ++b) {
      const int c = ns - 1 - a - b;
      rho = std::max(rho, circumradius(coarse.at(a + 1, b, c), coarse.at(a, b + 1, c), coarse.at(a, b, c + 1)));
    }
  for (int a = 0; a <= ns - 2; ++a)
    for (int b = 0; a + b <= ns - 2; ++b) {
      const int c = ns - 2 - a - b;
      rho = std::max(rho, circumradius(coarse.at(a + 1, b + 1, c), coarse.at(a + 1, b, c + 1), coarse.at(a, b + 1, c + 1)));
    }
  out.slack = 2 * rho;

  const int S = static_cast<int>(samples.size());
  std::vector<double> s2b(static_cast<std::size_t>(S) * up.locals), s2s(static_cast<std::size_t>(S) * S);
  for (int x = 0; x < S; ++x) {
    for (int u = 0; u < up.locals; ++u) s2b[static_cast<std::size_t>(x) * up.locals + u] = sphere_distance(samples[x], bpts[u]);
    for (int y = 0; y < S; ++y) s2s[static_cast<std::size_t>(x) * S + y] = sphere_distance(samples[x], samples[y]);
  }
  double best = 0;
  for (int t = 0; t < F; ++t) {
    for (int x = 0; x < S; ++x) {
      std::vector<double> dist(up_nodes, kInf);
      for (int u = 0; u < up.locals; ++u) {
        const int g = up.global[t][u];
        dist[g] = std::min(dist[g], s2b[static_cast<std::size_t>(x) * up.locals + u]);
      }
      dist = up.dijkstra(std::move(dist));
      for (int t2 = 0; t2 < F; ++t2) {
        const auto& g = up.global[t2];
        for (int y = 0; y < S; ++y) {
          double d = t2 == t ? s2s[static_cast<std::size_t>(x) * S + y] : kInf;
          const double* row = &s2b[static_cast<std::size_t>(y) * up.locals];
          for (int u = 0; u < up.locals; ++u) d = std::min(d, dist[g[u]] + row[u]);
          best = std::max(best, d);
        }
      }
    }
  }
  out.diameter_upper = best + out.slack;
  return out;
}

Epsilon0Bracket certify_epsilon0(const std::vector<LinkRecord>& records, const CertifyOptions& options) {
  Epsilon0Bracket out;
  out.links.resize(records.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) {
      const auto& r = records[i];
      const auto& real = r.realizations.front();
      const ConeSurface surf(real.cover, real.datum.base);
      LinkDiameter ld{r.table_index, -1, 0, kInf};
      ld.lower = estimate_distances(surf, options.max_refinement, -1).diameter_lower;
      for (int ref = std::min(options.min_refinement, options.max_refinement); ref <= options.max_refinement; ++ref) {
        const auto est = estimate_distances(surf, ref, options.sample_level);
        ld.upper = est.diameter_upper;
        ld.refinement = ref;
        if (ld.upper < std::numbers::pi) break;
      }
      out.links[i] = ld;
    }
  };
  const int workers = std::max(1, std::min<int>(options.jobs, static_cast<int>(records.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (const auto& ld : out.links) {
    out.lower = std::max(out.lower, ld.lower);
    out.upper = std::max(out.upper, ld.upper);
    if (!(ld.upper < std::numbers::pi)) {
      throw NotConverged("link " + std::to_string(ld.table_index) + " diameter upper bound " +
                         std::to_string(ld.upper) + " not below pi");
    }
  }
  return out;
}

namespace {

template <typename EmitVertex, typename EmitFace>
void walk_mesh(const ConeSurface& s, int level, EmitVertex&& vert, EmitFace&& face) {
  const std::array<TriangleLattice, 2> lats{TriangleLattice(s.corners(false), level),
                                            TriangleLattice(s.corners(true), level)};
  const int n = lats[0].n();
  const int per = (n + 1) * (n + 2) / 2;
  for (int t = 0; t < s.triangle_count(); ++t) {
    const auto& lat = lats[ConeSurface::is_negative(t) ? 1 : 0];
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) vert(lat.at(i, j, n - i - j));
  }
  // Offset of (i, j) inside one triangle's block.
  auto local = [&](int i, int j) { return i * (n + 1) - i * (i - 1) / 2 + j; };
  for (int t = 0; t < s.triangle_count(); ++t) {
    const int base = t * per;
    const bool flip = ConeSurface::is_negative(t);
    auto emit = [&](int a, int b, int c) { flip ? face(base + a, base + c, base + b) : face(base + a, base + b, base + c); };
    for (int a = 0; a <= n - 1; ++a)
      for (int b = 0; a + b <= n - 1; ++b) emit(local(a + 1, b), local(a, b + 1), local(a, b));
    for (int a = 0; a <= n - 2; ++a)
      for (int b = 0; a + b <= n - 2; ++b) emit(local(a + 1, b + 1), local(a + 1, b), local(a, b + 1));
  }
}

}  // namespace

std::string to_off(const ConeSurface& s, int level) {
  std::ostringstream vs, fs;
  vs << std::setprecision(12);
  int nv = 0, nf = 0;
  walk_mesh(
      s, level, [&](const Vec3& p) { vs << p.x << " " << p.y << " " << p.z << "\n", ++nv; },
      [&](int a, int b, int c) { fs << "3 " << a << " " << b << " " << c << "\n", ++nf; });
  std::ostringstream os;
  os << "OFF\n" << nv << " " << nf << " 0\n" << vs.str() << fs.str();
  return os.str();
}

std::string to_obj(const ConeSurface& s, int level) {
  std::ostringstream vs, fs;
  vs << std::setprecision(12);
  walk_mesh(
      s, level, [&](const Vec3& p) { vs << "v " << p.x << " " << p.y << " " << p.z << "\n"; },
      [&](int a, int b, int c) { fs << "f " << a + 1 << " " << b + 1 << " " << c + 1 << "\n"; });
  return vs.str() + fs.str();
}

std::string distance_csv(const ConeSurface& s, const DistanceEstimate& d) {
  std::ostringstream os;
  os << std::setprecision(12);
  os << "i,j,angle_i,angle_j,lower,upper\n";
  const auto& cv = d.cone_vertices;
  for (std::size_t a = 0; a < cv.size(); ++a)
    for (std::size_t b = a + 1; b < cv.size(); ++b) {
      const int u = cv[a], v = cv[b];
      os << a + 1 << "," << b + 1 << "," << s.vertices()[u].angle.str() << "," << s.vertices()[v].angle.str() << ","
         << d.lower[u][v] << "," << d.upper[u][v] << "\n";
    }
  return os.str();
}

}  // namespace polylink
