#include "polylink/covers.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace polylink {

Constellation Constellation::from_pair(const Permutation& s1, const Permutation& s2) {
  return Constellation{s1.size(), {s1, s2, s1.then(s2).inverse()}};
}

bool Constellation::is_transitive() const {
  if (degree == 0) return false;
  std::vector<char> seen(degree, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& s : sigma) {
      int y = s[x];
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == degree;
}

int Constellation::total_cycles() const {
  return sigma[0].cycle_count() + sigma[1].cycle_count() + sigma[2].cycle_count();
}

ConeTuple Constellation::cone_angles(BaseFamily base) const {
  const auto& b = base_of(base);
  std::vector<RationalAngle> angles;
  for (std::size_t j = 0; j < 3; ++j) {
    for (int len : sigma[j].cycle_type()) {
      if (len < b.order(j)) angles.emplace_back(2 * len, b.order(j));
    }
  }
  return ConeTuple(std::move(angles));
}

std::vector<std::string> Constellation::violations(BaseFamily base) const {
  std::vector<std::string> out;
  for (const auto& s : sigma) {
    if (s.size() != degree) {
      out.push_back("permutation size differs from degree");
      return out;
    }
  }
  if (!sigma[0].then(sigma[1]).then(sigma[2]).is_identity()) out.push_back("product is not the identity");
  if (!is_transitive()) out.push_back("not transitive");
  const auto& b = base_of(base);
  for (std::size_t j = 0; j < 3; ++j) {
    auto t = sigma[j].cycle_type();
    if (!t.empty() && t.back() > b.order(j)) {
      out.push_back("cycle longer than branch order at " + b.branch_points[j].label);
    }
  }
  if (total_cycles() != degree + 2) out.push_back("not a genus-0 cover");
  return out;
}

std::string Constellation::str() const {
  return "d=" + std::to_string(degree) + " s1=" + sigma[0].str() + " s2=" + sigma[1].str() +
         " s3=" + sigma[2].str();
}

nlohmann::json to_json(const Constellation& c) {
  nlohmann::json sig = nlohmann::json::array();
  for (const auto& s : c.sigma) {
    nlohmann::json cyc = nlohmann::json::array();
    for (const auto& cycle : s.cycles()) {
      nlohmann::json one = nlohmann::json::array();
      for (int x : cycle) one.push_back(x + 1);
      cyc.push_back(std::move(one));
    }
    sig.push_back(std::move(cyc));
  }
  return {{"degree", c.degree}, {"sigma", std::move(sig)}};
}

namespace {

// Breadth-first relabelling from `start`; fills `seq` with the interleaved
// images (s1(0'), s2(0'), s1(1'), ...) in the new labels.
bool normal_form_sequence(const std::vector<int>& s1, const std::vector<int>& s2, int start,
                          std::vector<int>& seq) {
  const int d = static_cast<int>(s1.size());
  std::vector<int> label(d, -1), order;
  order.reserve(d);
  label[start] = 0;
  order.push_back(start);
  seq.clear();
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const int p = order[idx];
    for (const auto* s : {&s1, &s2}) {
      const int q = (*s)[p];
      if (label[q] < 0) {
        label[q] = static_cast<int>(order.size());
        order.push_back(q);
      }
      seq.push_back(label[q]);
    }
  }
  return static_cast<int>(order.size()) == d;
}

Constellation from_sequence(const std::vector<int>& seq) {
  const int d = static_cast<int>(seq.size() / 2);
  std::vector<int> a(d), b(d);
  for (int k = 0; k < d; ++k) {
    a[k] = seq[2 * k];
    b[k] = seq[2 * k + 1];
  }
  return Constellation::from_pair(Permutation(std::move(a)), Permutation(std::move(b)));
}

}  // namespace

Constellation canonical_form(const Constellation& c) {
  const auto& s1 = c.sigma[0].images();
  const auto& s2 = c.sigma[1].images();
  std::vector<int> best, seq;
  for (int s = 0; s < c.degree; ++s) {
    if (!normal_form_sequence(s1, s2, s, seq)) throw std::invalid_argument("canonical_form: not transitive");
    if (best.empty() || seq < best) best = seq;
  }
  return from_sequence(best);
}

Constellation mirror(const Constellation& c) {
  const Permutation a = c.sigma[0].inverse();
  const Permutation b = c.sigma[1].inverse();
  return Constellation{c.degree, {a, b, c.sigma[1].then(c.sigma[0])}};
}

Constellation swap_first_two(const Constellation& c) {
  const Permutation& s1 = c.sigma[0];
  const Permutation& s2 = c.sigma[1];
  return Constellation{c.degree, {s2, s2.inverse().then(s1).then(s2), c.sigma[2]}};
}

Constellation class_representative(const Constellation& c, const BranchingDatum& datum) {
  Constellation best = canonical_form(c);
  if (datum.base == BaseFamily::D6 && datum.columns[0] == datum.columns[1]) {
    Constellation other = canonical_form(swap_first_two(c));
    if (other < best) best = std::move(other);
  }
  return best;
}

namespace {

constexpr int kMaxDegree = 32;
constexpr int kMaxLen = 8;

// Backtracking over breadth-first normal forms of (sigma_1, sigma_2). Point
// labels are assigned in discovery order, so every transitive pair is met once
// per start point; the leaf test keeps only the start giving the smallest form.
// The third permutation is tracked as tau = sigma_1 sigma_2 = sigma_3^-1, which
// has the same cycle type as sigma_3.
class NormalFormSearch {
 public:
  explicit NormalFormSearch(const BranchingDatum& datum) : datum_(datum), d_(datum.degree) {
    if (d_ < 1 || d_ > kMaxDegree) throw std::invalid_argument("enumerate_covers: degree out of range");
    for (int p = 0; p < 3; ++p) {
      img_[p].fill(-1);
      pre_[p].fill(-1);
      need_[p].fill(0);
      for (int len : datum.columns[p]) {
        if (len > kMaxLen) throw std::invalid_argument("enumerate_covers: cycle too long");
        ++need_[p][len];
      }
    }
  }

  CoverEnumeration run() {
    recurse(0);
    std::sort(result_.covers.begin(), result_.covers.end());
    result_.covers.erase(std::unique(result_.covers.begin(), result_.covers.end()), result_.covers.end());
    return std::move(result_);
  }

 private:
  enum class Op : std::uint8_t { Assign, Need };
  struct Undo {
    Op op;
    std::int8_t perm;
    std::int8_t a;
  };

  int max_open_length(int p) const {
    for (int len = kMaxLen; len >= 1; --len)
      if (need_[p][len] > 0) return len;
    return 0;
  }

  bool assign(int p, int i, int j) {
    img_[p][i] = static_cast<std::int8_t>(j);
    pre_[p][j] = static_cast<std::int8_t>(i);
    log_.push_back({Op::Assign, static_cast<std::int8_t>(p), static_cast<std::int8_t>(i)});

    int x = j;
    int steps = 1;
    while (x != i && img_[p][x] >= 0) {
      x = img_[p][x];
      ++steps;
    }
    if (x == i) {
      if (need_[p][steps] == 0) return false;
      --need_[p][steps];
      log_.push_back({Op::Need, static_cast<std::int8_t>(p), static_cast<std::int8_t>(steps)});
    } else {
      int back = 0;
      for (int y = i; y >= 0; y = pre_[p][y]) ++back;
      if (steps + back > max_open_length(p)) return false;
    }

    if (p == 0 && img_[1][j] >= 0) return assign(2, i, img_[1][j]);
    if (p == 1 && pre_[0][i] >= 0) return assign(2, pre_[0][i], j);
    return true;
  }

  void unwind(std::size_t mark) {
    while (log_.size() > mark) {
      const Undo u = log_.back();
      log_.pop_back();
      if (u.op == Op::Need) {
        ++need_[u.perm][u.a];
      } else {
        const int j = img_[u.perm][u.a];
        img_[u.perm][u.a] = -1;
        pre_[u.perm][j] = -1;
      }
    }
  }

  void recurse(int pos) {
    ++result_.nodes_visited;
    if (pos == 2 * d_) {
      leaf();
      return;
    }
    const int i = pos >> 1;
    const int g = pos & 1;
    if (i >= next_) return;  // orbit of the first point closed early
    const int limit = next_ < d_ ? next_ + 1 : next_;
    for (int j = 0; j < limit; ++j) {
      if (pre_[g][j] >= 0) continue;
      const bool fresh = (j == next_);
      const std::size_t mark = log_.size();
      if (fresh) ++next_;
      if (assign(g, i, j)) recurse(pos + 1);
      unwind(mark);
      if (fresh) --next_;
    }
  }

  void leaf() {
    ++result_.leaves;
    std::vector<int> s1(d_), s2(d_);
    for (int k = 0; k < d_; ++k) {
      s1[k] = img_[0][k];
      s2[k] = img_[1][k];
    }
    std::vector<int> own;
    own.reserve(2 * d_);
    for (int k = 0; k < d_; ++k) {
      own.push_back(s1[k]);
      own.push_back(s2[k]);
    }
    std::vector<int> seq;
    for (int s = 1; s < d_; ++s) {
      normal_form_sequence(s1, s2, s, seq);
      if (seq < own) return;
    }
    Constellation c = from_sequence(own);
    if (datum_.base == BaseFamily::D6 && datum_.columns[0] == datum_.columns[1]) {
      if (canonical_form(swap_first_two(c)) < c) return;
    }
    result_.covers.push_back(std::move(c));
  }

  const BranchingDatum& datum_;
  int d_;
  int next_ = 1;
  std::array<std::array<std::int8_t, kMaxDegree>, 3> img_{};
  std::array<std::array<std::int8_t, kMaxDegree>, 3> pre_{};
  std::array<std::array<int, kMaxLen + 1>, 3> need_{};
  std::vector<Undo> log_;
  CoverEnumeration result_;
};

}  // namespace

CoverEnumeration enumerate_covers(const BranchingDatum& datum) {
  if (datum.columns.size() != 3) throw std::invalid_argument("enumerate_covers: need three columns");
  return NormalFormSearch(datum).run();
}

std::string shape_name(DessinShape s) {
  switch (s) {
    case DessinShape::Segment: return "segment";
    case DessinShape::Circle: return "circle";
    case DessinShape::Tree: return "tree";
    case DessinShape::Other: return "other";
  }
  return "other";
}

int Dessin::max_vertex_degree() const {
  std::size_t m = 0;
  for (const auto& v : white) m = std::max(m, v.size());
  for (const auto& v : dark) m = std::max(m, v.size());
  return static_cast<int>(m);
}

DessinShape Dessin::shape() const {
  const int vertices = static_cast<int>(white.size() + dark.size());
  if (max_vertex_degree() <= 2) {
    return vertices == edges + 1 ? DessinShape::Segment : DessinShape::Circle;
  }
  return vertices == edges + 1 ? DessinShape::Tree : DessinShape::Other;
}

Dessin dessin_of(const Constellation& c, BaseFamily base) {
  if (auto v = c.violations(base); !v.empty()) throw std::invalid_argument("dessin_of: " + v.front());
  auto one_based = [](std::vector<std::vector<int>> cycles) {
    for (auto& cyc : cycles)
      for (auto& x : cyc) ++x;
    return cycles;
  };
  Dessin d;
  d.edges = c.degree;
  d.white = one_based(c.sigma[0].cycles());
  d.dark = one_based(c.sigma[1].cycles());
  d.faces = one_based(c.sigma[2].cycles());
  for (const auto& f : d.faces) d.face_degrees.push_back(2 * static_cast<int>(f.size()));
  return d;
}

std::string to_dot(const Dessin& d, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  os << "  // face degrees:";
  for (int f : d.face_degrees) os << " " << f;
  os << "\n";
  std::vector<int> white_of(d.edges + 1), dark_of(d.edges + 1);
  for (std::size_t v = 0; v < d.white.size(); ++v) {
    os << "  w" << v + 1 << " [shape=circle, style=filled, fillcolor=white];\n";
    for (int e : d.white[v]) white_of[e] = static_cast<int>(v) + 1;
  }
  for (std::size_t v = 0; v < d.dark.size(); ++v) {
    os << "  b" << v + 1 << " [shape=circle, style=filled, fillcolor=gray];\n";
    for (int e : d.dark[v]) dark_of[e] = static_cast<int>(v) + 1;
  }
  for (int e = 1; e <= d.edges; ++e) {
    os << "  w" << white_of[e] << " -- b" << dark_of[e] << " [label=\"" << e << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace polylink
