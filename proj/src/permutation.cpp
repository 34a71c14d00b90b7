#include "polylink/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polylink {

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= size() || seen[x]) throw std::invalid_argument("Permutation: not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<char> used(n, 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 0 || c[i] >= n || used[c[i]]) throw std::invalid_argument("bad cycle list");
      used[c[i]] = 1;
      v[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(v));
}

Permutation Permutation::then(const Permutation& next) const {
  std::vector<int> v(images_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = next.images_[images_[i]];
  Permutation p;
  p.images_ = std::move(v);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(images_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[images_[i]] = static_cast<int>(i);
  Permutation p;
  p.images_ = std::move(v);
  return p;
}

Permutation Permutation::conjugate_by(const Permutation& p) const {
  // The relabelled permutation sends p(i) to p(this(i)).
  std::vector<int> v(images_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[p.images_[i]] = p.images_[images_[i]];
  Permutation q;
  q.images_ = std::move(v);
  return q;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int x = i; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> t;
  for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.begin(), t.end());
  return t;
}

int Permutation::cycle_count() const { return static_cast<int>(cycles().size()); }

int Permutation::order() const {
  int o = 1;
  for (const auto& c : cycles()) o = std::lcm(o, static_cast<int>(c.size()));
  return o;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Permutation::str() const {
  std::string s;
  for (const auto& c : cycles()) {
    s += "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i] + 1);
    s += ")";
  }
  return s;
}

}  // namespace polylink
