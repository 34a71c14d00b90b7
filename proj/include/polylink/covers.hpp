#pragma once

// Ramified covers of the base orbifolds as permutation constellations, their
// enumeration up to relabelling, and the dessins d'enfants they induce.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "polylink/angles.hpp"
#include "polylink/branching.hpp"
#include "polylink/permutation.hpp"

namespace polylink {

/// A degree-d cover of a three-point base encoded by the monodromy around each
/// branch point, taken in the base's declared order, with
/// sigma[0].then(sigma[1]).then(sigma[2]) == identity.
struct Constellation {
  int degree = 0;
  std::array<Permutation, 3> sigma;

  static Constellation from_pair(const Permutation& s1, const Permutation& s2);

  bool is_transitive() const;
  /// Sum of cycle counts; equals degree + 2 exactly for sphere covers.
  int total_cycles() const;
  /// Cone angles read off the cycles of length l < k_j.
  ConeTuple cone_angles(BaseFamily base) const;
  /// Every invariant a cover of `base` must satisfy; lists the violations.
  std::vector<std::string> violations(BaseFamily base) const;

  bool operator==(const Constellation&) const = default;
  auto operator<=>(const Constellation&) const = default;

  std::string str() const;
};

/// {degree, sigma: [[cycles]]} with 1-based points.
nlohmann::json to_json(const Constellation& c);

/// Canonical relabelling of a transitive constellation: the smallest, over all
/// start points, of the breadth-first relabelling that visits sigma_1 then
/// sigma_2 images. Two constellations are simultaneously conjugate iff their
/// canonical forms are equal.
Constellation canonical_form(const Constellation& c);

/// Orientation-reversed cover: (s1^-1, s2^-1, s2 s1).
Constellation mirror(const Constellation& c);

/// Exchanges the roles of the two interchangeable D6 branch points z1 and z2:
/// (s2, s2^-1 s1 s2, s3).
Constellation swap_first_two(const Constellation& c);

/// Canonical form of the equivalence class used by `enumerate_covers`:
/// conjugation, plus the z1/z2 exchange for D6 data whose first two columns agree.
Constellation class_representative(const Constellation& c, const BranchingDatum& datum);

struct CoverEnumeration {
  std::vector<Constellation> covers;  // canonical forms, sorted
  std::uint64_t nodes_visited = 0;    // backtracking nodes explored
  std::uint64_t leaves = 0;           // complete normal-form tables reached
};

/// One canonical representative per equivalence class of constellations whose
/// cycle types match the datum's columns. An empty list certifies that the
/// datum has no realizing cover.
CoverEnumeration enumerate_covers(const BranchingDatum& datum);

enum class DessinShape { Segment, Circle, Tree, Other };
std::string shape_name(DessinShape s);

/// Bipartite map: preimage of the base edge joining branch points 1 and 2.
/// Edges are the sheets 1..d; white vertices are cycles of sigma_1, dark
/// vertices cycles of sigma_2, faces cycles of sigma_3.
struct Dessin {
  int edges = 0;
  std::vector<std::vector<int>> white;  // 1-based edge labels around each vertex
  std::vector<std::vector<int>> dark;
  std::vector<std::vector<int>> faces;
  std::vector<int> face_degrees;  // twice the face's sigma_3 cycle length

  DessinShape shape() const;
  int max_vertex_degree() const;
};

Dessin dessin_of(const Constellation& c, BaseFamily base);
std::string to_dot(const Dessin& d, const std::string& name = "dessin");

}  // namespace polylink
