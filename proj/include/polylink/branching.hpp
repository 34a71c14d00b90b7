#pragma once

// Candidate cone-angle tuples, covering degrees and multiplicity data over the
// two base orbifolds.

#include <stdexcept>
#include <string>
#include <vector>

#include "polylink/angles.hpp"

namespace polylink {

/// Thrown when a tuple's Gauss-Bonnet area is not a positive integer multiple
/// of the base area, so it cannot cover that base.
class NotIntegral : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TupleFilters {
  bool positivity = true;  // sum(2pi - alpha_i) < 4pi
  bool lune = true;        // area < 2 * alpha_min
};

/// Multiplicity datum of a ramified cover: for every branch point j of the base
/// the multiset of preimage multiplicities, sorted ascending. Entries equal to
/// the branch order k_j are regular points.
struct BranchingDatum {
  BaseFamily base = BaseFamily::S4;
  int degree = 0;
  std::vector<std::vector<int>> columns;

  /// Reads the cone angles back: every entry l < k_j gives l * 2pi/k_j.
  ConeTuple cone_angles() const;
  /// Number of preimages (cycles) over branch point j.
  int cycle_count(std::size_t j) const { return static_cast<int>(columns[j].size()); }

  bool operator==(const BranchingDatum&) const = default;
  auto operator<=>(const BranchingDatum&) const = default;

  std::string str() const;
};

/// Largest n for which some n-tuple over the base passes positivity (7 for S4,
/// 11 for D6).
int positivity_ceiling(BaseFamily base);

bool passes_positivity(const ConeTuple& tuple);
bool passes_lune(const ConeTuple& tuple);

/// All multisets of n allowed angles passing the requested filters, in
/// canonical (lexicographic) order.
std::vector<ConeTuple> enumerate_tuples(BaseFamily base, int n, TupleFilters filters = {});

/// gb_area(tuple) / base area; throws NotIntegral unless that is a positive integer.
int degree_of(const ConeTuple& tuple, BaseFamily base);

/// Every way to assign the tuple's angles to branch points and pad with regular
/// multiplicities so that each column sums to the degree. Empty when none
/// exists (or when the degree is not integral).
std::vector<BranchingDatum> enumerate_branching(const ConeTuple& tuple, BaseFamily base);

/// For the D6 base the two angle-pi points z1, z2 are interchangeable; a datum
/// is canonical when its z1 column is lexicographically <= its z2 column. Every
/// S4 datum is canonical.
bool is_swap_canonical(const BranchingDatum& datum);

}  // namespace polylink
