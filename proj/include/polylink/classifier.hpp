#pragma once

// Holonomy groups, double detection and the assembled table of vertex links.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "polylink/angles.hpp"
#include "polylink/branching.hpp"
#include "polylink/covers.hpp"
#include "polylink/permutation.hpp"

namespace polylink {

enum class SubgroupType { Trivial, C2, C3, C4, C6, D2, D3, D4, D6, A4, S4 };

std::string subgroup_name(SubgroupType t);  // "1", "C2", ..., "S4"
SubgroupType parse_subgroup(std::string_view text);
int subgroup_order(SubgroupType t);

/// Thrown when an internal consistency check of the classification fails.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The rotation group of the cube (order 24) or of the hexagonal prism
/// (order 12) as permutations, with generator images g_1, g_2, g_3 for the
/// three branch points and g_1 g_2 g_3 = id.
struct RotationGroupModel {
  BaseFamily family;
  std::array<Permutation, 3> generators;
  std::vector<Permutation> elements;  // closure of the generators, sorted

  /// Empty when the generators have orders k_j, multiply to the identity and
  /// generate a group of the expected order.
  std::vector<std::string> violations() const;
};

const RotationGroupModel& s4_model();
const RotationGroupModel& d6_model();
const RotationGroupModel& model_of(BaseFamily f);

/// Isomorphism type of a subgroup of either model, read off from its order
/// and element orders.
SubgroupType classify_subgroup(const std::vector<Permutation>& elements);

/// Image of the stabilizer of point 0 under the generator assignment.
std::vector<Permutation> holonomy_elements(const Constellation& c, const RotationGroupModel& model);
SubgroupType holonomy_group(const Constellation& c, const RotationGroupModel& model);

/// Sheet involution p with p s1 p = s1^-1 and p s2 p = s2^-1 that fixes at
/// least one edge of the triangulation by 2d half-triangles and every cone
/// point; it induces a label-preserving reflection whose fixed circle bounds
/// the polygon.
std::optional<Permutation> find_reflection(const Constellation& c, BaseFamily base);
bool is_double(const Constellation& c, BaseFamily base);

struct Realization {
  BranchingDatum datum;
  Constellation cover;
  SubgroupType holonomy = SubgroupType::Trivial;
  bool is_double = false;
};

struct LinkRecord {
  ConeTuple cone_angles;
  std::vector<Rational> theta;  // cone angles divided by 2pi, ascending
  std::set<BaseFamily> bases;
  SubgroupType monodromy = SubgroupType::Trivial;
  bool is_double = false;
  std::vector<Realization> realizations;
  int table_index = 0;

  std::string theta_str() const;  // "(1/6, 1/2, 1/2)"
};

/// Counts after each pipeline stage for one base and one tuple size n.
struct StageCount {
  BaseFamily base;
  int n = 0;
  int tuples_positive = 0;   // positivity filter only
  int tuples_lune = 0;       // positivity and lune
  int tuples_integral = 0;   // degree is an integer
  int tuples_with_data = 0;  // at least one branching datum
  int data = 0;              // swap-canonical branching data
  int data_realized = 0;     // data with at least one cover
  int covers = 0;            // classes up to relabelling (and z1/z2 exchange)
  int achiral_covers = 0;    // classes additionally up to mirror image
  std::uint64_t nodes_visited = 0;
};

struct ClassifyOptions {
  std::set<BaseFamily> bases{BaseFamily::S4, BaseFamily::D6};
  int n_min = 3;
  int n_max = 0;  // 0 means each base's positivity ceiling
  int jobs = 1;
};

struct Classification {
  std::vector<LinkRecord> records;
  std::vector<StageCount> stages;
};

/// Full pipeline: tuples, data, covers, holonomy, doubles, then merging by
/// (cone angles, monodromy type) and ordering by number of cone points, the
/// angles, and the monodromy group order. Throws InvariantViolation if a
/// realization fails a cover invariant or a merged class is inconsistent.
Classification classify_all(const ClassifyOptions& options = {});

/// Vertex links plus the codimension-2 angle types plus the regular point.
/// With `only` set, counts links realized over that base and its angle set.
int local_type_count(const Classification& c, std::optional<BaseFamily> only = std::nullopt);

struct GoldenRow {
  int index;
  std::vector<Rational> theta;
  bool is_double;
  SubgroupType monodromy;
};

/// The 32 reference rows of the link table.
const std::vector<GoldenRow>& golden_table();
std::vector<GoldenRow> golden_from_json(const nlohmann::json& j);
nlohmann::json golden_to_json(const std::vector<GoldenRow>& rows);

/// One line per disagreeing row (or a count mismatch); empty when equal.
std::vector<std::string> diff_against(const std::vector<LinkRecord>& records,
                                      const std::vector<GoldenRow>& golden);

nlohmann::json to_json(const LinkRecord& r);
std::string table_csv(const std::vector<LinkRecord>& records);
std::string table_text(const std::vector<LinkRecord>& records);

}  // namespace polylink
