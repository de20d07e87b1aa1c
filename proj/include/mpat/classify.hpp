#pragma once

// Decision procedures: semisaturation exponent, O(1) extremal semi-decision,
// and necessary conditions for minimal non-O(n^{d-1}) patterns.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mpat/family.hpp"
#include "mpat/tensor.hpp"

namespace mpat {

/// A pattern index plus one of its 1-entries.
struct EntryRef {
  std::size_t pattern = 0;
  Coord entry;
};

struct PropertyResult {
  bool holds = false;
  /// Property (i): per template face in enumeration order, the first witness
  /// (or nullopt for the face that failed, which is the last one listed).
  std::vector<std::pair<FaceSpec, std::optional<EntryRef>>> faces;
  /// Property (ii): the first qualifying entry.
  std::optional<EntryRef> entry;
};

/// For every d' in [k+1, d-1] and every d'-dimensional template face, some
/// member has an entry o on the counterpart face such that every cross
/// section (k+1)-orthogonal to the face through o holds no other 1.
PropertyResult ssat_property_i(const Family& fam, int k);
/// Some member has an entry sharing at most k coordinates with every other
/// 1-entry, i.e. alone in each (d-1-k)-dimensional section through it.
PropertyResult ssat_property_ii(const Family& fam, int k);

struct SsatClassification {
  int exponent = 0;
  /// For each k' below the exponent: which property failed ("i" or "ii").
  std::vector<std::string> failures;
  PropertyResult property_i;   // at the exponent
  PropertyResult property_ii;  // at the exponent
};

/// Smallest k in [0, d-1] where both properties hold.
SsatClassification ssat_exponent(const Family& fam);

/// Bounded-semisaturation test stated on the pattern's own faces: every face
/// of dimension 1..d-1 holds an entry alone in every layer orthogonal to it,
/// and some entry is alone in all its layers.
bool ssat_bounded_single(const Tensor01& p);

enum class O1Status { BoundedO1, NotO1AtDepth, Aborted };
std::string to_string(O1Status s);

struct O1Verdict {
  O1Status status = O1Status::Aborted;
  int n0 = 0;
  boost::multiprecision::cpp_int bound;
  /// Avoiding member of J ∪ D for every depth that failed, in depth order.
  std::vector<Tensor01> avoiders;
  std::string note;
};

/// For n0 = 1..n0_max: bounded as soon as every member of the identity
/// equivalents and the J family contains some member of fam.
O1Verdict ex_o1_decide(const Family& fam, int n0_max, std::uint64_t max_cells = 4096);

struct FilterCheck {
  bool pass = true;
  std::string detail;
};

struct MinNonlinReport {
  FilterCheck dims_bound;
  FilterCheck weight_bound;
  FilterCheck alternation;
  FilterCheck end_layers;
  bool all_pass() const { return dims_bound.pass && weight_bound.pass && alternation.pass && end_layers.pass; }
};

MinNonlinReport minnonlin_filters(const Tensor01& p);

/// Sum over j = 1..S of ((j+1)^P - j^P) P^(j-1), with S = 1 + 2 sum(2k_i - 2)
/// and P = prod k_i over the first d-1 side lengths.
boost::multiprecision::cpp_int minnonlin_count_bound(const std::vector<int>& dims);

/// The 2x4 alternation [[1,0,1,0],[0,1,0,1]] and its distinct images under
/// reflections and rotations.
std::vector<Tensor01> alternation_images();

}  // namespace mpat
