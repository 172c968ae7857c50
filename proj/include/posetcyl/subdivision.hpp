#pragma once

#include "posetcyl/constructions.hpp"
#include "posetcyl/poset.hpp"

#include <string>
#include <utility>

namespace posetcyl {

/// A function between two ranked posets, stored as an index map. Structural
/// properties (order-preserving, rank-increasing, ...) are checked on demand.
struct PosetMap {
  Poset source;
  RankFunction source_rank;
  Poset target;
  RankFunction target_rank;
  std::vector<int> image;  // source index -> target index

  bool operator==(const PosetMap& other) const = default;
};

void validate_map_shape(const PosetMap& m);

bool is_order_preserving(const PosetMap& m);
bool is_rank_increasing(const PosetMap& m);

/// Outcome of a structural check. `status == Ok` means the property holds;
/// ConditionFails means the inputs were admissible but the property is
/// false; anything else names the violated hypothesis.
struct CheckReport {
  enum class Status {
    Ok,
    InvalidSourceRank,
    InvalidTargetRank,
    SourceNotLowerEulerian,
    TargetNotLowerEulerian,
    SourceNotLocallyEulerian,
    TargetNotLocallyEulerian,
    NotOrderPreserving,
    NotRankIncreasing,
    NotSurjective,
    NotStronglySurjective,
    ConditionFails,
  };
  Status status = Status::Ok;
  std::string witness;

  bool ok() const { return status == Status::Ok; }
  /// True when the hypotheses held and only the checked property failed.
  bool admissible() const { return status == Status::Ok || status == Status::ConditionFails; }
};

std::string to_string(CheckReport::Status s);

/// Surjectivity plus the lifting condition: whenever sigma(x) <= y some
/// x' >= x maps onto y with matching rank.
CheckReport check_strongly_surjective(const PosetMap& m);

/// Throws when m is not order-preserving or not rank-increasing.
bool is_strongly_surjective(const PosetMap& m);

/// rank(source) - rank(target), as longest chain lengths.
int sfs_rank(const PosetMap& m);

enum class SfsMethod {
  FiberSum,          // alternating sum over fibers above each pair
  CumulativeSum,     // alternating sum over the closed fiber ideal
  NearEulerian,      // preimage ideals are boundaries / near-Eulerian posets
};

CheckReport check_sfs(const PosetMap& m, SfsMethod method);

/// Throws when a standing hypothesis fails (callers can distinguish "not a
/// subdivision" from "not even a candidate" via check_sfs).
bool is_sfs(const PosetMap& m, SfsMethod method = SfsMethod::FiberSum);

/// FiberSum condition with the lower Eulerian hypothesis relaxed to locally
/// Eulerian; used by the order-ideal correspondence.
CheckReport check_sfs_locally_eulerian(const PosetMap& m);

PosetMap compose(const PosetMap& m1, const PosetMap& m2);

/// Restriction to the preimage of a lower order ideal of the target.
PosetMap restrict_to_ideal(const PosetMap& m, const std::vector<int>& target_ideal);

/// Restriction to the elements above x, mapping onto the elements above
/// sigma(x).
PosetMap restrict_above(const PosetMap& m, int x);

/// (sum over source of (-1)^rank, same over target); the two agree for
/// every strong formal subdivision.
std::pair<long long, long long> parity_check(const PosetMap& m);

// Canonical builders. Each validates its precondition and returns a strong
// formal subdivision.

PosetMap identity_sfs(const Poset& p, const RankFunction& r);

/// The unique map from the boundary of an Eulerian poset of positive rank
/// to the one-element poset, with the forced target rank.
PosetMap to_b0(const Poset& p, const RankFunction& r);

/// The map from a near-Eulerian poset to the two-element chain sending the
/// boundary low, with the forced target ranks.
PosetMap to_b1(const Poset& p, const RankFunction& r);

/// Pyr(boundary(p)) -> p, collapsing the apex copy to the maximum.
PosetMap bipyramid_sfs(const Poset& p, const RankFunction& r);

PosetMap product_sfs(const PosetMap& m1, const PosetMap& m2);

/// Star-glues an Eulerian poset of positive rank below the cylinder of m.
PosetMap star_lift(const Poset& b, const RankFunction& rb, const PosetMap& m);

/// Dual-diamond version; requires the cylinder of m to be Eulerian of rank
/// at least 2 with non-extremal distinguished element.
PosetMap dual_diamond_lift(const Poset& b, const RankFunction& rb, const PosetMap& m);

}  // namespace posetcyl
