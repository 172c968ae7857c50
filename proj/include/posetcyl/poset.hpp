#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace posetcyl {

/// Error thrown on violated preconditions and malformed inputs.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Integer rank map attached (by index) to a poset.
struct RankFunction {
  std::vector<int> values;

  int operator()(int i) const { return values.at(static_cast<size_t>(i)); }
  bool operator==(const RankFunction& other) const = default;
};

/// A finite poset on labeled elements. The strict order is stored as a dense
/// transitively-closed boolean matrix; the cover relation is derived from it.
/// Immutable after construction.
class Poset {
 public:
  /// Placeholder with no elements; every named constructor rejects empty
  /// element sets, so a live Poset always has at least one element.
  Poset() = default;

  /// Builds a poset from its Hasse diagram. Rejects duplicate labels, cycles,
  /// and declared pairs that are not covers of the resulting order.
  static Poset from_covers(const std::vector<std::string>& labels,
                           const std::vector<std::pair<std::string, std::string>>& cover_pairs);

  /// Builds a poset from an explicit strict order matrix (row i, col j set
  /// iff i < j). The matrix must be irreflexive, antisymmetric and
  /// transitively closed.
  static Poset from_strict_order(std::vector<std::string> labels, std::vector<char> lt);

  int size() const { return n_; }
  const std::string& label(int i) const { return labels_.at(static_cast<size_t>(i)); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(const std::string& label) const;

  bool less(int i, int j) const { return lt_[static_cast<size_t>(i) * n_ + j] != 0; }
  bool leq(int i, int j) const { return i == j || less(i, j); }

  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  std::optional<int> unique_min() const;
  std::optional<int> unique_max() const;

  bool operator==(const Poset& other) const {
    return labels_ == other.labels_ && lt_ == other.lt_;
  }

 private:
  void derive_covers();

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<char> lt_;  // n*n, transitively closed strict order
  std::vector<std::pair<int, int>> covers_;
};

/// The unique rank function with value 0 at the unique minimum.
/// Throws when the poset has no unique minimum or is not ranked.
RankFunction natural_rank(const Poset& p);

RankFunction shift_rank(const RankFunction& r, int s);

/// True iff r(j) = r(i) + 1 along every cover (i,j).
bool is_valid_rank(const Poset& p, const RankFunction& r);

/// Length of the longest chain.
int rank_of(const Poset& p);

/// Subposet induced on the given elements (ascending index order enforced;
/// labels are carried over). Throws on empty selections.
Poset induced_subposet(const Poset& p, const std::vector<int>& elements);
RankFunction restrict_rank(const RankFunction& r, const std::vector<int>& elements);

enum class IntervalKind { Closed, HalfOpen, Open };

std::vector<int> interval_elements(const Poset& p, int z, int zp, IntervalKind kind);
Poset interval(const Poset& p, int z, int zp, IntervalKind kind);

enum class IdealDirection { Lower, Upper };

/// Downward (resp. upward) closure of the generators, in ascending order.
std::vector<int> ideal(const Poset& p, const std::vector<int>& generators, IdealDirection dir);

bool is_lower_order_ideal(const Poset& p, const std::vector<int>& elements);
bool is_upper_order_ideal(const Poset& p, const std::vector<int>& elements);

/// Least upper bound of z and z', or nullopt when it does not exist.
std::optional<int> join(const Poset& p, int z, int zp);
std::optional<int> meet(const Poset& p, int z, int zp);

/// True iff z v q exists for every z.
bool is_join_admissible(const Poset& p, int q);

/// Unique minimal element of p_{>=z} intersected with the upper order ideal
/// I, or nullopt. Throws when I is empty or not an upper order ideal.
std::optional<int> join_with_ideal(const Poset& p, int z, const std::vector<int>& ideal_set);
bool is_join_admissible_ideal(const Poset& p, const std::vector<int>& ideal_set);

/// Witness of a failed even/odd balance condition: the interval [lo,hi]
/// whose alternating rank sum is nonzero.
struct BalanceWitness {
  int lo = -1;
  int hi = -1;
  long long sum = 0;
};

std::optional<BalanceWitness> locally_eulerian_witness(const Poset& p, const RankFunction& r);
bool is_locally_eulerian(const Poset& p, const RankFunction& r);
bool is_lower_eulerian(const Poset& p, const RankFunction& r);
bool is_eulerian(const Poset& p, const RankFunction& r);

/// True iff every maximal chain has the same length.
bool is_graded(const Poset& p);

Poset dual(const Poset& p);

/// Adjoins a new maximal element above everything.
Poset adjoin_max(const Poset& p);

/// Deletes the unique maximal element of an Eulerian poset of positive rank.
Poset boundary(const Poset& p);

/// Lower order ideal generated by the elements with exactly one element
/// strictly above them.
std::vector<int> near_eulerian_boundary(const Poset& p);

/// True iff adjoining an element above the boundary and then a maximum
/// yields an Eulerian poset of positive rank.
bool is_near_eulerian(const Poset& p, const RankFunction& r);

/// Completes a near-Eulerian poset: adjoins zhat above the boundary, then a
/// maximum. Returns the completed poset and the index of zhat.
std::pair<Poset, int> semisuspension(const Poset& p);

/// Sum of (-1)^{r(z)} over all elements.
long long even_odd_balance(const Poset& p, const RankFunction& r);

/// Fresh variant of `base` not colliding with existing labels.
std::string fresh_label(const std::vector<std::string>& existing, const std::string& base);

}  // namespace posetcyl
