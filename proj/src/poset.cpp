#include "posetcyl/poset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace posetcyl {

namespace {

int parity_sign(int r) { return (r % 2 + 2) % 2 == 0 ? 1 : -1; }

}  // namespace

Poset Poset::from_strict_order(std::vector<std::string> labels, std::vector<char> lt) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw Error("poset: empty element set");
  if (lt.size() != static_cast<size_t>(n) * n) throw Error("poset: relation size mismatch");
  {
    std::set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second) throw Error("poset: duplicate label '" + l + "'");
  }
  for (int i = 0; i < n; ++i) {
    if (lt[static_cast<size_t>(i) * n + i]) throw Error("poset: relation is not irreflexive");
    for (int j = 0; j < n; ++j) {
      if (i != j && lt[static_cast<size_t>(i) * n + j] && lt[static_cast<size_t>(j) * n + i])
        throw Error("poset: relation is not antisymmetric");
      if (!lt[static_cast<size_t>(i) * n + j]) continue;
      for (int k = 0; k < n; ++k)
        if (lt[static_cast<size_t>(j) * n + k] && !lt[static_cast<size_t>(i) * n + k])
          throw Error("poset: relation is not transitively closed");
    }
  }
  Poset p;
  p.n_ = n;
  p.labels_ = std::move(labels);
  p.lt_ = std::move(lt);
  p.derive_covers();
  return p;
}

Poset Poset::from_covers(const std::vector<std::string>& labels,
                         const std::vector<std::pair<std::string, std::string>>& cover_pairs) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw Error("from_covers: empty element set");
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(labels[static_cast<size_t>(i)], i).second)
      throw Error("from_covers: duplicate label '" + labels[static_cast<size_t>(i)] + "'");
  }
  std::vector<char> lt(static_cast<size_t>(n) * n, 0);
  std::set<std::pair<int, int>> declared;
  for (const auto& [lo, hi] : cover_pairs) {
    auto it_lo = index.find(lo);
    auto it_hi = index.find(hi);
    if (it_lo == index.end()) throw Error("from_covers: unknown label '" + lo + "'");
    if (it_hi == index.end()) throw Error("from_covers: unknown label '" + hi + "'");
    if (it_lo->second == it_hi->second)
      throw Error("from_covers: cycle through '" + lo + "'");
    lt[static_cast<size_t>(it_lo->second) * n + it_hi->second] = 1;
    declared.emplace(it_lo->second, it_hi->second);
  }
  // Warshall closure, then cycle detection on the diagonal.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!lt[static_cast<size_t>(i) * n + k]) continue;
      for (int j = 0; j < n; ++j)
        if (lt[static_cast<size_t>(k) * n + j]) lt[static_cast<size_t>(i) * n + j] = 1;
    }
  for (int i = 0; i < n; ++i)
    if (lt[static_cast<size_t>(i) * n + i])
      throw Error("from_covers: cycle through '" + labels[static_cast<size_t>(i)] + "'");

  Poset p;
  p.n_ = n;
  p.labels_ = labels;
  p.lt_ = std::move(lt);
  p.derive_covers();
  std::set<std::pair<int, int>> actual(p.covers_.begin(), p.covers_.end());
  if (actual != declared) {
    for (const auto& [a, b] : declared)
      if (!actual.count({a, b}))
        throw Error("from_covers: declared pair (" + labels[static_cast<size_t>(a)] + "," +
                    labels[static_cast<size_t>(b)] + ") is not a cover");
    throw Error("from_covers: cover set mismatch");
  }
  return p;
}

void Poset::derive_covers() {
  covers_.clear();
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (!less(i, j)) continue;
      bool direct = true;
      for (int k = 0; k < n_ && direct; ++k)
        if (less(i, k) && less(k, j)) direct = false;
      if (direct) covers_.emplace_back(i, j);
    }
}

std::optional<int> Poset::index_of(const std::string& label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[static_cast<size_t>(i)] == label) return i;
  return std::nullopt;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) {
    bool minimal = true;
    for (int j = 0; j < n_ && minimal; ++j)
      if (less(j, i)) minimal = false;
    if (minimal) out.push_back(i);
  }
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) {
    bool maximal = true;
    for (int j = 0; j < n_ && maximal; ++j)
      if (less(i, j)) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

std::optional<int> Poset::unique_min() const {
  auto mins = minimal_elements();
  if (mins.size() == 1) return mins[0];
  return std::nullopt;
}

std::optional<int> Poset::unique_max() const {
  auto maxs = maximal_elements();
  if (maxs.size() == 1) return maxs[0];
  return std::nullopt;
}

RankFunction natural_rank(const Poset& p) {
  auto min = p.unique_min();
  if (!min) throw Error("natural_rank: no unique minimum");
  const int n = p.size();
  std::vector<int> values(static_cast<size_t>(n), 0);
  std::vector<char> assigned(static_cast<size_t>(n), 0);
  assigned[static_cast<size_t>(*min)] = 1;
  // Every element lies above the minimum, so repeated sweeps over the cover
  // relation assign all ranks within n rounds.
  for (int round = 0; round < n; ++round) {
    bool changed = false;
    for (const auto& [lo, hi] : p.covers()) {
      if (!assigned[static_cast<size_t>(lo)]) continue;
      int v = values[static_cast<size_t>(lo)] + 1;
      if (!assigned[static_cast<size_t>(hi)]) {
        values[static_cast<size_t>(hi)] = v;
        assigned[static_cast<size_t>(hi)] = 1;
        changed = true;
      } else if (values[static_cast<size_t>(hi)] != v) {
        throw Error("natural_rank: poset is not ranked");
      }
    }
    if (!changed) break;
  }
  for (int i = 0; i < n; ++i)
    if (!assigned[static_cast<size_t>(i)]) throw Error("natural_rank: poset is not ranked");
  RankFunction r{std::move(values)};
  if (!is_valid_rank(p, r)) throw Error("natural_rank: poset is not ranked");
  return r;
}

RankFunction shift_rank(const RankFunction& r, int s) {
  RankFunction out = r;
  for (int& v : out.values) v += s;
  return out;
}

bool is_valid_rank(const Poset& p, const RankFunction& r) {
  if (r.values.size() != static_cast<size_t>(p.size())) return false;
  for (const auto& [lo, hi] : p.covers())
    if (r(hi) != r(lo) + 1) return false;
  return true;
}

int rank_of(const Poset& p) {
  const int n = p.size();
  // Longest cover path ending at each element; covers are acyclic.
  std::vector<int> longest(static_cast<size_t>(n), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [lo, hi] : p.covers()) {
      int v = longest[static_cast<size_t>(lo)] + 1;
      if (v > longest[static_cast<size_t>(hi)]) {
        longest[static_cast<size_t>(hi)] = v;
        changed = true;
      }
    }
  }
  return *std::max_element(longest.begin(), longest.end());
}

Poset induced_subposet(const Poset& p, const std::vector<int>& elements) {
  if (elements.empty()) throw Error("induced_subposet: empty element set");
  if (!std::is_sorted(elements.begin(), elements.end()))
    throw Error("induced_subposet: elements must be in ascending order");
  const int m = static_cast<int>(elements.size());
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(m));
  for (int e : elements) labels.push_back(p.label(e));
  std::vector<char> lt(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (p.less(elements[static_cast<size_t>(i)], elements[static_cast<size_t>(j)]))
        lt[static_cast<size_t>(i) * m + j] = 1;
  return Poset::from_strict_order(std::move(labels), std::move(lt));
}

RankFunction restrict_rank(const RankFunction& r, const std::vector<int>& elements) {
  RankFunction out;
  out.values.reserve(elements.size());
  for (int e : elements) out.values.push_back(r(e));
  return out;
}

std::vector<int> interval_elements(const Poset& p, int z, int zp, IntervalKind kind) {
  if (kind == IntervalKind::Open) {
    if (!p.less(z, zp)) throw Error("interval: endpoints not strictly comparable");
  } else if (!p.leq(z, zp)) {
    throw Error("interval: endpoints not comparable");
  }
  std::vector<int> out;
  for (int i = 0; i < p.size(); ++i) {
    bool lo_ok = kind == IntervalKind::Open ? p.less(z, i) : p.leq(z, i);
    bool hi_ok = kind == IntervalKind::Closed ? p.leq(i, zp) : p.less(i, zp);
    if (lo_ok && hi_ok) out.push_back(i);
  }
  return out;
}

Poset interval(const Poset& p, int z, int zp, IntervalKind kind) {
  auto elems = interval_elements(p, z, zp, kind);
  if (elems.empty()) throw Error("interval: empty interval");
  return induced_subposet(p, elems);
}

std::vector<int> ideal(const Poset& p, const std::vector<int>& generators, IdealDirection dir) {
  std::vector<char> in(static_cast<size_t>(p.size()), 0);
  for (int g : generators) in.at(static_cast<size_t>(g)) = 1;
  for (int i = 0; i < p.size(); ++i) {
    if (in[static_cast<size_t>(i)]) continue;
    for (int g : generators) {
      bool rel = dir == IdealDirection::Lower ? p.less(i, g) : p.less(g, i);
      if (rel) {
        in[static_cast<size_t>(i)] = 1;
        break;
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < p.size(); ++i)
    if (in[static_cast<size_t>(i)]) out.push_back(i);
  return out;
}

bool is_lower_order_ideal(const Poset& p, const std::vector<int>& elements) {
  std::vector<char> in(static_cast<size_t>(p.size()), 0);
  for (int e : elements) in.at(static_cast<size_t>(e)) = 1;
  for (int e : elements)
    for (int i = 0; i < p.size(); ++i)
      if (p.less(i, e) && !in[static_cast<size_t>(i)]) return false;
  return true;
}

bool is_upper_order_ideal(const Poset& p, const std::vector<int>& elements) {
  std::vector<char> in(static_cast<size_t>(p.size()), 0);
  for (int e : elements) in.at(static_cast<size_t>(e)) = 1;
  for (int e : elements)
    for (int i = 0; i < p.size(); ++i)
      if (p.less(e, i) && !in[static_cast<size_t>(i)]) return false;
  return true;
}

namespace {

std::optional<int> unique_minimal_of(const Poset& p, const std::vector<int>& candidates) {
  std::optional<int> found;
  for (int c : candidates) {
    bool minimal = true;
    for (int d : candidates)
      if (p.less(d, c)) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    if (found) return std::nullopt;  // two minimal elements
    found = c;
  }
  return found;
}

}  // namespace

std::optional<int> join(const Poset& p, int z, int zp) {
  std::vector<int> uppers;
  for (int i = 0; i < p.size(); ++i)
    if (p.leq(z, i) && p.leq(zp, i)) uppers.push_back(i);
  if (uppers.empty()) return std::nullopt;
  return unique_minimal_of(p, uppers);
}

std::optional<int> meet(const Poset& p, int z, int zp) {
  std::vector<int> lowers;
  for (int i = 0; i < p.size(); ++i)
    if (p.leq(i, z) && p.leq(i, zp)) lowers.push_back(i);
  if (lowers.empty()) return std::nullopt;
  std::optional<int> found;
  for (int c : lowers) {
    bool maximal = true;
    for (int d : lowers)
      if (p.less(c, d)) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    if (found) return std::nullopt;
    found = c;
  }
  return found;
}

bool is_join_admissible(const Poset& p, int q) {
  for (int z = 0; z < p.size(); ++z)
    if (!join(p, z, q)) return false;
  return true;
}

std::optional<int> join_with_ideal(const Poset& p, int z, const std::vector<int>& ideal_set) {
  if (ideal_set.empty()) throw Error("join_with_ideal: empty ideal");
  if (!is_upper_order_ideal(p, ideal_set))
    throw Error("join_with_ideal: not an upper order ideal");
  std::vector<int> candidates;
  for (int i : ideal_set)
    if (p.leq(z, i)) candidates.push_back(i);
  if (candidates.empty()) return std::nullopt;
  return unique_minimal_of(p, candidates);
}

bool is_join_admissible_ideal(const Poset& p, const std::vector<int>& ideal_set) {
  if (ideal_set.empty()) throw Error("is_join_admissible_ideal: empty ideal");
  if (!is_upper_order_ideal(p, ideal_set))
    throw Error("is_join_admissible_ideal: not an upper order ideal");
  for (int z = 0; z < p.size(); ++z)
    if (!join_with_ideal(p, z, ideal_set)) return false;
  return true;
}

std::optional<BalanceWitness> locally_eulerian_witness(const Poset& p, const RankFunction& r) {
  if (!is_valid_rank(p, r)) throw Error("locally_eulerian: invalid rank function");
  for (int z = 0; z < p.size(); ++z)
    for (int zp = 0; zp < p.size(); ++zp) {
      if (!p.less(z, zp)) continue;
      long long sum = 0;
      for (int w = 0; w < p.size(); ++w)
        if (p.leq(z, w) && p.leq(w, zp)) sum += parity_sign(r(w));
      if (sum != 0) return BalanceWitness{z, zp, sum};
    }
  return std::nullopt;
}

bool is_locally_eulerian(const Poset& p, const RankFunction& r) {
  return !locally_eulerian_witness(p, r).has_value();
}

bool is_lower_eulerian(const Poset& p, const RankFunction& r) {
  return p.unique_min().has_value() && is_locally_eulerian(p, r);
}

bool is_eulerian(const Poset& p, const RankFunction& r) {
  return p.unique_min().has_value() && p.unique_max().has_value() && is_locally_eulerian(p, r);
}

bool is_graded(const Poset& p) {
  const int n = p.size();
  // Achievable cover-path lengths from a minimal element to each element.
  std::vector<std::set<int>> lengths(static_cast<size_t>(n));
  for (int m : p.minimal_elements()) lengths[static_cast<size_t>(m)].insert(0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [lo, hi] : p.covers())
      for (int v : lengths[static_cast<size_t>(lo)])
        if (lengths[static_cast<size_t>(hi)].insert(v + 1).second) changed = true;
  }
  std::set<int> maximal_chain_lengths;
  for (int m : p.maximal_elements())
    maximal_chain_lengths.insert(lengths[static_cast<size_t>(m)].begin(),
                                 lengths[static_cast<size_t>(m)].end());
  return maximal_chain_lengths.size() == 1;
}

Poset dual(const Poset& p) {
  const int n = p.size();
  std::vector<char> lt(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.less(j, i)) lt[static_cast<size_t>(i) * n + j] = 1;
  return Poset::from_strict_order(p.labels(), std::move(lt));
}

std::string fresh_label(const std::vector<std::string>& existing, const std::string& base) {
  std::string candidate = base;
  while (std::find(existing.begin(), existing.end(), candidate) != existing.end())
    candidate += '\'';
  return candidate;
}

Poset adjoin_max(const Poset& p) {
  const int n = p.size();
  auto labels = p.labels();
  labels.push_back(fresh_label(labels, "top"));
  std::vector<char> lt(static_cast<size_t>(n + 1) * (n + 1), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (p.less(i, j)) lt[static_cast<size_t>(i) * (n + 1) + j] = 1;
    lt[static_cast<size_t>(i) * (n + 1) + n] = 1;
  }
  return Poset::from_strict_order(std::move(labels), std::move(lt));
}

Poset boundary(const Poset& p) {
  RankFunction r = natural_rank(p);
  if (!is_eulerian(p, r)) throw Error("boundary: poset is not Eulerian");
  if (rank_of(p) < 1) throw Error("boundary: poset has rank zero");
  int top = *p.unique_max();
  std::vector<int> keep;
  for (int i = 0; i < p.size(); ++i)
    if (i != top) keep.push_back(i);
  return induced_subposet(p, keep);
}

std::vector<int> near_eulerian_boundary(const Poset& p) {
  std::vector<int> generators;
  for (int z = 0; z < p.size(); ++z) {
    int above = 0;
    for (int w = 0; w < p.size(); ++w)
      if (p.less(z, w)) ++above;
    if (above == 1) generators.push_back(z);
  }
  return ideal(p, generators, IdealDirection::Lower);
}

namespace {

// Adjoins zhat above the boundary ideal, then a maximum. No validity checks.
std::pair<Poset, int> semisuspension_candidate(const Poset& p) {
  const int n = p.size();
  auto bd = near_eulerian_boundary(p);
  std::vector<char> in_bd(static_cast<size_t>(n), 0);
  for (int e : bd) in_bd[static_cast<size_t>(e)] = 1;
  auto labels = p.labels();
  labels.push_back(fresh_label(labels, "zhat"));
  labels.push_back(fresh_label(labels, "top"));
  const int m = n + 2;
  std::vector<char> lt(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (p.less(i, j)) lt[static_cast<size_t>(i) * m + j] = 1;
    if (in_bd[static_cast<size_t>(i)]) lt[static_cast<size_t>(i) * m + n] = 1;
    lt[static_cast<size_t>(i) * m + (n + 1)] = 1;
  }
  lt[static_cast<size_t>(n) * m + (n + 1)] = 1;
  return {Poset::from_strict_order(std::move(labels), std::move(lt)), n};
}

}  // namespace

bool is_near_eulerian(const Poset& p, const RankFunction& r) {
  if (!is_valid_rank(p, r)) throw Error("is_near_eulerian: invalid rank function");
  auto [candidate, zhat] = semisuspension_candidate(p);
  (void)zhat;
  try {
    RankFunction cr = natural_rank(candidate);
    return rank_of(candidate) > 0 && is_eulerian(candidate, cr);
  } catch (const Error&) {
    return false;
  }
}

std::pair<Poset, int> semisuspension(const Poset& p) {
  auto [candidate, zhat] = semisuspension_candidate(p);
  try {
    RankFunction cr = natural_rank(candidate);
    if (rank_of(candidate) > 0 && is_eulerian(candidate, cr)) return {candidate, zhat};
  } catch (const Error&) {
  }
  throw Error("semisuspension: poset is not near-Eulerian");
}

long long even_odd_balance(const Poset& p, const RankFunction& r) {
  if (!is_valid_rank(p, r)) throw Error("even_odd_balance: invalid rank function");
  long long sum = 0;
  for (int i = 0; i < p.size(); ++i) sum += parity_sign(r(i));
  return sum;
}

}  // namespace posetcyl
