#include "posetcyl/subdivision.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace posetcyl {

namespace {

int parity_sign(int r) { return (r % 2 + 2) % 2 == 0 ? 1 : -1; }

std::string pair_witness(const PosetMap& m, int x, int y, long long sum) {
  return "x=" + m.source.label(x) + " y=" + m.target.label(y) + " sum=" + std::to_string(sum);
}

}  // namespace

void validate_map_shape(const PosetMap& m) {
  if (m.image.size() != static_cast<size_t>(m.source.size()))
    throw Error("poset map: image is not total over the source");
  for (int t : m.image)
    if (t < 0 || t >= m.target.size()) throw Error("poset map: image index out of range");
  if (m.source_rank.values.size() != static_cast<size_t>(m.source.size()) ||
      m.target_rank.values.size() != static_cast<size_t>(m.target.size()))
    throw Error("poset map: rank function size mismatch");
}

bool is_order_preserving(const PosetMap& m) {
  validate_map_shape(m);
  for (int i = 0; i < m.source.size(); ++i)
    for (int j = 0; j < m.source.size(); ++j)
      if (m.source.less(i, j) &&
          !m.target.leq(m.image[static_cast<size_t>(i)], m.image[static_cast<size_t>(j)]))
        return false;
  return true;
}

bool is_rank_increasing(const PosetMap& m) {
  validate_map_shape(m);
  for (int i = 0; i < m.source.size(); ++i)
    if (m.source_rank(i) > m.target_rank(m.image[static_cast<size_t>(i)])) return false;
  return true;
}

std::string to_string(CheckReport::Status s) {
  using S = CheckReport::Status;
  switch (s) {
    case S::Ok: return "ok";
    case S::InvalidSourceRank: return "invalid source rank function";
    case S::InvalidTargetRank: return "invalid target rank function";
    case S::SourceNotLowerEulerian: return "source not lower Eulerian";
    case S::TargetNotLowerEulerian: return "target not lower Eulerian";
    case S::SourceNotLocallyEulerian: return "source not locally Eulerian";
    case S::TargetNotLocallyEulerian: return "target not locally Eulerian";
    case S::NotOrderPreserving: return "not order-preserving";
    case S::NotRankIncreasing: return "not rank-increasing";
    case S::NotSurjective: return "not surjective";
    case S::NotStronglySurjective: return "not strongly surjective";
    case S::ConditionFails: return "condition fails";
  }
  return "unknown";
}

CheckReport check_strongly_surjective(const PosetMap& m) {
  validate_map_shape(m);
  using S = CheckReport::Status;
  if (!is_valid_rank(m.source, m.source_rank)) return {S::InvalidSourceRank, ""};
  if (!is_valid_rank(m.target, m.target_rank)) return {S::InvalidTargetRank, ""};
  if (!is_order_preserving(m)) return {S::NotOrderPreserving, ""};
  if (!is_rank_increasing(m)) return {S::NotRankIncreasing, ""};
  std::vector<char> hit(static_cast<size_t>(m.target.size()), 0);
  for (int t : m.image) hit[static_cast<size_t>(t)] = 1;
  for (int y = 0; y < m.target.size(); ++y)
    if (!hit[static_cast<size_t>(y)])
      return {S::NotSurjective, "y=" + m.target.label(y)};
  for (int x = 0; x < m.source.size(); ++x)
    for (int y = 0; y < m.target.size(); ++y) {
      if (!m.target.leq(m.image[static_cast<size_t>(x)], y)) continue;
      bool lifted = false;
      for (int xp = 0; xp < m.source.size() && !lifted; ++xp)
        if (m.source.leq(x, xp) && m.image[static_cast<size_t>(xp)] == y &&
            m.source_rank(xp) == m.target_rank(y))
          lifted = true;
      if (!lifted)
        return {S::NotStronglySurjective,
                "x=" + m.source.label(x) + " y=" + m.target.label(y)};
    }
  return {S::Ok, ""};
}

bool is_strongly_surjective(const PosetMap& m) {
  auto report = check_strongly_surjective(m);
  using S = CheckReport::Status;
  if (report.status == S::Ok) return true;
  if (report.status == S::NotSurjective || report.status == S::NotStronglySurjective)
    return false;
  throw Error("is_strongly_surjective: " + to_string(report.status));
}

int sfs_rank(const PosetMap& m) {
  validate_map_shape(m);
  return rank_of(m.source) - rank_of(m.target);
}

namespace {

CheckReport fiber_sum_condition(const PosetMap& m) {
  for (int x = 0; x < m.source.size(); ++x)
    for (int y = 0; y < m.target.size(); ++y) {
      if (!m.target.leq(m.image[static_cast<size_t>(x)], y)) continue;
      long long sum = 0;
      for (int xp = 0; xp < m.source.size(); ++xp)
        if (m.source.leq(x, xp) && m.image[static_cast<size_t>(xp)] == y)
          sum += parity_sign(m.target_rank(y) - m.source_rank(xp));
      if (sum != 1)
        return {CheckReport::Status::ConditionFails, pair_witness(m, x, y, sum)};
    }
  return {CheckReport::Status::Ok, ""};
}

CheckReport cumulative_sum_condition(const PosetMap& m) {
  for (int x = 0; x < m.source.size(); ++x)
    for (int y = 0; y < m.target.size(); ++y) {
      if (!m.target.leq(m.image[static_cast<size_t>(x)], y)) continue;
      long long sum = 0;
      for (int xp = 0; xp < m.source.size(); ++xp)
        if (m.source.leq(x, xp) && m.target.leq(m.image[static_cast<size_t>(xp)], y))
          sum += parity_sign(m.target_rank(y) - m.source_rank(xp));
      long long expected = m.image[static_cast<size_t>(x)] == y ? 1 : 0;
      if (sum != expected)
        return {CheckReport::Status::ConditionFails, pair_witness(m, x, y, sum)};
    }
  return {CheckReport::Status::Ok, ""};
}

CheckReport near_eulerian_condition(const PosetMap& m) {
  using S = CheckReport::Status;
  const int min_x = *m.source.unique_min();
  const int min_y = *m.target.unique_min();
  for (int y = 0; y < m.target.size(); ++y) {
    std::vector<int> below, strictly_below;
    for (int x = 0; x < m.source.size(); ++x) {
      if (m.target.leq(m.image[static_cast<size_t>(x)], y)) below.push_back(x);
      if (m.target.less(m.image[static_cast<size_t>(x)], y)) strictly_below.push_back(x);
    }
    Poset sub = induced_subposet(m.source, below);
    RankFunction subr = restrict_rank(m.source_rank, below);
    if (!is_lower_eulerian(sub, subr))
      return {S::ConditionFails, "preimage ideal of y=" + m.target.label(y) + " not lower Eulerian"};
    if (rank_of(sub) != m.target_rank(y) - m.source_rank(min_x))
      return {S::ConditionFails, "preimage ideal of y=" + m.target.label(y) + " has wrong rank"};
    if (y == min_y) {
      bool ok = false;
      try {
        Poset completed = adjoin_max(sub);
        RankFunction cr = natural_rank(completed);
        ok = rank_of(completed) > 0 && is_eulerian(completed, cr);
      } catch (const Error&) {
      }
      if (!ok)
        return {S::ConditionFails,
                "preimage ideal of y=" + m.target.label(y) + " is not an Eulerian boundary"};
    } else {
      if (!is_near_eulerian(sub, subr))
        return {S::ConditionFails, "preimage ideal of y=" + m.target.label(y) + " not near-Eulerian"};
      std::vector<int> bd_in_source;
      for (int pos : near_eulerian_boundary(sub)) bd_in_source.push_back(below[static_cast<size_t>(pos)]);
      if (bd_in_source != strictly_below)
        return {S::ConditionFails,
                "boundary of preimage ideal of y=" + m.target.label(y) + " mismatch"};
    }
  }
  return {S::Ok, ""};
}

CheckReport check_sfs_internal(const PosetMap& m, SfsMethod method, bool require_lower) {
  validate_map_shape(m);
  using S = CheckReport::Status;
  if (!is_valid_rank(m.source, m.source_rank)) return {S::InvalidSourceRank, ""};
  if (!is_valid_rank(m.target, m.target_rank)) return {S::InvalidTargetRank, ""};
  if (require_lower) {
    if (!is_lower_eulerian(m.source, m.source_rank)) return {S::SourceNotLowerEulerian, ""};
    if (!is_lower_eulerian(m.target, m.target_rank)) return {S::TargetNotLowerEulerian, ""};
  } else {
    if (!is_locally_eulerian(m.source, m.source_rank)) return {S::SourceNotLocallyEulerian, ""};
    if (!is_locally_eulerian(m.target, m.target_rank)) return {S::TargetNotLocallyEulerian, ""};
  }
  auto strong = check_strongly_surjective(m);
  if (!strong.ok()) return strong;
  switch (method) {
    case SfsMethod::FiberSum: return fiber_sum_condition(m);
    case SfsMethod::CumulativeSum: return cumulative_sum_condition(m);
    case SfsMethod::NearEulerian: return near_eulerian_condition(m);
  }
  throw Error("check_sfs: unknown method");
}

}  // namespace

CheckReport check_sfs(const PosetMap& m, SfsMethod method) {
  return check_sfs_internal(m, method, /*require_lower=*/true);
}

bool is_sfs(const PosetMap& m, SfsMethod method) {
  auto report = check_sfs(m, method);
  if (report.ok()) return true;
  if (report.status == CheckReport::Status::ConditionFails) return false;
  throw Error("is_sfs: " + to_string(report.status) +
              (report.witness.empty() ? "" : " (" + report.witness + ")"));
}

CheckReport check_sfs_locally_eulerian(const PosetMap& m) {
  return check_sfs_internal(m, SfsMethod::FiberSum, /*require_lower=*/false);
}

PosetMap compose(const PosetMap& m1, const PosetMap& m2) {
  validate_map_shape(m1);
  validate_map_shape(m2);
  if (!(m1.target == m2.source) || !(m1.target_rank == m2.source_rank))
    throw Error("compose: endpoint mismatch");
  PosetMap out{m1.source, m1.source_rank, m2.target, m2.target_rank, {}};
  out.image.reserve(static_cast<size_t>(m1.source.size()));
  for (int t : m1.image) out.image.push_back(m2.image[static_cast<size_t>(t)]);
  return out;
}

PosetMap restrict_to_ideal(const PosetMap& m, const std::vector<int>& target_ideal) {
  validate_map_shape(m);
  std::vector<int> ideal_sorted = target_ideal;
  std::sort(ideal_sorted.begin(), ideal_sorted.end());
  if (ideal_sorted.empty()) throw Error("restrict_to_ideal: empty ideal");
  if (!is_lower_order_ideal(m.target, ideal_sorted))
    throw Error("restrict_to_ideal: not a lower order ideal of the target");
  std::vector<int> target_pos(static_cast<size_t>(m.target.size()), -1);
  for (size_t i = 0; i < ideal_sorted.size(); ++i)
    target_pos[static_cast<size_t>(ideal_sorted[i])] = static_cast<int>(i);
  std::vector<int> pre;
  for (int x = 0; x < m.source.size(); ++x)
    if (target_pos[static_cast<size_t>(m.image[static_cast<size_t>(x)])] >= 0) pre.push_back(x);
  PosetMap out;
  out.source = induced_subposet(m.source, pre);
  out.source_rank = restrict_rank(m.source_rank, pre);
  out.target = induced_subposet(m.target, ideal_sorted);
  out.target_rank = restrict_rank(m.target_rank, ideal_sorted);
  for (int x : pre) out.image.push_back(target_pos[static_cast<size_t>(m.image[static_cast<size_t>(x)])]);
  return out;
}

PosetMap restrict_above(const PosetMap& m, int x) {
  validate_map_shape(m);
  if (x < 0 || x >= m.source.size()) throw Error("restrict_above: element out of range");
  const int y0 = m.image[static_cast<size_t>(x)];
  std::vector<int> src, tgt;
  for (int i = 0; i < m.source.size(); ++i)
    if (m.source.leq(x, i)) src.push_back(i);
  for (int j = 0; j < m.target.size(); ++j)
    if (m.target.leq(y0, j)) tgt.push_back(j);
  std::vector<int> target_pos(static_cast<size_t>(m.target.size()), -1);
  for (size_t i = 0; i < tgt.size(); ++i) target_pos[static_cast<size_t>(tgt[i])] = static_cast<int>(i);
  PosetMap out;
  out.source = induced_subposet(m.source, src);
  out.source_rank = restrict_rank(m.source_rank, src);
  out.target = induced_subposet(m.target, tgt);
  out.target_rank = restrict_rank(m.target_rank, tgt);
  for (int i : src) out.image.push_back(target_pos[static_cast<size_t>(m.image[static_cast<size_t>(i)])]);
  return out;
}

std::pair<long long, long long> parity_check(const PosetMap& m) {
  validate_map_shape(m);
  long long sx = 0, sy = 0;
  for (int i = 0; i < m.source.size(); ++i) sx += parity_sign(m.source_rank(i));
  for (int j = 0; j < m.target.size(); ++j) sy += parity_sign(m.target_rank(j));
  return {sx, sy};
}

namespace {

void require_output_sfs(const PosetMap& m, const char* who) {
  auto report = check_sfs(m, SfsMethod::FiberSum);
  if (!report.ok())
    throw Error(std::string(who) + ": constructed map fails to be a strong formal subdivision (" +
                to_string(report.status) + " " + report.witness + ")");
}

}  // namespace

PosetMap identity_sfs(const Poset& p, const RankFunction& r) {
  if (!is_valid_rank(p, r)) throw Error("identity_sfs: invalid rank function");
  if (!is_lower_eulerian(p, r)) throw Error("identity_sfs: poset is not lower Eulerian");
  PosetMap out{p, r, p, r, {}};
  for (int i = 0; i < p.size(); ++i) out.image.push_back(i);
  return out;
}

PosetMap to_b0(const Poset& p, const RankFunction& r) {
  if (!is_valid_rank(p, r)) throw Error("to_b0: invalid rank function");
  if (!is_eulerian(p, r)) throw Error("to_b0: poset is not Eulerian");
  if (rank_of(p) < 1) throw Error("to_b0: poset has rank zero");
  const int top = *p.unique_max();
  std::vector<int> keep;
  for (int i = 0; i < p.size(); ++i)
    if (i != top) keep.push_back(i);
  PosetMap out;
  out.source = induced_subposet(p, keep);
  out.source_rank = restrict_rank(r, keep);
  out.target = boolean_algebra(0).poset;
  out.target_rank = RankFunction{{r(top) - 1}};
  out.image.assign(keep.size(), 0);
  require_output_sfs(out, "to_b0");
  return out;
}

PosetMap to_b1(const Poset& p, const RankFunction& r) {
  if (!is_valid_rank(p, r)) throw Error("to_b1: invalid rank function");
  if (!is_near_eulerian(p, r)) throw Error("to_b1: poset is not near-Eulerian");
  auto bd = near_eulerian_boundary(p);
  std::vector<char> in_bd(static_cast<size_t>(p.size()), 0);
  for (int e : bd) in_bd[static_cast<size_t>(e)] = 1;
  PosetMap out;
  out.source = p;
  out.source_rank = r;
  out.target = boolean_algebra(1).poset;
  const int low = r(*p.unique_min()) + rank_of(p) - 1;
  out.target_rank = RankFunction{{low, low + 1}};
  for (int i = 0; i < p.size(); ++i) out.image.push_back(in_bd[static_cast<size_t>(i)] ? 0 : 1);
  require_output_sfs(out, "to_b1");
  return out;
}

PosetMap bipyramid_sfs(const Poset& p, const RankFunction& r) {
  if (!is_valid_rank(p, r)) throw Error("bipyramid_sfs: invalid rank function");
  if (!is_eulerian(p, r)) throw Error("bipyramid_sfs: poset is not Eulerian");
  if (rank_of(p) < 1) throw Error("bipyramid_sfs: poset has rank zero");
  const int top = *p.unique_max();
  std::vector<int> keep;
  for (int i = 0; i < p.size(); ++i)
    if (i != top) keep.push_back(i);
  auto base = fan_over_boundary(p, r);
  auto pyr = pyramid(base.poset, base.rank);
  PosetMap out;
  out.source = pyr.poset;
  out.source_rank = pyr.rank;
  out.target = p;
  out.target_rank = r;
  out.image.reserve(static_cast<size_t>(pyr.poset.size()));
  for (size_t i = 0; i < keep.size(); ++i) {
    out.image.push_back(keep[i]);  // (z, bottom) -> z
    out.image.push_back(top);      // (z, top copy) -> maximum
  }
  require_output_sfs(out, "bipyramid_sfs");
  return out;
}

PosetMap product_sfs(const PosetMap& m1, const PosetMap& m2) {
  if (!is_sfs(m1) || !is_sfs(m2))
    throw Error("product_sfs: inputs must be strong formal subdivisions");
  auto src = direct_product(m1.source, m1.source_rank, m2.source, m2.source_rank);
  auto tgt = direct_product(m1.target, m1.target_rank, m2.target, m2.target_rank);
  PosetMap out{std::move(src.poset), std::move(src.rank), std::move(tgt.poset),
               std::move(tgt.rank), {}};
  const int n2 = m2.source.size();
  const int t2 = m2.target.size();
  out.image.reserve(static_cast<size_t>(m1.source.size()) * n2);
  for (int i = 0; i < m1.source.size(); ++i)
    for (int j = 0; j < n2; ++j)
      out.image.push_back(m1.image[static_cast<size_t>(i)] * t2 + m2.image[static_cast<size_t>(j)]);
  require_output_sfs(out, "product_sfs");
  return out;
}

PosetMap star_lift(const Poset& b, const RankFunction& rb, const PosetMap& m) {
  if (!is_valid_rank(b, rb)) throw Error("star_lift: invalid rank function");
  if (!is_eulerian(b, rb) || rank_of(b) < 1)
    throw Error("star_lift: first input must be Eulerian of positive rank");
  if (!is_sfs(m)) throw Error("star_lift: second input must be a strong formal subdivision");
  auto glued = star_product(b, rb, m.source, m.source_rank);
  const int left_count = b.size() - 1;
  const int min_y = *m.target.unique_min();
  PosetMap out;
  out.source = std::move(glued.poset);
  out.source_rank = std::move(glued.rank);
  out.target = m.target;
  // Natural target rank shifted so that ranks line up with the glued source.
  RankFunction nat_target = shift_rank(m.target_rank, -m.target_rank(min_y));
  out.target_rank = shift_rank(nat_target, sfs_rank(m) + rank_of(b) - 1);
  const int min_x = *m.source.unique_min();
  out.image.assign(static_cast<size_t>(left_count), min_y);
  for (int x = 0; x < m.source.size(); ++x)
    if (x != min_x) out.image.push_back(m.image[static_cast<size_t>(x)]);
  require_output_sfs(out, "star_lift");
  return out;
}

PosetMap dual_diamond_lift(const Poset& b, const RankFunction& rb, const PosetMap& m) {
  if (!is_valid_rank(b, rb)) throw Error("dual_diamond_lift: invalid rank function");
  if (!is_eulerian(b, rb) || rank_of(b) < 1)
    throw Error("dual_diamond_lift: first input must be Eulerian of positive rank");
  if (!is_sfs(m)) throw Error("dual_diamond_lift: second input must be a strong formal subdivision");
  if (!m.target.unique_max())
    throw Error("dual_diamond_lift: cylinder of the map is not Eulerian");
  if (m.target.size() < 2)
    throw Error("dual_diamond_lift: distinguished element would be maximal");
  if (rank_of(m.source) < 1)
    throw Error("dual_diamond_lift: cylinder of the map has rank below 2");

  RankFunction nat_b = shift_rank(rb, -rb(*b.unique_min()));
  RankFunction nat_x = shift_rank(m.source_rank, -m.source_rank(*m.source.unique_min()));
  RankFunction nat_y = shift_rank(m.target_rank, -m.target_rank(*m.target.unique_min()));

  std::vector<int> keep_b;
  for (int i = 0; i < b.size(); ++i)
    if (i != *b.unique_max()) keep_b.push_back(i);
  Poset del_b = induced_subposet(b, keep_b);
  RankFunction del_b_rank = restrict_rank(nat_b, keep_b);

  auto src = direct_product(del_b, del_b_rank, m.source, nat_x);
  auto tgt = dual_diamond_product(b, nat_b, m.target, nat_y);
  RankFunction tgt_rank = shift_rank(tgt.rank, sfs_rank(m));

  const int max_y = *m.target.unique_max();
  std::vector<int> y_pos(static_cast<size_t>(m.target.size()), -1);
  {
    int pos = 0;
    for (int y = 0; y < m.target.size(); ++y)
      if (y != max_y) y_pos[static_cast<size_t>(y)] = pos++;
  }
  const int del_y_count = m.target.size() - 1;
  const int lift_top = tgt.poset.size() - 1;

  PosetMap out{std::move(src.poset), std::move(src.rank), std::move(tgt.poset),
               std::move(tgt_rank), {}};
  for (int i = 0; i < del_b.size(); ++i)
    for (int x = 0; x < m.source.size(); ++x) {
      int y = m.image[static_cast<size_t>(x)];
      out.image.push_back(y == max_y ? lift_top : i * del_y_count + y_pos[static_cast<size_t>(y)]);
    }
  require_output_sfs(out, "dual_diamond_lift");
  return out;
}

}  // namespace posetcyl
