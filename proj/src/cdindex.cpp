#include "posetcyl/cdindex.hpp"

#include <algorithm>
#include <string>

namespace posetcyl {

namespace {

void require_natural_eulerian(const Poset& p, const RankFunction& r, const char* who) {
  if (!is_valid_rank(p, r)) throw Error(std::string(who) + ": invalid rank function");
  if (!is_eulerian(p, r)) throw Error(std::string(who) + ": poset is not Eulerian");
  if (r(*p.unique_min()) != 0) throw Error(std::string(who) + ": rank function is not natural");
}

RankFunction to_natural(const Poset& p, const RankFunction& r) {
  if (!is_valid_rank(p, r)) throw Error("cd_index: invalid rank function");
  auto min = p.unique_min();
  if (!min) throw Error("cd_index: no unique minimum");
  return shift_rank(r, -r(*min));
}

}  // namespace

long long flag_count(const Poset& p, const RankFunction& r, const std::set<int>& selected) {
  require_natural_eulerian(p, r, "flag_count");
  const int n = rank_of(p) - 1;
  for (int s : selected)
    if (s < 1 || s > n) throw Error("flag_count: selected rank out of range");
  // Levels 0 and rank(p) are the endpoints; chains are counted by dynamic
  // programming across the selected levels in increasing rank order.
  std::vector<std::vector<int>> levels;
  levels.push_back({*p.unique_min()});
  for (int s : selected) {
    std::vector<int> level;
    for (int z = 0; z < p.size(); ++z)
      if (r(z) == s) level.push_back(z);
    levels.push_back(std::move(level));
  }
  levels.push_back({*p.unique_max()});
  std::vector<long long> ways(levels[0].size(), 1);
  for (size_t li = 1; li < levels.size(); ++li) {
    std::vector<long long> next(levels[li].size(), 0);
    for (size_t j = 0; j < levels[li].size(); ++j)
      for (size_t i = 0; i < levels[li - 1].size(); ++i)
        if (p.less(levels[li - 1][i], levels[li][j])) next[j] += ways[i];
    ways = std::move(next);
  }
  long long total = 0;
  for (long long w : ways) total += w;
  return total;
}

NCPoly ab_polynomial(const Poset& p, const RankFunction& r) {
  RankFunction nat = to_natural(p, r);
  require_natural_eulerian(p, nat, "ab_polynomial");
  const int n = rank_of(p) - 1;
  if (n < 0) throw Error("ab_polynomial: poset has a single element");
  NCPoly psi(Alphabet::AB);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::set<int> selected;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) selected.insert(i + 1);
    long long f = flag_count(p, nat, selected);
    NCPoly word = NCPoly::one(Alphabet::AB);
    NCPoly a_minus_b =
        NCPoly::monomial(Alphabet::AB, "a", 1) - NCPoly::monomial(Alphabet::AB, "b", 1);
    for (int i = 1; i <= n; ++i)
      word = word * (selected.count(i) ? NCPoly::monomial(Alphabet::AB, "b", 1) : a_minus_b);
    psi = psi + word * Rational(f);
  }
  return psi;
}

NCPoly cd_index(const Poset& p, const RankFunction& r) {
  if (p.size() < 2) throw Error("cd_index: poset must have more than one element");
  return cd_from_ab(ab_polynomial(p, r));
}

namespace {

struct NearEulerianPieces {
  Poset completion;              // semisuspension
  RankFunction completion_rank;  // natural
  Poset completed_boundary;      // boundary ideal with a maximum adjoined
  RankFunction completed_boundary_rank;
};

NearEulerianPieces near_eulerian_pieces(const Poset& p, const RankFunction& r, const char* who) {
  if (!is_valid_rank(p, r)) throw Error(std::string(who) + ": invalid rank function");
  if (!is_near_eulerian(p, r)) throw Error(std::string(who) + ": poset is not near-Eulerian");
  NearEulerianPieces out;
  auto [sigma, zhat] = semisuspension(p);
  (void)zhat;
  out.completion = std::move(sigma);
  out.completion_rank = natural_rank(out.completion);
  auto bd = near_eulerian_boundary(p);
  out.completed_boundary = adjoin_max(induced_subposet(p, bd));
  out.completed_boundary_rank = natural_rank(out.completed_boundary);
  return out;
}

}  // namespace

NCPoly local_cd_index(const Poset& p, const RankFunction& r) {
  auto pieces = near_eulerian_pieces(p, r, "local_cd_index");
  NCPoly c = NCPoly::monomial(Alphabet::CD, "c", 1);
  NCPoly out = cd_index(pieces.completion, pieces.completion_rank) -
               cd_index(pieces.completed_boundary, pieces.completed_boundary_rank) * c;
  if (!out.is_zero() && (!out.is_homogeneous() || out.degree() != rank_of(p)))
    throw Error("local_cd_index: result is not homogeneous of the expected degree");
  return out;
}

NCPoly ab_polynomial_relative(const Poset& p, const RankFunction& r) {
  auto pieces = near_eulerian_pieces(p, r, "ab_polynomial_relative");
  NCPoly b = NCPoly::monomial(Alphabet::AB, "b", 1);
  return ab_polynomial(pieces.completion, pieces.completion_rank) -
         ab_polynomial(pieces.completed_boundary, pieces.completed_boundary_rank) * b;
}

NCPoly d_oracle_interval_sum(const Poset& p, const RankFunction& r) {
  RankFunction nat = to_natural(p, r);
  require_natural_eulerian(p, nat, "d_oracle_interval_sum");
  if (rank_of(p) < 1) throw Error("d_oracle_interval_sum: poset has rank zero");
  const int lo = *p.unique_min();
  const int hi = *p.unique_max();
  NCPoly d = NCPoly::monomial(Alphabet::CD, "d", 1);
  NCPoly out(Alphabet::CD);
  for (int z = 0; z < p.size(); ++z) {
    if (z == lo || z == hi) continue;
    Poset below = interval(p, lo, z, IntervalKind::Closed);
    Poset above = interval(p, z, hi, IntervalKind::Closed);
    out = out + cd_index(below, natural_rank(below)) * d * cd_index(above, natural_rank(above));
  }
  return out;
}

CdFormulaParts cd_formula_parts(const JoinTriple& t) {
  if (!is_valid_rank(t.gamma, t.rank)) throw Error("cd_formula: invalid rank function");
  if (!is_eulerian(t.gamma, t.rank) || rank_of(t.gamma) < 1)
    throw Error("cd_formula: poset is not Eulerian of positive rank");
  if (t.q == *t.gamma.unique_min() || t.q == *t.gamma.unique_max())
    throw Error("cd_formula: distinguished element must not be the minimum or maximum");
  PosetMap sigma = map(t);
  const Poset& x_poset = sigma.source;
  const RankFunction& x_rank = sigma.source_rank;
  const Poset& y_poset = sigma.target;
  const RankFunction& y_rank = sigma.target_rank;
  const int min_y = *y_poset.unique_min();
  const int max_y = *y_poset.unique_max();

  NCPoly c = NCPoly::monomial(Alphabet::CD, "c", 1);
  NCPoly d = NCPoly::monomial(Alphabet::CD, "d", 1);

  auto completed = [&](const std::vector<int>& elements) {
    Poset bar = adjoin_max(induced_subposet(x_poset, elements));
    return cd_index(bar, natural_rank(bar));
  };

  CdFormulaParts parts{NCPoly(Alphabet::CD), {}, NCPoly(Alphabet::CD)};
  parts.local_part = local_cd_index(x_poset, x_rank);

  parts.summands.push_back(completed(near_eulerian_boundary(x_poset)) * c);

  std::vector<int> fiber_min;
  for (int x = 0; x < x_poset.size(); ++x)
    if (sigma.image[static_cast<size_t>(x)] == min_y) fiber_min.push_back(x);
  parts.summands.push_back(completed(fiber_min) * c * cd_index(y_poset, natural_rank(y_poset)));

  for (int y = 0; y < y_poset.size(); ++y) {
    if (y == min_y || y == max_y) continue;
    std::vector<int> below, strictly_below;
    for (int x = 0; x < x_poset.size(); ++x) {
      if (y_poset.leq(sigma.image[static_cast<size_t>(x)], y)) below.push_back(x);
      if (y_poset.less(sigma.image[static_cast<size_t>(x)], y)) strictly_below.push_back(x);
    }
    NCPoly local_piece =
        local_cd_index(induced_subposet(x_poset, below), restrict_rank(x_rank, below));
    Poset upper = interval(y_poset, y, max_y, IntervalKind::Closed);
    NCPoly upper_cd = cd_index(upper, natural_rank(upper));
    parts.summands.push_back((local_piece * c + completed(strictly_below) * d) * upper_cd);
  }

  NCPoly bracket(Alphabet::CD);
  for (const NCPoly& s : parts.summands) bracket = bracket + s;
  parts.rhs = parts.local_part + bracket * Rational(1, 2);
  if (!parts.rhs.has_integer_coefficients())
    throw Error("cd_formula: right-hand side has non-integer coefficients");
  return parts;
}

NCPoly cd_formula_rhs(const JoinTriple& t) { return cd_formula_parts(t).rhs; }

}  // namespace posetcyl
