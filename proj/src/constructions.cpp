#include "posetcyl/constructions.hpp"

#include <algorithm>
#include <string>

namespace posetcyl {

namespace {

void require_eulerian_positive(const Poset& p, const RankFunction& r, const char* who) {
  if (!is_valid_rank(p, r)) throw Error(std::string(who) + ": invalid rank function");
  if (!is_eulerian(p, r)) throw Error(std::string(who) + ": input is not Eulerian");
  if (rank_of(p) < 1) throw Error(std::string(who) + ": input has rank zero");
}

RankFunction to_natural(const Poset& p, const RankFunction& r) {
  return shift_rank(r, -r(*p.unique_min()));
}

}  // namespace

RankedPoset boolean_algebra(int n) {
  if (n < 0) throw Error("boolean_algebra: negative size");
  if (n > 20) throw Error("boolean_algebra: size too large");
  const int count = 1 << n;
  std::vector<std::string> labels;
  std::vector<int> ranks;
  labels.reserve(static_cast<size_t>(count));
  for (int mask = 0; mask < count; ++mask) {
    std::string l = "{";
    for (int b = 0; b < n; ++b)
      if (mask & (1 << b)) {
        if (l.size() > 1) l += ',';
        l += std::to_string(b + 1);
      }
    l += '}';
    labels.push_back(std::move(l));
    ranks.push_back(__builtin_popcount(static_cast<unsigned>(mask)));
  }
  std::vector<char> lt(static_cast<size_t>(count) * count, 0);
  for (int a = 0; a < count; ++a)
    for (int b = 0; b < count; ++b)
      if (a != b && (a & b) == a) lt[static_cast<size_t>(a) * count + b] = 1;
  return {Poset::from_strict_order(std::move(labels), std::move(lt)), RankFunction{std::move(ranks)}};
}

RankedPoset direct_product(const Poset& p, const RankFunction& rp, const Poset& q,
                           const RankFunction& rq) {
  if (!is_valid_rank(p, rp) || !is_valid_rank(q, rq))
    throw Error("direct_product: invalid rank function");
  const int np = p.size(), nq = q.size();
  const int n = np * nq;
  std::vector<std::string> labels;
  std::vector<int> ranks;
  labels.reserve(static_cast<size_t>(n));
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j) {
      labels.push_back("(" + p.label(i) + "," + q.label(j) + ")");
      ranks.push_back(rp(i) + rq(j));
    }
  std::vector<char> lt(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j)
      for (int k = 0; k < np; ++k)
        for (int l = 0; l < nq; ++l) {
          if (i == k && j == l) continue;
          if (p.leq(i, k) && q.leq(j, l))
            lt[static_cast<size_t>(i * nq + j) * n + (k * nq + l)] = 1;
        }
  return {Poset::from_strict_order(std::move(labels), std::move(lt)), RankFunction{std::move(ranks)}};
}

RankedPoset pyramid(const Poset& p, const RankFunction& rp) {
  auto b1 = boolean_algebra(1);
  return direct_product(p, rp, b1.poset, b1.rank);
}

RankedPoset dual_diamond_product(const Poset& p, const RankFunction& rp, const Poset& q,
                                 const RankFunction& rq) {
  require_eulerian_positive(p, rp, "dual_diamond_product");
  require_eulerian_positive(q, rq, "dual_diamond_product");
  Poset bp = boundary(p);
  Poset bq = boundary(q);
  std::vector<int> keep_p, keep_q;
  for (int i = 0; i < p.size(); ++i)
    if (i != *p.unique_max()) keep_p.push_back(i);
  for (int i = 0; i < q.size(); ++i)
    if (i != *q.unique_max()) keep_q.push_back(i);
  auto prod = direct_product(bp, restrict_rank(rp, keep_p), bq, restrict_rank(rq, keep_q));
  Poset out = adjoin_max(prod.poset);
  RankFunction rank = prod.rank;
  int top_rank = rp(*p.unique_min()) + rq(*q.unique_min()) + rank_of(p) + rank_of(q) - 1;
  rank.values.push_back(top_rank);
  return {std::move(out), std::move(rank)};
}

RankedPoset diamond_product(const Poset& p, const RankFunction& rp, const Poset& q,
                            const RankFunction& rq) {
  require_eulerian_positive(p, rp, "diamond_product");
  require_eulerian_positive(q, rq, "diamond_product");
  std::vector<int> keep_p, keep_q;
  for (int i = 0; i < p.size(); ++i)
    if (i != *p.unique_min()) keep_p.push_back(i);
  for (int i = 0; i < q.size(); ++i)
    if (i != *q.unique_min()) keep_q.push_back(i);
  auto prod = direct_product(induced_subposet(p, keep_p), restrict_rank(rp, keep_p),
                             induced_subposet(q, keep_q), restrict_rank(rq, keep_q));
  // Adjoin the minimum below everything.
  const int m = prod.poset.size() + 1;
  auto labels = prod.poset.labels();
  labels.push_back(fresh_label(labels, "bot"));
  std::vector<char> lt(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i + 1 < m; ++i) {
    for (int j = 0; j + 1 < m; ++j)
      if (prod.poset.less(i, j)) lt[static_cast<size_t>(i) * m + j] = 1;
    lt[static_cast<size_t>(m - 1) * m + i] = 1;
  }
  RankFunction rank = prod.rank;
  rank.values.push_back(rp(*p.unique_min()) + rq(*q.unique_min()) + 1);
  return {Poset::from_strict_order(std::move(labels), std::move(lt)), std::move(rank)};
}

RankedPoset prism(const Poset& p, const RankFunction& rp) {
  auto b2 = boolean_algebra(2);
  return diamond_product(p, rp, b2.poset, b2.rank);
}

RankedPoset bipyramid(const Poset& p, const RankFunction& rp) {
  auto b2 = boolean_algebra(2);
  return dual_diamond_product(p, rp, b2.poset, b2.rank);
}

RankedPoset star_product(const Poset& p, const RankFunction& rp, const Poset& q,
                         const RankFunction& rq) {
  require_eulerian_positive(p, rp, "star_product");
  if (!is_valid_rank(q, rq)) throw Error("star_product: invalid rank function");
  if (!is_lower_eulerian(q, rq)) throw Error("star_product: second input is not lower Eulerian");
  RankFunction np = to_natural(p, rp);
  RankFunction nq = to_natural(q, rq);
  std::vector<int> keep_p, keep_q;
  for (int i = 0; i < p.size(); ++i)
    if (i != *p.unique_max()) keep_p.push_back(i);
  for (int i = 0; i < q.size(); ++i)
    if (i != *q.unique_min()) keep_q.push_back(i);
  const int a = static_cast<int>(keep_p.size());
  const int b = static_cast<int>(keep_q.size());
  const int n = a + b;
  std::vector<std::string> labels;
  std::vector<int> ranks;
  for (int idx = 0; idx < a; ++idx) {
    labels.push_back("L:" + p.label(keep_p[static_cast<size_t>(idx)]));
    ranks.push_back(np(keep_p[static_cast<size_t>(idx)]));
  }
  const int shift = rank_of(p) - 1;
  for (int idx = 0; idx < b; ++idx) {
    labels.push_back("R:" + q.label(keep_q[static_cast<size_t>(idx)]));
    ranks.push_back(nq(keep_q[static_cast<size_t>(idx)]) + shift);
  }
  std::vector<char> lt(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j)
      if (p.less(keep_p[static_cast<size_t>(i)], keep_p[static_cast<size_t>(j)]))
        lt[static_cast<size_t>(i) * n + j] = 1;
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j)
      if (q.less(keep_q[static_cast<size_t>(i)], keep_q[static_cast<size_t>(j)]))
        lt[static_cast<size_t>(a + i) * n + (a + j)] = 1;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) lt[static_cast<size_t>(i) * n + (a + j)] = 1;
  return {Poset::from_strict_order(std::move(labels), std::move(lt)), RankFunction{std::move(ranks)}};
}

RankedPoset face_lattice_polygon(int m) {
  if (m < 3) throw Error("face_lattice_polygon: need at least 3 vertices");
  const int n = 2 * m + 2;
  std::vector<std::string> labels;
  std::vector<int> ranks;
  labels.push_back("{}");
  ranks.push_back(0);
  for (int i = 0; i < m; ++i) {
    labels.push_back("v" + std::to_string(i));
    ranks.push_back(1);
  }
  for (int i = 0; i < m; ++i) {
    labels.push_back("e" + std::to_string(i));
    ranks.push_back(2);
  }
  labels.push_back("P");
  ranks.push_back(3);
  auto vertex = [](int i) { return 1 + i; };
  auto edge = [m](int i) { return 1 + m + i; };
  const int top = n - 1;
  std::vector<char> lt(static_cast<size_t>(n) * n, 0);
  auto set = [&](int i, int j) { lt[static_cast<size_t>(i) * n + j] = 1; };
  for (int i = 1; i < n; ++i) set(0, i);
  for (int i = 0; i < n - 1; ++i) set(i, top);
  for (int i = 0; i < m; ++i) {
    set(vertex(i), edge(i));
    set(vertex((i + 1) % m), edge(i));
  }
  return {Poset::from_strict_order(std::move(labels), std::move(lt)), RankFunction{std::move(ranks)}};
}

RankedPoset face_lattice_cube(int d) {
  if (d < 1) throw Error("face_lattice_cube: dimension must be positive");
  RankedPoset out = boolean_algebra(2);
  auto b2 = boolean_algebra(2);
  for (int i = 1; i < d; ++i) out = diamond_product(out.poset, out.rank, b2.poset, b2.rank);
  return out;
}

RankedPoset face_lattice_crosspolytope(int d) {
  if (d < 1) throw Error("face_lattice_crosspolytope: dimension must be positive");
  RankedPoset out = boolean_algebra(2);
  auto b2 = boolean_algebra(2);
  for (int i = 1; i < d; ++i)
    out = dual_diamond_product(out.poset, out.rank, b2.poset, b2.rank);
  return out;
}

RankedPoset subdivided_interval(int s) {
  if (s < 0) throw Error("subdivided_interval: negative count");
  const int verts = s + 2, edges = s + 1;
  const int n = 1 + verts + edges;
  std::vector<std::string> labels;
  std::vector<int> ranks;
  labels.push_back("{}");
  ranks.push_back(0);
  for (int i = 0; i < verts; ++i) {
    labels.push_back("v" + std::to_string(i));
    ranks.push_back(1);
  }
  for (int i = 0; i < edges; ++i) {
    labels.push_back("e" + std::to_string(i));
    ranks.push_back(2);
  }
  std::vector<char> lt(static_cast<size_t>(n) * n, 0);
  auto set = [&](int i, int j) { lt[static_cast<size_t>(i) * n + j] = 1; };
  for (int i = 1; i < n; ++i) set(0, i);
  for (int i = 0; i < edges; ++i) {
    set(1 + i, 1 + verts + i);
    set(1 + i + 1, 1 + verts + i);
  }
  return {Poset::from_strict_order(std::move(labels), std::move(lt)), RankFunction{std::move(ranks)}};
}

RankedPoset fan_over_boundary(const Poset& p, const RankFunction& rp) {
  require_eulerian_positive(p, rp, "fan_over_boundary");
  std::vector<int> keep;
  for (int i = 0; i < p.size(); ++i)
    if (i != *p.unique_max()) keep.push_back(i);
  return {induced_subposet(p, keep), restrict_rank(rp, keep)};
}

}  // namespace posetcyl
