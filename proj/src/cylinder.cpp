#include "posetcyl/cylinder.hpp"

#include <algorithm>
#include <string>

namespace posetcyl {

namespace {

std::string tag(const std::string& prefix, const std::string& label) { return prefix + label; }

bool strip_tag(const std::string& label, const std::string& prefix, std::string* out) {
  if (label.rfind(prefix, 0) != 0) return false;
  *out = label.substr(prefix.size());
  return true;
}

}  // namespace

RankedPoset mapping_cylinder(const PosetMap& m) {
  validate_map_shape(m);
  if (!is_order_preserving(m)) throw Error("mapping_cylinder: map is not order-preserving");
  const int nx = m.source.size();
  const int ny = m.target.size();
  const int n = nx + ny;
  std::vector<std::string> labels;
  std::vector<int> ranks;
  labels.reserve(static_cast<size_t>(n));
  for (int i = 0; i < nx; ++i) {
    labels.push_back(tag("X:", m.source.label(i)));
    ranks.push_back(m.source_rank(i));
  }
  for (int j = 0; j < ny; ++j) {
    labels.push_back(tag("Y:", m.target.label(j)));
    ranks.push_back(m.target_rank(j) + 1);
  }
  std::vector<char> lt(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < nx; ++j)
      if (m.source.less(i, j)) lt[static_cast<size_t>(i) * n + j] = 1;
  for (int i = 0; i < ny; ++i)
    for (int j = 0; j < ny; ++j)
      if (m.target.less(i, j)) lt[static_cast<size_t>(nx + i) * n + (nx + j)] = 1;
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      if (m.target.leq(m.image[static_cast<size_t>(i)], j))
        lt[static_cast<size_t>(i) * n + (nx + j)] = 1;
  return {Poset::from_strict_order(std::move(labels), std::move(lt)), RankFunction{std::move(ranks)}};
}

JoinTriple cyl(const PosetMap& m) {
  if (!is_sfs(m)) throw Error("cyl: map is not a strong formal subdivision");
  auto rp = mapping_cylinder(m);
  JoinTriple t{std::move(rp.poset), std::move(rp.rank),
               m.source.size() + *m.target.unique_min()};
  if (!is_lower_eulerian(t.gamma, t.rank))
    throw Error("cyl: cylinder failed to be lower Eulerian");
  if (t.q == *t.gamma.unique_min()) throw Error("cyl: distinguished element is minimal");
  if (!is_join_admissible(t.gamma, t.q))
    throw Error("cyl: distinguished element is not join-admissible");
  return t;
}

PosetMap map(const JoinTriple& t) {
  if (!is_valid_rank(t.gamma, t.rank)) throw Error("map: invalid rank function");
  if (!is_lower_eulerian(t.gamma, t.rank)) throw Error("map: poset is not lower Eulerian");
  if (t.q < 0 || t.q >= t.gamma.size()) throw Error("map: element out of range");
  if (t.q == *t.gamma.unique_min()) throw Error("map: distinguished element is minimal");
  if (!is_join_admissible(t.gamma, t.q))
    throw Error("map: distinguished element is not join-admissible");
  std::vector<int> below, above;
  for (int i = 0; i < t.gamma.size(); ++i)
    (t.gamma.leq(t.q, i) ? above : below).push_back(i);
  std::vector<int> above_pos(static_cast<size_t>(t.gamma.size()), -1);
  for (size_t i = 0; i < above.size(); ++i)
    above_pos[static_cast<size_t>(above[i])] = static_cast<int>(i);
  PosetMap out;
  out.source = induced_subposet(t.gamma, below);
  out.source_rank = restrict_rank(t.rank, below);
  out.target = induced_subposet(t.gamma, above);
  out.target_rank = shift_rank(restrict_rank(t.rank, above), -1);
  out.image.reserve(below.size());
  for (int x : below) out.image.push_back(above_pos[static_cast<size_t>(*join(t.gamma, x, t.q))]);
  auto report = check_sfs(out, SfsMethod::FiberSum);
  if (!report.ok())
    throw Error("map: constructed map fails to be a strong formal subdivision (" +
                to_string(report.status) + " " + report.witness + ")");
  return out;
}

bool roundtrip_cyl_map(const PosetMap& m) {
  JoinTriple t = cyl(m);
  PosetMap back = map(t);
  if (back.source.size() != m.source.size() || back.target.size() != m.target.size()) return false;
  std::vector<std::string> src_labels, tgt_labels;
  for (const auto& l : back.source.labels()) {
    std::string stripped;
    if (!strip_tag(l, "X:", &stripped)) return false;
    src_labels.push_back(stripped);
  }
  for (const auto& l : back.target.labels()) {
    std::string stripped;
    if (!strip_tag(l, "Y:", &stripped)) return false;
    tgt_labels.push_back(stripped);
  }
  if (src_labels != m.source.labels() || tgt_labels != m.target.labels()) return false;
  for (int i = 0; i < m.source.size(); ++i)
    for (int j = 0; j < m.source.size(); ++j)
      if (back.source.less(i, j) != m.source.less(i, j)) return false;
  for (int i = 0; i < m.target.size(); ++i)
    for (int j = 0; j < m.target.size(); ++j)
      if (back.target.less(i, j) != m.target.less(i, j)) return false;
  return back.source_rank == m.source_rank && back.target_rank == m.target_rank &&
         back.image == m.image;
}

bool roundtrip_map_cyl(const JoinTriple& t) {
  PosetMap m = map(t);
  JoinTriple back = cyl(m);
  if (back.gamma.size() != t.gamma.size()) return false;
  // Elements of the cylinder list the complement of the up-set of q first,
  // then the up-set, both in ascending order of the original indices.
  std::vector<int> order;
  for (int i = 0; i < t.gamma.size(); ++i)
    if (!t.gamma.leq(t.q, i)) order.push_back(i);
  for (int i = 0; i < t.gamma.size(); ++i)
    if (t.gamma.leq(t.q, i)) order.push_back(i);
  const int split = t.gamma.size() - static_cast<int>(std::count_if(
                        order.begin(), order.end(), [&](int i) { return t.gamma.leq(t.q, i); }));
  for (int pos = 0; pos < back.gamma.size(); ++pos) {
    std::string stripped;
    if (!strip_tag(back.gamma.label(pos), pos < split ? "X:" : "Y:", &stripped)) return false;
    if (stripped != t.gamma.label(order[static_cast<size_t>(pos)])) return false;
    if (back.rank(pos) != t.rank(order[static_cast<size_t>(pos)])) return false;
  }
  for (int i = 0; i < back.gamma.size(); ++i)
    for (int j = 0; j < back.gamma.size(); ++j)
      if (back.gamma.less(i, j) !=
          t.gamma.less(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]))
        return false;
  return order[static_cast<size_t>(back.q)] == t.q;
}

void validate_square(const SfsSquare& sq) {
  if (!(sq.phi1.source == sq.sigma.source) || !(sq.phi1.source_rank == sq.sigma.source_rank))
    throw Error("square: top-left corner mismatch");
  if (!(sq.phi2.source == sq.sigma.target) || !(sq.phi2.source_rank == sq.sigma.target_rank))
    throw Error("square: top-right corner mismatch");
  if (!(sq.sigma_prime.source == sq.phi1.target) ||
      !(sq.sigma_prime.source_rank == sq.phi1.target_rank))
    throw Error("square: bottom-left corner mismatch");
  if (!(sq.sigma_prime.target == sq.phi2.target) ||
      !(sq.sigma_prime.target_rank == sq.phi2.target_rank))
    throw Error("square: bottom-right corner mismatch");
  const char* names[4] = {"phi1", "sigma", "sigma_prime", "phi2"};
  const PosetMap* maps[4] = {&sq.phi1, &sq.sigma, &sq.sigma_prime, &sq.phi2};
  for (int i = 0; i < 4; ++i)
    if (!is_sfs(*maps[i]))
      throw Error(std::string("square: ") + names[i] + " is not a strong formal subdivision");
  for (int x = 0; x < sq.sigma.source.size(); ++x)
    if (sq.phi2.image[static_cast<size_t>(sq.sigma.image[static_cast<size_t>(x)])] !=
        sq.sigma_prime.image[static_cast<size_t>(sq.phi1.image[static_cast<size_t>(x)])])
      throw Error("square: does not commute at x=" + sq.sigma.source.label(x));
}

PosetMap cyl_square(const SfsSquare& sq) {
  validate_square(sq);
  auto top = mapping_cylinder(sq.sigma);
  auto bottom = mapping_cylinder(sq.sigma_prime);
  const int nx = sq.sigma.source.size();
  const int nxp = sq.sigma_prime.source.size();
  PosetMap out{top.poset, top.rank, bottom.poset, bottom.rank, {}};
  out.image.reserve(static_cast<size_t>(top.poset.size()));
  for (int x = 0; x < nx; ++x) out.image.push_back(sq.phi1.image[static_cast<size_t>(x)]);
  for (int y = 0; y < sq.sigma.target.size(); ++y)
    out.image.push_back(nxp + sq.phi2.image[static_cast<size_t>(y)]);
  auto report = check_sfs(out, SfsMethod::FiberSum);
  if (!report.ok())
    throw Error("cyl_square: glued map fails to be a strong formal subdivision (" +
                to_string(report.status) + " " + report.witness + ")");
  const int q = nx + *sq.sigma.target.unique_min();
  const int qp = nxp + *sq.sigma_prime.target.unique_min();
  if (out.image[static_cast<size_t>(q)] != qp)
    throw Error("cyl_square: distinguished element not carried to distinguished element");
  for (int z = 0; z < out.source.size(); ++z) {
    if (out.source.leq(q, z)) continue;
    int zq = *join(out.source, z, q);
    int want = *join(out.target, out.image[static_cast<size_t>(z)], qp);
    if (out.image[static_cast<size_t>(zq)] != want)
      throw Error("cyl_square: join compatibility fails at z=" + out.source.label(z));
  }
  return out;
}

SfsSquare map_square(const PosetMap& phi, const JoinTriple& t, const JoinTriple& t_prime) {
  if (!(phi.source == t.gamma) || !(phi.source_rank == t.rank))
    throw Error("map_square: map does not start at the first triple");
  if (!(phi.target == t_prime.gamma) || !(phi.target_rank == t_prime.rank))
    throw Error("map_square: map does not end at the second triple");
  if (!is_sfs(phi)) throw Error("map_square: map is not a strong formal subdivision");
  if (phi.image[static_cast<size_t>(t.q)] != t_prime.q)
    throw Error("map_square: distinguished element not carried to distinguished element");
  for (int z = 0; z < t.gamma.size(); ++z) {
    if (t.gamma.leq(t.q, z)) continue;
    auto zq = join(t.gamma, z, t.q);
    auto want = join(t_prime.gamma, phi.image[static_cast<size_t>(z)], t_prime.q);
    if (!zq || !want || phi.image[static_cast<size_t>(*zq)] != *want)
      throw Error("map_square: join compatibility fails at z=" + t.gamma.label(z));
  }
  for (int z = 0; z < t.gamma.size(); ++z) {
    bool in_y = t.gamma.leq(t.q, z);
    bool in_yp = t_prime.gamma.leq(t_prime.q, phi.image[static_cast<size_t>(z)]);
    if (in_y != in_yp)
      throw Error("map_square: preimage of the distinguished up-set mismatch at z=" +
                  t.gamma.label(z));
  }
  PosetMap sigma = map(t);
  PosetMap sigma_prime = map(t_prime);
  std::vector<int> x_elems, y_elems, xp_elems, yp_elems;
  for (int i = 0; i < t.gamma.size(); ++i)
    (t.gamma.leq(t.q, i) ? y_elems : x_elems).push_back(i);
  for (int i = 0; i < t_prime.gamma.size(); ++i)
    (t_prime.gamma.leq(t_prime.q, i) ? yp_elems : xp_elems).push_back(i);
  std::vector<int> xp_pos(static_cast<size_t>(t_prime.gamma.size()), -1);
  std::vector<int> yp_pos(static_cast<size_t>(t_prime.gamma.size()), -1);
  for (size_t i = 0; i < xp_elems.size(); ++i) xp_pos[static_cast<size_t>(xp_elems[i])] = static_cast<int>(i);
  for (size_t i = 0; i < yp_elems.size(); ++i) yp_pos[static_cast<size_t>(yp_elems[i])] = static_cast<int>(i);

  SfsSquare out;
  out.sigma = std::move(sigma);
  out.sigma_prime = std::move(sigma_prime);
  out.phi1.source = out.sigma.source;
  out.phi1.source_rank = out.sigma.source_rank;
  out.phi1.target = out.sigma_prime.source;
  out.phi1.target_rank = out.sigma_prime.source_rank;
  for (int x : x_elems)
    out.phi1.image.push_back(xp_pos[static_cast<size_t>(phi.image[static_cast<size_t>(x)])]);
  out.phi2.source = out.sigma.target;
  out.phi2.source_rank = out.sigma.target_rank;
  out.phi2.target = out.sigma_prime.target;
  out.phi2.target_rank = out.sigma_prime.target_rank;
  for (int y : y_elems)
    out.phi2.image.push_back(yp_pos[static_cast<size_t>(phi.image[static_cast<size_t>(y)])]);
  validate_square(out);
  return out;
}

SfsSquare involution(const SfsSquare& sq) {
  validate_square(sq);
  SfsSquare out;
  out.sigma = sq.phi1;
  out.phi1 = sq.sigma;
  out.phi2 = sq.sigma_prime;
  out.sigma_prime = sq.phi2;
  return out;
}

IdealTriple cyl_ideal(const PosetMap& m) {
  auto report = check_sfs_locally_eulerian(m);
  if (!report.ok())
    throw Error("cyl_ideal: map is not a strong formal subdivision of locally Eulerian posets (" +
                to_string(report.status) + ")");
  auto rp = mapping_cylinder(m);
  IdealTriple t{std::move(rp.poset), std::move(rp.rank), {}};
  for (int j = 0; j < m.target.size(); ++j) t.ideal.push_back(m.source.size() + j);
  if (!is_join_admissible_ideal(t.gamma, t.ideal))
    throw Error("cyl_ideal: tagged target is not a join-admissible ideal");
  return t;
}

PosetMap map_ideal(const Poset& gamma, const RankFunction& rank,
                   const std::vector<int>& ideal_set) {
  if (!is_valid_rank(gamma, rank)) throw Error("map_ideal: invalid rank function");
  if (!is_locally_eulerian(gamma, rank)) throw Error("map_ideal: poset is not locally Eulerian");
  std::vector<int> ideal_sorted = ideal_set;
  std::sort(ideal_sorted.begin(), ideal_sorted.end());
  if (ideal_sorted.empty()) throw Error("map_ideal: empty ideal");
  if (!is_upper_order_ideal(gamma, ideal_sorted))
    throw Error("map_ideal: not an upper order ideal");
  if (!is_join_admissible_ideal(gamma, ideal_sorted))
    throw Error("map_ideal: ideal is not join-admissible");
  std::vector<char> in_ideal(static_cast<size_t>(gamma.size()), 0);
  for (int e : ideal_sorted) in_ideal[static_cast<size_t>(e)] = 1;
  for (int mel : gamma.minimal_elements())
    if (in_ideal[static_cast<size_t>(mel)])
      throw Error("map_ideal: ideal contains a minimal element");
  std::vector<int> complement;
  for (int i = 0; i < gamma.size(); ++i)
    if (!in_ideal[static_cast<size_t>(i)]) complement.push_back(i);
  std::vector<int> ideal_pos(static_cast<size_t>(gamma.size()), -1);
  for (size_t i = 0; i < ideal_sorted.size(); ++i)
    ideal_pos[static_cast<size_t>(ideal_sorted[i])] = static_cast<int>(i);
  PosetMap out;
  out.source = induced_subposet(gamma, complement);
  out.source_rank = restrict_rank(rank, complement);
  out.target = induced_subposet(gamma, ideal_sorted);
  out.target_rank = shift_rank(restrict_rank(rank, ideal_sorted), -1);
  for (int x : complement)
    out.image.push_back(ideal_pos[static_cast<size_t>(*join_with_ideal(gamma, x, ideal_sorted))]);
  auto report = check_sfs_locally_eulerian(out);
  if (!report.ok())
    throw Error("map_ideal: constructed map fails to be a strong formal subdivision (" +
                to_string(report.status) + " " + report.witness + ")");
  return out;
}

RankedPoset square_cylinder_by_clauses(const SfsSquare& sq) {
  validate_square(sq);
  const Poset& X = sq.sigma.source;
  const Poset& Y = sq.sigma.target;
  const Poset& Xp = sq.sigma_prime.source;
  const Poset& Yp = sq.sigma_prime.target;
  const int nx = X.size(), ny = Y.size(), nxp = Xp.size(), nyp = Yp.size();
  const int n = nx + ny + nxp + nyp;
  const int ox = 0, oy = nx, oxp = nx + ny, oyp = nx + ny + nxp;
  std::vector<std::string> labels;
  std::vector<int> ranks;
  for (int i = 0; i < nx; ++i) {
    labels.push_back("X:" + X.label(i));
    ranks.push_back(sq.sigma.source_rank(i));
  }
  for (int i = 0; i < ny; ++i) {
    labels.push_back("Y:" + Y.label(i));
    ranks.push_back(sq.sigma.target_rank(i) + 1);
  }
  for (int i = 0; i < nxp; ++i) {
    labels.push_back("X':" + Xp.label(i));
    ranks.push_back(sq.sigma_prime.source_rank(i) + 1);
  }
  for (int i = 0; i < nyp; ++i) {
    labels.push_back("Y':" + Yp.label(i));
    ranks.push_back(sq.sigma_prime.target_rank(i) + 2);
  }
  std::vector<char> lt(static_cast<size_t>(n) * n, 0);
  auto set = [&](int i, int j) { lt[static_cast<size_t>(i) * n + j] = 1; };
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < nx; ++j)
      if (X.less(i, j)) set(ox + i, ox + j);
  for (int i = 0; i < nxp; ++i)
    for (int j = 0; j < nxp; ++j)
      if (Xp.less(i, j)) set(oxp + i, oxp + j);
  for (int i = 0; i < ny; ++i)
    for (int j = 0; j < ny; ++j)
      if (Y.less(i, j)) set(oy + i, oy + j);
  for (int i = 0; i < nyp; ++i)
    for (int j = 0; j < nyp; ++j)
      if (Yp.less(i, j)) set(oyp + i, oyp + j);
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j)
      if (Y.leq(sq.sigma.image[static_cast<size_t>(i)], j)) set(ox + i, oy + j);
    for (int j = 0; j < nxp; ++j)
      if (Xp.leq(sq.phi1.image[static_cast<size_t>(i)], j)) set(ox + i, oxp + j);
    for (int j = 0; j < nyp; ++j)
      if (Yp.leq(sq.phi2.image[static_cast<size_t>(sq.sigma.image[static_cast<size_t>(i)])], j))
        set(ox + i, oyp + j);
  }
  for (int i = 0; i < nxp; ++i)
    for (int j = 0; j < nyp; ++j)
      if (Yp.leq(sq.sigma_prime.image[static_cast<size_t>(i)], j)) set(oxp + i, oyp + j);
  for (int i = 0; i < ny; ++i)
    for (int j = 0; j < nyp; ++j)
      if (Yp.leq(sq.phi2.image[static_cast<size_t>(i)], j)) set(oy + i, oyp + j);
  return {Poset::from_strict_order(std::move(labels), std::move(lt)), RankFunction{std::move(ranks)}};
}

}  // namespace posetcyl
