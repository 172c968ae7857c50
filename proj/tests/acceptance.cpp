// Acceptance suite: one pass/fail line per criterion, all in exact
// arithmetic. Exit code 0 only when every criterion holds.

#include "posetcyl/cdindex.hpp"
#include "posetcyl/constructions.hpp"
#include "posetcyl/cylinder.hpp"
#include "posetcyl/homology.hpp"
#include "posetcyl/ncpoly.hpp"
#include "posetcyl/subdivision.hpp"

#include "corpus.hpp"

#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace posetcyl;
using namespace posetcyl::testing;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

NCPoly cd(const std::string& text) { return NCPoly::parse(text, Alphabet::CD); }

bool check(bool condition, const std::string& detail, std::string& note) {
  if (!condition && note.empty()) note = detail;
  return condition;
}

// 1. cd-index golden table for the boolean algebras.
bool criterion_cd_golden(std::string& note) {
  const std::vector<std::string> expected = {"1", "c", "c^2 + d", "c^3 + 2*c*d + 2*d*c",
                                             "c^4 + 3*c^2*d + 5*c*d*c + 3*d*c^2 + 4*d^2"};
  bool ok = true;
  for (int n = 0; n <= 4; ++n) {
    auto b = boolean_algebra(n + 1);
    ok &= check(cd_index(b.poset, b.rank) == cd(expected[static_cast<size_t>(n)]),
                "mismatch at rank " + std::to_string(n + 1), note);
  }
  return ok;
}

// 2. Local cd-index golden table for pyramids over boundaries.
bool criterion_local_cd_golden(std::string& note) {
  const std::vector<std::string> expected = {"0", "d", "2*c*d + d*c",
                                             "3*c^2*d + 3*c*d*c + d*c^2 + 4*d^2"};
  bool ok = true;
  for (int n = 0; n <= 3; ++n) {
    auto b = boolean_algebra(n + 1);
    auto fob = fan_over_boundary(b.poset, b.rank);
    auto pyr = pyramid(fob.poset, fob.rank);
    ok &= check(local_cd_index(pyr.poset, pyr.rank) == cd(expected[static_cast<size_t>(n)]),
                "mismatch at rank " + std::to_string(n + 1), note);
  }
  return ok;
}

// 3. The two correspondences are mutually inverse over the whole corpus.
bool criterion_roundtrip(std::string& note) {
  auto corpus = extended_eulerian_corpus();
  auto triples = corpus_triples(corpus);
  long long count = 0;
  bool ok = true;
  for (const auto& [name, t] : triples) {
    ++count;
    bool trip = roundtrip_map_cyl(t);
    ok &= check(trip, "triple round trip fails for " + name, note);
    if (!trip) continue;
    ok &= check(roundtrip_cyl_map(map(t)), "map round trip fails for " + name, note);
  }
  ok &= check(count >= 500, "corpus too small: " + std::to_string(count), note);
  if (ok) note = std::to_string(count) + " triples";
  return ok;
}

std::vector<SfsSquare> build_square_corpus() {
  std::vector<SfsSquare> squares;
  auto point_collapse = [](const Poset& p, const RankFunction& r) {
    return PosetMap{p, r, boolean_algebra(0).poset,
                    RankFunction{{r(*p.unique_min()) + rank_of(p)}},
                    std::vector<int>(static_cast<size_t>(p.size()), 0)};
  };
  // Chain collapse squares over every near-Eulerian corpus subdivision.
  for (const auto& e : base_eulerian_corpus()) {
    if (e.poset.size() > 32) continue;
    for (const PosetMap& sigma :
         {identity_sfs(e.poset, e.rank), bipyramid_sfs(e.poset, e.rank)}) {
      SfsSquare sq;
      sq.sigma = sigma;
      sq.phi1 = to_b1(sigma.source, sigma.source_rank);
      sq.phi2 = to_b1(sigma.target, sigma.target_rank);
      sq.sigma_prime = identity_sfs(sq.phi1.target, sq.phi1.target_rank);
      squares.push_back(std::move(sq));
    }
  }
  // Point collapse squares between boundary copies inside a pyramid.
  for (const auto& e : base_eulerian_corpus()) {
    if (e.poset.size() > 32) continue;
    auto fob = fan_over_boundary(e.poset, e.rank);
    auto pyr = pyramid(fob.poset, fob.rank);
    auto q = pyr.poset.index_of("(" + fob.poset.label(*fob.poset.unique_min()) + ",{1})");
    if (!q) continue;
    PosetMap sigma = map(JoinTriple{pyr.poset, pyr.rank, *q});
    SfsSquare sq;
    sq.sigma = sigma;
    sq.phi1 = point_collapse(sigma.source, sigma.source_rank);
    sq.phi2 = point_collapse(sigma.target, sigma.target_rank);
    sq.sigma_prime = identity_sfs(sq.phi1.target, sq.phi1.target_rank);
    squares.push_back(std::move(sq));
  }
  // Product squares from pairs of small subdivisions.
  {
    auto b2 = boolean_algebra(2);
    auto b1 = boolean_algebra(1);
    auto pg = face_lattice_polygon(4);
    std::vector<PosetMap> factors_left = {bipyramid_sfs(b2.poset, b2.rank),
                                          map(JoinTriple{pg.poset, pg.rank,
                                                         *pg.poset.index_of("v0")}),
                                          to_b0(b2.poset, b2.rank)};
    std::vector<PosetMap> factors_right = {identity_sfs(b1.poset, b1.rank),
                                           identity_sfs(b2.poset, b2.rank),
                                           bipyramid_sfs(b2.poset, b2.rank)};
    for (const auto& left : factors_left)
      for (const auto& right : factors_right) {
        SfsSquare sq;
        sq.sigma = product_sfs(left, identity_sfs(right.source, right.source_rank));
        sq.phi1 = product_sfs(identity_sfs(left.source, left.source_rank), right);
        sq.sigma_prime = product_sfs(left, identity_sfs(right.target, right.target_rank));
        sq.phi2 = product_sfs(identity_sfs(left.target, left.target_rank), right);
        squares.push_back(std::move(sq));
      }
  }
  return squares;
}

// 4. Squares split back into themselves and the involution preserves the
//    four-block cylinder.
bool criterion_squares(std::string& note) {
  auto squares = build_square_corpus();
  bool ok = check(squares.size() >= 50,
                  "square corpus too small: " + std::to_string(squares.size()), note);
  int index = 0;
  for (const auto& sq : squares) {
    ++index;
    std::string tag = "square #" + std::to_string(index);
    PosetMap glued = cyl_square(sq);
    SfsSquare back = map_square(glued, cyl(sq.sigma), cyl(sq.sigma_prime));
    ok &= check(back == sq, tag + ": split does not invert the gluing", note);
    SfsSquare flipped = involution(sq);
    ok &= check(involution(flipped) == sq, tag + ": involution is not involutive", note);
    auto direct = square_cylinder_by_clauses(sq);
    ok &= check(isomorphic(mapping_cylinder(glued).poset, direct.poset),
                tag + ": four-block cylinder mismatch", note);
    PosetMap glued_flipped = cyl_square(flipped);
    ok &= check(isomorphic(mapping_cylinder(glued_flipped).poset, direct.poset),
                tag + ": involution changes the cylinder", note);
  }
  if (ok) note = std::to_string(squares.size()) + " squares";
  return ok;
}

// 5. The cd-index decomposition formula, with integrality and, on
//    Gorenstein* posets, nonnegativity of every summand.
bool criterion_formula(std::string& note) {
  std::vector<CorpusEntry> corpus;
  for (auto& e : extended_eulerian_corpus())
    if (e.poset.size() <= 32 && e.poset.unique_max()) corpus.push_back(std::move(e));
  long long instances = 0;
  bool ok = true;
  for (const auto& e : corpus) {
    if (!is_eulerian(e.poset, e.rank)) continue;
    bool gorenstein = is_gorenstein_star(e.poset, e.rank);
    int lo = *e.poset.unique_min();
    int hi = *e.poset.unique_max();
    NCPoly phi = cd_index(e.poset, e.rank);
    for (int q = 0; q < e.poset.size(); ++q) {
      if (q == lo || q == hi || !is_join_admissible(e.poset, q)) continue;
      ++instances;
      JoinTriple t{e.poset, e.rank, q};
      CdFormulaParts parts = cd_formula_parts(t);
      ok &= check(parts.rhs == phi,
                  e.name + "/q=" + e.poset.label(q) + ": formula mismatch", note);
      ok &= check(parts.rhs.has_integer_coefficients(),
                  e.name + "/q=" + e.poset.label(q) + ": non-integer result", note);
      if (gorenstein) {
        ok &= check(parts.local_part.has_nonnegative_coefficients(),
                    e.name + ": negative local part", note);
        for (const auto& s : parts.summands)
          ok &= check(s.has_nonnegative_coefficients(), e.name + ": negative summand", note);
      }
    }
  }
  ok &= check(instances >= 100, "too few instances: " + std::to_string(instances), note);
  if (ok) note = std::to_string(instances) + " instances";
  return ok;
}

// 6. The three subdivision characterizations agree, including on the
//    strongly surjective counterexample and corrupted maps.
bool criterion_characterizations(std::string& note) {
  std::vector<PosetMap> candidates;
  for (const auto& e : base_eulerian_corpus()) {
    if (e.poset.size() > 28) continue;
    candidates.push_back(identity_sfs(e.poset, e.rank));
    candidates.push_back(bipyramid_sfs(e.poset, e.rank));
    candidates.push_back(to_b0(e.poset, e.rank));
    candidates.push_back(to_b1(e.poset, e.rank));
  }
  for (const auto& [name, t] : corpus_triples(base_eulerian_corpus())) {
    if (t.gamma.size() > 28) continue;
    candidates.push_back(map(t));
  }
  // The strongly surjective map that fails the subdivision condition.
  {
    auto b3 = boolean_algebra(3);
    auto x = fan_over_boundary(b3.poset, b3.rank);
    Poset y = Poset::from_covers({"{}", "{1}", "{2}", "{1,2}", "zhat"},
                                 {{"{}", "{1}"},
                                  {"{}", "{2}"},
                                  {"{1}", "{1,2}"},
                                  {"{2}", "{1,2}"},
                                  {"{1}", "zhat"},
                                  {"{2}", "zhat"}});
    RankFunction yr = natural_rank(y);
    PosetMap m{x.poset, x.rank, y, yr, {}};
    m.image.resize(static_cast<size_t>(x.poset.size()));
    auto set = [&](const std::string& from, const std::string& to) {
      m.image[static_cast<size_t>(*x.poset.index_of(from))] = *y.index_of(to);
    };
    set("{}", "{}");
    set("{1}", "{1}");
    set("{2}", "{2}");
    set("{1,2}", "{1,2}");
    set("{3}", "{2}");
    set("{1,3}", "zhat");
    set("{2,3}", "zhat");
    bool ok_counter = check_strongly_surjective(m).ok();
    for (auto method : {SfsMethod::FiberSum, SfsMethod::CumulativeSum, SfsMethod::NearEulerian})
      ok_counter = ok_counter && check_sfs(m, method).status == CheckReport::Status::ConditionFails;
    if (!ok_counter) {
      note = "counterexample misclassified";
      return false;
    }
    candidates.push_back(std::move(m));
  }
  // Deterministically corrupted maps: redirect one image entry upward.
  std::mt19937 rng(20240601);
  std::vector<PosetMap> corrupted;
  {
    std::vector<PosetMap> bases = candidates;
    size_t attempts = 0;
    while (corrupted.size() < 24 && attempts < 4000) {
      ++attempts;
      const PosetMap& base = bases[rng() % bases.size()];
      if (base.target.size() < 2) continue;
      PosetMap mut = base;
      int x = static_cast<int>(rng() % static_cast<unsigned>(mut.source.size()));
      int y = static_cast<int>(rng() % static_cast<unsigned>(mut.target.size()));
      if (mut.image[static_cast<size_t>(x)] == y) continue;
      mut.image[static_cast<size_t>(x)] = y;
      auto report = check_sfs(mut, SfsMethod::FiberSum);
      if (report.status == CheckReport::Status::ConditionFails) corrupted.push_back(std::move(mut));
    }
  }
  if (corrupted.size() < 20) {
    note = "too few corrupted candidates: " + std::to_string(corrupted.size());
    return false;
  }
  candidates.insert(candidates.end(), corrupted.begin(), corrupted.end());
  if (candidates.size() < 200) {
    note = "too few candidates: " + std::to_string(candidates.size());
    return false;
  }
  bool ok = true;
  int index = 0;
  for (const auto& m : candidates) {
    ++index;
    auto a = check_sfs(m, SfsMethod::FiberSum);
    auto b = check_sfs(m, SfsMethod::CumulativeSum);
    auto c = check_sfs(m, SfsMethod::NearEulerian);
    bool agree = a.ok() == b.ok() && b.ok() == c.ok() && a.admissible() == b.admissible() &&
                 b.admissible() == c.admissible();
    ok &= check(agree, "characterizations disagree on candidate #" + std::to_string(index), note);
  }
  if (ok)
    note = std::to_string(candidates.size()) + " candidates, " +
           std::to_string(corrupted.size()) + " corrupted";
  return ok;
}

// 7. Pyramid, prism, bipyramid, star, duality and derivation identities.
bool criterion_identities(std::string& note) {
  bool ok = true;
  NCPoly c = cd("c");
  for (const auto& e : base_eulerian_corpus()) {
    if (rank_of(e.poset) > 5) continue;
    NCPoly phi = cd_index(e.poset, e.rank);
    auto pyr = pyramid(e.poset, e.rank);
    NCPoly phi_pyr = cd_index(pyr.poset, pyr.rank);
    ok &= check(phi_pyr == phi * c + derivation_g(phi), e.name + ": pyramid via G", note);
    ok &= check(phi_pyr == c * phi + derivation_gprime(phi), e.name + ": pyramid via G'", note);
    ok &= check(phi_pyr * Rational(2) == phi * c + c * phi + derivation_d(phi),
                e.name + ": pyramid via D", note);
    auto pr = prism(e.poset, e.rank);
    ok &= check(cd_index(pr.poset, pr.rank) == phi * c + derivation_d(phi),
                e.name + ": prism identity", note);
    auto bi = bipyramid(e.poset, e.rank);
    ok &= check(cd_index(bi.poset, bi.rank) == c * phi + derivation_d(phi),
                e.name + ": bipyramid identity", note);
    Poset d = dual(e.poset);
    ok &= check(cd_index(d, natural_rank(d)) == reverse_words(phi), e.name + ": duality", note);
    ok &= check(derivation_d(phi) == d_oracle_interval_sum(e.poset, e.rank),
                e.name + ": D-oracle", note);
  }
  {
    auto b2 = boolean_algebra(2);
    auto b3 = boolean_algebra(3);
    auto pg = face_lattice_polygon(6);
    const std::vector<std::pair<const RankedPoset*, const RankedPoset*>> pairs = {
        {&b2, &b3}, {&b3, &b2}, {&pg, &b2}, {&b2, &pg}, {&b3, &b3}};
    for (auto [a, b] : pairs) {
      auto st = star_product(a->poset, a->rank, b->poset, b->rank);
      ok &= check(cd_index(st.poset, st.rank) ==
                      cd_index(a->poset, a->rank) * cd_index(b->poset, b->rank),
                  "star multiplicativity", note);
    }
  }
  return ok;
}

// 8. Homology-backed Gorenstein* checks plus the no-join counterexample.
bool criterion_homology(std::string& note) {
  bool ok = true;
  for (int n = 1; n <= 4; ++n) {
    auto b = boolean_algebra(n);
    ok &= check(is_gorenstein_star(b.poset, b.rank), "boolean rank " + std::to_string(n), note);
  }
  for (int m = 3; m <= 8; ++m) {
    auto pg = face_lattice_polygon(m);
    ok &= check(is_gorenstein_star(pg.poset, pg.rank), "polygon " + std::to_string(m), note);
  }
  for (int d = 2; d <= 3; ++d) {
    auto cube = face_lattice_cube(d);
    ok &= check(is_gorenstein_star(cube.poset, cube.rank), "cube " + std::to_string(d), note);
    auto cross = face_lattice_crosspolytope(d);
    ok &= check(is_gorenstein_star(cross.poset, cross.rank),
                "cross-polytope " + std::to_string(d), note);
  }
  for (int s = 0; s <= 3; ++s) {
    auto si = subdivided_interval(s);
    ok &= check(is_near_gorenstein_star(si.poset, si.rank),
                "subdivided interval " + std::to_string(s), note);
  }
  for (const auto& e : near_eulerian_corpus()) {
    ok &= check(is_near_gorenstein_star(e.poset, e.rank), e.name, note);
  }
  // Square minus an edge and the maximum: only the minimum is
  // join-admissible, by the full join table.
  {
    auto sq = face_lattice_polygon(4);
    std::vector<int> keep;
    for (int i = 0; i < sq.poset.size(); ++i)
      if (sq.poset.label(i) != "e0" && sq.poset.label(i) != "P") keep.push_back(i);
    Poset pruned = induced_subposet(sq.poset, keep);
    int min = *pruned.unique_min();
    for (int q = 0; q < pruned.size(); ++q) {
      bool admissible = true;
      for (int z = 0; z < pruned.size() && admissible; ++z)
        if (!join(pruned, z, q)) admissible = false;
      ok &= check(admissible == (q == min), "pruned square join table at " + pruned.label(q),
                  note);
    }
  }
  return ok;
}

// 9. Structural corollaries across the full corpus of triples.
bool criterion_structure(std::string& note) {
  bool ok = true;
  auto corpus = extended_eulerian_corpus();
  long long count = 0;
  for (const auto& [name, t] : corpus_triples(corpus)) {
    ++count;
    PosetMap m = map(t);
    auto [sx, sy] = parity_check(m);
    ok &= check(sx == sy, name + ": parity sums differ", note);
    ok &= check((m.source.size() - m.target.size()) % 2 == 0, name + ": size parity", note);
    ok &= check(rank_of(t.gamma) == rank_of(m.source) + 1, name + ": cylinder rank", note);
    bool gx = is_graded(m.source), gy = is_graded(m.target), gg = is_graded(t.gamma);
    ok &= check(gx == gy && gy == gg, name + ": gradedness transfer", note);
    ok &= check(t.rank(t.q) - t.rank(*t.gamma.unique_min()) == sfs_rank(m) + 1,
                name + ": distinguished element height", note);
    // Cover criterion between the two blocks of the cylinder.
    const int nx = m.source.size();
    auto cylinder = mapping_cylinder(m);
    std::set<std::pair<int, int>> covers(cylinder.poset.covers().begin(),
                                         cylinder.poset.covers().end());
    for (int x = 0; x < nx && ok; ++x)
      for (int y = 0; y < m.target.size() && ok; ++y) {
        bool is_cover = covers.count({x, nx + y}) > 0;
        bool expected =
            m.image[static_cast<size_t>(x)] == y && m.source_rank(x) == m.target_rank(y);
        ok &= check(is_cover == expected, name + ": cover criterion", note);
      }
  }
  if (ok) note = std::to_string(count) + " triples";
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"C1 cd-index golden table", criterion_cd_golden},
      {"C2 local cd-index golden table", criterion_local_cd_golden},
      {"C3 correspondence round trips", criterion_roundtrip},
      {"C4 square gluing round trips", criterion_squares},
      {"C5 cd-index decomposition formula", criterion_formula},
      {"C6 characterization equivalence", criterion_characterizations},
      {"C7 cd-index identity suite", criterion_identities},
      {"C8 homology suite", criterion_homology},
      {"C9 structural corollaries", criterion_structure},
  };
  bool all_ok = true;
  for (auto& criterion : criteria) {
    std::string note;
    bool ok = false;
    try {
      ok = criterion.run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    all_ok &= ok;
    std::cout << criterion.name << ": " << (ok ? "PASS" : "FAIL");
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << "\n";
  }
  return all_ok ? 0 : 1;
}
