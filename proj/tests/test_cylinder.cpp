#include "posetcyl/cylinder.hpp"

#include "corpus.hpp"

#include <doctest.h>

#include <set>

using namespace posetcyl;
using posetcyl::testing::base_eulerian_corpus;
using posetcyl::testing::corpus_triples;
using posetcyl::testing::isomorphic;
using posetcyl::testing::near_eulerian_corpus;

namespace {

std::vector<posetcyl::testing::CorpusEntry> small_corpus() {
  std::vector<posetcyl::testing::CorpusEntry> out;
  for (auto& e : base_eulerian_corpus())
    if (e.poset.size() <= 20) out.push_back(std::move(e));
  return out;
}

}  // namespace

TEST_CASE("cylinder of an identity is a pyramid") {
  for (const auto& e : small_corpus()) {
    CAPTURE(e.name);
    auto cylinder = mapping_cylinder(identity_sfs(e.poset, e.rank));
    auto pyr = pyramid(e.poset, e.rank);
    CHECK(isomorphic(cylinder.poset, pyr.poset));
  }
}

TEST_CASE("cylinder of the bipyramid subdivision is the bipyramid") {
  for (const auto& e : small_corpus()) {
    CAPTURE(e.name);
    auto cylinder = mapping_cylinder(bipyramid_sfs(e.poset, e.rank));
    auto bi = bipyramid(e.poset, e.rank);
    CHECK(isomorphic(cylinder.poset, bi.poset));
  }
}

TEST_CASE("cylinder of the chain collapse is the semisuspension") {
  for (const auto& e : near_eulerian_corpus()) {
    CAPTURE(e.name);
    auto cylinder = mapping_cylinder(to_b1(e.poset, e.rank));
    auto [susp, zhat] = semisuspension(e.poset);
    (void)zhat;
    CHECK(isomorphic(cylinder.poset, susp));
  }
}

TEST_CASE("cyl produces valid triples with the expected distinguished element") {
  auto b1 = boolean_algebra(1);
  JoinTriple t = cyl(identity_sfs(b1.poset, b1.rank));
  CHECK(isomorphic(t.gamma, boolean_algebra(2).poset));
  CHECK(t.gamma.label(t.q) == "Y:{}");

  auto b3 = boolean_algebra(3);
  JoinTriple t3 = cyl(to_b0(b3.poset, b3.rank));
  CHECK(isomorphic(t3.gamma, b3.poset));
  CHECK(t3.q == *t3.gamma.unique_max());

  auto b2 = boolean_algebra(2);
  auto fob = fan_over_boundary(b2.poset, b2.rank);
  auto pyr = pyramid(fob.poset, fob.rank);
  JoinTriple tb1 = cyl(to_b1(pyr.poset, pyr.rank));
  auto pyr_b2 = pyramid(b2.poset, b2.rank);
  CHECK(isomorphic(tb1.gamma, pyr_b2.poset));

  PosetMap not_sfs{b1.poset, b1.rank, b1.poset, b1.rank, {0, 0}};
  CHECK_THROWS_AS(cyl(not_sfs), Error);
}

TEST_CASE("map of the diamond at an atom is the identity of the chain") {
  auto b2 = boolean_algebra(2);
  JoinTriple t{b2.poset, b2.rank, *b2.poset.index_of("{1}")};
  PosetMap m = map(t);
  CHECK(m.source.size() == 2);
  CHECK(m.target.size() == 2);
  CHECK(m.source.label(0) == "{}");
  CHECK(m.source.label(1) == "{2}");
  CHECK(m.target.label(0) == "{1}");
  CHECK(m.target.label(1) == "{1,2}");
  CHECK(m.image == std::vector<int>{0, 1});
  CHECK(is_sfs(m));
}

TEST_CASE("map of a polygon at a vertex is an interval subdivision") {
  for (int m_gon = 3; m_gon <= 8; ++m_gon) {
    CAPTURE(m_gon);
    auto pg = face_lattice_polygon(m_gon);
    JoinTriple t{pg.poset, pg.rank, *pg.poset.index_of("v0")};
    PosetMap m = map(t);
    auto si = subdivided_interval(m_gon - 3);
    CHECK(isomorphic(m.source, si.poset));
    CHECK(isomorphic(m.target, boolean_algebra(2).poset));
    CHECK(sfs_rank(m) == 0);
  }
}

TEST_CASE("map of a bipyramid at an apex is the bipyramid subdivision") {
  auto b3 = boolean_algebra(3);
  auto bi = bipyramid(b3.poset, b3.rank);
  JoinTriple t{bi.poset, bi.rank, *bi.poset.index_of("({},{1})")};
  PosetMap m = map(t);
  PosetMap direct = bipyramid_sfs(b3.poset, b3.rank);
  CHECK(isomorphic(m.source, direct.source));
  CHECK(isomorphic(m.target, direct.target));
  CHECK(sfs_rank(m) == 0);
}

TEST_CASE("map rejects invalid triples") {
  auto b2 = boolean_algebra(2);
  CHECK_THROWS_AS(map(JoinTriple{b2.poset, b2.rank, *b2.poset.unique_min()}), Error);
  auto [susp, zhat] = semisuspension(b2.poset);
  RankFunction sr = natural_rank(susp);
  CHECK_THROWS_AS(map(JoinTriple{susp, sr, *susp.index_of("{1,2}")}), Error);
}

TEST_CASE("round trips are literal on identities") {
  auto b2 = boolean_algebra(2);
  CHECK(roundtrip_cyl_map(identity_sfs(b2.poset, b2.rank)));
}

TEST_CASE("round trips on a spread of maps and triples") {
  for (const auto& e : small_corpus()) {
    CAPTURE(e.name);
    CHECK(roundtrip_cyl_map(identity_sfs(e.poset, e.rank)));
    CHECK(roundtrip_cyl_map(bipyramid_sfs(e.poset, e.rank)));
    CHECK(roundtrip_cyl_map(to_b0(e.poset, e.rank)));
  }
  for (const auto& [name, t] : corpus_triples(small_corpus())) {
    CAPTURE(name);
    CHECK(roundtrip_map_cyl(t));
  }
}

TEST_CASE("cylinder rank and gradedness transfer") {
  for (const auto& e : small_corpus()) {
    CAPTURE(e.name);
    PosetMap m = bipyramid_sfs(e.poset, e.rank);
    JoinTriple t = cyl(m);
    CHECK(rank_of(t.gamma) == rank_of(m.source) + 1);
    bool gx = is_graded(m.source);
    bool gy = is_graded(m.target);
    bool gg = is_graded(t.gamma);
    CHECK(gx == gy);
    CHECK(gy == gg);
    // Height of the distinguished element above the minimum.
    CHECK(t.rank(t.q) - t.rank(*t.gamma.unique_min()) == sfs_rank(m) + 1);
  }
}

TEST_CASE("posets holding a non-minimal join-admissible element are balanced") {
  for (const auto& [name, t] : corpus_triples(small_corpus())) {
    CAPTURE(name);
    CHECK(even_odd_balance(t.gamma, t.rank) == 0);
    CHECK(t.gamma.size() % 2 == 0);
  }
}

TEST_CASE("cover criterion inside the cylinder") {
  std::vector<PosetMap> maps;
  {
    auto b3 = boolean_algebra(3);
    maps.push_back(bipyramid_sfs(b3.poset, b3.rank));
    maps.push_back(to_b0(b3.poset, b3.rank));
    auto pg = face_lattice_polygon(6);
    maps.push_back(map(JoinTriple{pg.poset, pg.rank, *pg.poset.index_of("v0")}));
  }
  for (const auto& m : maps) {
    auto cylinder = mapping_cylinder(m);
    const int nx = m.source.size();
    std::set<std::pair<int, int>> covers(cylinder.poset.covers().begin(),
                                         cylinder.poset.covers().end());
    for (int x = 0; x < nx; ++x)
      for (int y = 0; y < m.target.size(); ++y) {
        bool is_cover = covers.count({x, nx + y}) > 0;
        bool expected = m.image[static_cast<size_t>(x)] == y &&
                        m.source_rank(x) == m.target_rank(y);
        CHECK(is_cover == expected);
      }
  }
}

namespace {

SfsSquare chain_collapse_square(const PosetMap& sigma) {
  SfsSquare sq;
  sq.sigma = sigma;
  sq.phi1 = to_b1(sigma.source, sigma.source_rank);
  sq.phi2 = to_b1(sigma.target, sigma.target_rank);
  sq.sigma_prime = identity_sfs(sq.phi1.target, sq.phi1.target_rank);
  return sq;
}

SfsSquare point_collapse_square(const PosetMap& sigma) {
  // Both completions must be Eulerian.
  SfsSquare sq;
  sq.sigma = sigma;
  auto collapse = [](const Poset& p, const RankFunction& r) {
    return PosetMap{p, r, boolean_algebra(0).poset,
                    RankFunction{{r(*p.unique_min()) + rank_of(p)}},
                    std::vector<int>(static_cast<size_t>(p.size()), 0)};
  };
  sq.phi1 = collapse(sigma.source, sigma.source_rank);
  sq.phi2 = collapse(sigma.target, sigma.target_rank);
  sq.sigma_prime = identity_sfs(sq.phi1.target, sq.phi1.target_rank);
  return sq;
}

}  // namespace

TEST_CASE("gluing a square of identities gives the identity of the cylinder") {
  auto b2 = boolean_algebra(2);
  PosetMap sigma = bipyramid_sfs(b2.poset, b2.rank);
  SfsSquare sq{identity_sfs(sigma.source, sigma.source_rank), sigma, sigma,
               identity_sfs(sigma.target, sigma.target_rank)};
  PosetMap glued = cyl_square(sq);
  CHECK(glued.source == glued.target);
  for (int i = 0; i < glued.source.size(); ++i) CHECK(glued.image[static_cast<size_t>(i)] == i);
}

TEST_CASE("chain collapse squares glue to maps onto the diamond") {
  auto b2 = boolean_algebra(2);
  PosetMap sigma = bipyramid_sfs(b2.poset, b2.rank);
  SfsSquare sq = chain_collapse_square(sigma);
  PosetMap glued = cyl_square(sq);
  CHECK(isomorphic(glued.target, boolean_algebra(2).poset));
  CHECK(is_sfs(glued));
  SfsSquare back = map_square(glued, cyl(sq.sigma), cyl(sq.sigma_prime));
  CHECK(back == sq);
}

TEST_CASE("point collapse squares glue to maps onto the chain") {
  auto pg = face_lattice_polygon(5);
  JoinTriple t{pg.poset, pg.rank, *pg.poset.unique_max()};
  PosetMap sigma = map(t);  // boundary onto a point
  SfsSquare sq = point_collapse_square(sigma);
  PosetMap glued = cyl_square(sq);
  CHECK(isomorphic(glued.target, boolean_algebra(1).poset));
  SfsSquare back = map_square(glued, cyl(sq.sigma), cyl(sq.sigma_prime));
  CHECK(back == sq);
}

TEST_CASE("map_square rejects maps that break the distinguished elements") {
  auto b2 = boolean_algebra(2);
  PosetMap sigma = bipyramid_sfs(b2.poset, b2.rank);
  SfsSquare sq = chain_collapse_square(sigma);
  PosetMap glued = cyl_square(sq);
  JoinTriple t = cyl(sq.sigma);
  JoinTriple tp = cyl(sq.sigma_prime);
  JoinTriple wrong = tp;
  wrong.q = *tp.gamma.unique_max();
  CHECK_THROWS_AS(map_square(glued, t, wrong), Error);
}

TEST_CASE("involution is an involution and preserves the four-way cylinder") {
  auto b2 = boolean_algebra(2);
  std::vector<SfsSquare> squares;
  squares.push_back(chain_collapse_square(bipyramid_sfs(b2.poset, b2.rank)));
  {
    auto pg = face_lattice_polygon(4);
    JoinTriple t{pg.poset, pg.rank, *pg.poset.unique_max()};
    squares.push_back(point_collapse_square(map(t)));
  }
  {
    auto b1 = boolean_algebra(1);
    PosetMap bi = bipyramid_sfs(b2.poset, b2.rank);
    PosetMap other = identity_sfs(b1.poset, b1.rank);
    // Product square: the two factor maps act one at a time.
    SfsSquare sq;
    sq.sigma = product_sfs(bi, identity_sfs(other.source, other.source_rank));
    sq.phi1 = product_sfs(identity_sfs(bi.source, bi.source_rank), other);
    sq.sigma_prime = product_sfs(bi, identity_sfs(other.target, other.target_rank));
    sq.phi2 = product_sfs(identity_sfs(bi.target, bi.target_rank), other);
    squares.push_back(sq);
  }
  for (const auto& sq : squares) {
    SfsSquare twice = involution(involution(sq));
    CHECK(twice == sq);
    auto direct = square_cylinder_by_clauses(sq);
    PosetMap glued = cyl_square(sq);
    auto nested = mapping_cylinder(glued);
    CHECK(isomorphic(nested.poset, direct.poset));
    PosetMap glued_inv = cyl_square(involution(sq));
    auto nested_inv = mapping_cylinder(glued_inv);
    CHECK(isomorphic(nested_inv.poset, direct.poset));
  }
}

TEST_CASE("product squares have products as cylinders") {
  auto b2 = boolean_algebra(2);
  auto b1 = boolean_algebra(1);
  PosetMap bi = bipyramid_sfs(b2.poset, b2.rank);
  PosetMap other = identity_sfs(b1.poset, b1.rank);
  SfsSquare sq;
  sq.sigma = product_sfs(bi, identity_sfs(other.source, other.source_rank));
  sq.phi1 = product_sfs(identity_sfs(bi.source, bi.source_rank), other);
  sq.sigma_prime = product_sfs(bi, identity_sfs(other.target, other.target_rank));
  sq.phi2 = product_sfs(identity_sfs(bi.target, bi.target_rank), other);
  PosetMap glued = cyl_square(sq);
  JoinTriple gamma = cyl(bi);
  JoinTriple gamma_prime = cyl(other);
  auto prod = direct_product(gamma.gamma, gamma.rank, gamma_prime.gamma, gamma_prime.rank);
  CHECK(isomorphic(mapping_cylinder(glued).poset, prod.poset));
}

TEST_CASE("ideal-variant round trips reduce to the element case") {
  auto b2 = boolean_algebra(2);
  JoinTriple t{b2.poset, b2.rank, *b2.poset.index_of("{1}")};
  PosetMap via_q = map(t);
  auto up = ideal(b2.poset, {t.q}, IdealDirection::Upper);
  PosetMap via_ideal = map_ideal(b2.poset, b2.rank, up);
  CHECK(via_q == via_ideal);

  IdealTriple round = cyl_ideal(via_ideal);
  CHECK(round.ideal.size() == up.size());
  PosetMap again = map_ideal(round.gamma, round.rank, round.ideal);
  CHECK(again.source.size() == via_ideal.source.size());
  CHECK(again.image == via_ideal.image);
}

TEST_CASE("ideal variant handles locally Eulerian posets without a minimum") {
  // Disjoint union of two diamonds: locally Eulerian, two minima.
  Poset gamma = Poset::from_covers(
      {"A", "A1", "A2", "A12", "B", "B1", "B2", "B12"},
      {{"A", "A1"}, {"A", "A2"}, {"A1", "A12"}, {"A2", "A12"},
       {"B", "B1"}, {"B", "B2"}, {"B1", "B12"}, {"B2", "B12"}});
  RankFunction r{{0, 1, 1, 2, 0, 1, 1, 2}};
  REQUIRE(is_locally_eulerian(gamma, r));
  REQUIRE(!gamma.unique_min());
  // Up-sets of one atom per component form a join-admissible ideal.
  std::vector<int> gens{*gamma.index_of("A1"), *gamma.index_of("B1")};
  auto up = ideal(gamma, gens, IdealDirection::Upper);
  REQUIRE(is_join_admissible_ideal(gamma, up));
  PosetMap m = map_ideal(gamma, r, up);
  CHECK(m.source.size() == 4);
  CHECK(m.target.size() == 4);
  IdealTriple back = cyl_ideal(m);
  CHECK(back.gamma.size() == 8);
  CHECK(isomorphic(back.gamma, gamma));

  // The ideal may not contain a minimal element.
  auto bad = ideal(gamma, {*gamma.index_of("A1"), *gamma.index_of("B")}, IdealDirection::Upper);
  CHECK_THROWS_AS(map_ideal(gamma, r, bad), Error);
}

TEST_CASE("cyl_ideal on a subdivision tags the whole target as the ideal") {
  auto b2 = boolean_algebra(2);
  PosetMap bi = bipyramid_sfs(b2.poset, b2.rank);
  IdealTriple t = cyl_ideal(bi);
  CHECK(t.ideal.size() == static_cast<size_t>(bi.target.size()));
  for (int e : t.ideal) CHECK(t.gamma.label(e).rfind("Y:", 0) == 0);
}
