#pragma once

#include "posetcyl/subdivision.hpp"

namespace posetcyl {

/// A lower Eulerian poset with a distinguished join-admissible element.
struct JoinTriple {
  Poset gamma;
  RankFunction rank;
  int q = -1;
};

/// A commutative square of strong formal subdivisions:
///
///        sigma
///     X ------> Y
///     |         |
///  phi1         phi2
///     v         v
///     X' -----> Y'
///       sigma'
struct SfsSquare {
  PosetMap phi1;         // X  -> X'
  PosetMap sigma;        // X  -> Y
  PosetMap sigma_prime;  // X' -> Y'
  PosetMap phi2;         // Y  -> Y'

  bool operator==(const SfsSquare& other) const = default;
};

/// Throws unless the four maps are strong formal subdivisions with matching
/// endpoints forming a commuting square.
void validate_square(const SfsSquare& sq);

/// The poset on the tagged disjoint union of source and target, ordering a
/// source element below a target element whenever its image is. Elements are
/// labeled "X:..." and "Y:..."; target ranks are raised by one. Requires m
/// order-preserving.
RankedPoset mapping_cylinder(const PosetMap& m);

/// Cylinder of a strong formal subdivision together with the tagged copy of
/// the target minimum. The returned triple is checked to be valid.
JoinTriple cyl(const PosetMap& m);

/// The strong formal subdivision from the complement of the up-set of q onto
/// that up-set, sending x to x v q. The returned map is checked to be a
/// strong formal subdivision.
PosetMap map(const JoinTriple& t);

/// map(cyl(m)) equals m after stripping the cylinder tags.
bool roundtrip_cyl_map(const PosetMap& m);

/// cyl(map(t)) equals t after relabeling elements by their block membership.
bool roundtrip_map_cyl(const JoinTriple& t);

/// Glues a square into a map between the cylinders of its horizontal edges.
/// The result is a strong formal subdivision carrying distinguished element
/// to distinguished element and commuting with joins (checked).
PosetMap cyl_square(const SfsSquare& sq);

/// Splits a join-compatible strong formal subdivision between the posets of
/// two triples back into a commutative square. Inverse of cyl_square.
SfsSquare map_square(const PosetMap& phi, const JoinTriple& t, const JoinTriple& t_prime);

/// Reflects the square through its main diagonal, swapping the roles of the
/// horizontal and vertical edges.
SfsSquare involution(const SfsSquare& sq);

/// A locally Eulerian poset with a distinguished join-admissible upper order
/// ideal containing no minimal element.
struct IdealTriple {
  Poset gamma;
  RankFunction rank;
  std::vector<int> ideal;
};

/// Order-ideal version of cyl for maps between locally Eulerian posets; the
/// distinguished ideal is the tagged copy of the whole target.
IdealTriple cyl_ideal(const PosetMap& m);

/// Order-ideal version of map: complement -> ideal, x -> x v I.
PosetMap map_ideal(const Poset& gamma, const RankFunction& rank, const std::vector<int>& ideal_set);

/// Direct evaluation of the four-block order relation on the cylinder of a
/// glued square (test oracle for Cyl(cyl_square(sq))).
RankedPoset square_cylinder_by_clauses(const SfsSquare& sq);

}  // namespace posetcyl
