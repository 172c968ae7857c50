#pragma once

#include "posetcyl/poset.hpp"

namespace posetcyl {

struct RankedPoset {
  Poset poset;
  RankFunction rank;
};

/// Subset lattice on n elements, ranked by cardinality.
RankedPoset boolean_algebra(int n);

/// Componentwise order; ranks add. Labels become "(l,l')".
RankedPoset direct_product(const Poset& p, const RankFunction& rp, const Poset& q,
                           const RankFunction& rq);

RankedPoset pyramid(const Poset& p, const RankFunction& rp);

/// The Eulerian poset whose boundary is the product of the two boundaries.
/// Both inputs must be Eulerian of positive rank.
RankedPoset dual_diamond_product(const Poset& p, const RankFunction& rp, const Poset& q,
                                 const RankFunction& rq);

/// The Eulerian poset whose minimum-deleted part is the product of the two
/// minimum-deleted parts. Both inputs must be Eulerian of positive rank.
RankedPoset diamond_product(const Poset& p, const RankFunction& rp, const Poset& q,
                            const RankFunction& rq);

RankedPoset prism(const Poset& p, const RankFunction& rp);
RankedPoset bipyramid(const Poset& p, const RankFunction& rp);

/// Glues the boundary of an Eulerian poset of positive rank below a lower
/// Eulerian poset with its minimum deleted. Returns the natural rank.
/// Labels are prefixed "L:" and "R:".
RankedPoset star_product(const Poset& p, const RankFunction& rp, const Poset& q,
                         const RankFunction& rq);

/// Rank-3 Eulerian lattice of an m-gon (m >= 3).
RankedPoset face_lattice_polygon(int m);

/// d-fold diamond power of the interval lattice (d >= 1).
RankedPoset face_lattice_cube(int d);

/// d-fold dual diamond power of the interval lattice (d >= 1).
RankedPoset face_lattice_crosspolytope(int d);

/// Face poset of the unit interval cut at s interior points (s >= 0):
/// the empty face, s+2 vertices, s+1 edges.
RankedPoset subdivided_interval(int s);

/// Face poset of the complete fan over the boundary of an Eulerian poset of
/// positive rank: the boundary with the restricted rank.
RankedPoset fan_over_boundary(const Poset& p, const RankFunction& rp);

}  // namespace posetcyl
