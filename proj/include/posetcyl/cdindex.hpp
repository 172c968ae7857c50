#pragma once

#include "posetcyl/cylinder.hpp"
#include "posetcyl/ncpoly.hpp"

#include <set>

namespace posetcyl {

/// Number of maximal chains of the rank-selected subposet of an Eulerian
/// poset with natural rank. S must be a subset of {1,...,rank-1}.
long long flag_count(const Poset& p, const RankFunction& r, const std::set<int>& selected);

/// Flag generating polynomial over {a,b}.
NCPoly ab_polynomial(const Poset& p, const RankFunction& r);

/// The unique {c,d} polynomial whose expansion equals the flag polynomial.
NCPoly cd_index(const Poset& p, const RankFunction& r);

/// For a near-Eulerian poset: the {c,d} index of its completion minus that
/// of the completed boundary times c. Homogeneous of degree rank(p).
NCPoly local_cd_index(const Poset& p, const RankFunction& r);

/// Flag polynomial of a near-Eulerian poset relative to its completion:
/// the chains avoiding the adjoined element.
NCPoly ab_polynomial_relative(const Poset& p, const RankFunction& r);

/// Chain-by-chain evaluation of the interval sum that the derivation D of a
/// {c,d} index equals (independent oracle).
NCPoly d_oracle_interval_sum(const Poset& p, const RankFunction& r);

/// Pieces of the cylinder decomposition of a {c,d} index, exposed so that
/// nonnegativity of each summand can be inspected.
struct CdFormulaParts {
  NCPoly local_part;                 // local index of the complement
  std::vector<NCPoly> summands;      // each bracketed summand (before halving)
  NCPoly rhs;                        // full right-hand side
};

/// Evaluates the decomposition of the {c,d} index of an Eulerian poset of
/// positive rank through a join-admissible element q (not the minimum or
/// maximum). The result is checked to have integer coefficients.
CdFormulaParts cd_formula_parts(const JoinTriple& t);
NCPoly cd_formula_rhs(const JoinTriple& t);

}  // namespace posetcyl
