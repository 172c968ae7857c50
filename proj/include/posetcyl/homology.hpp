#pragma once

#include "posetcyl/ncpoly.hpp"
#include "posetcyl/poset.hpp"

#include <set>
#include <vector>

namespace posetcyl {

/// Finite abstract simplicial complex; faces are sorted vertex-index lists,
/// closed under subsets and always including the empty face.
struct SimplicialComplex {
  std::vector<std::string> vertex_labels;
  std::set<std::vector<int>> faces;

  int max_dimension() const;  // -1 when only the empty face is present
};

/// Vertices are the poset elements, faces are the chains.
SimplicialComplex order_complex(const Poset& p);

/// Order complex of the open interval (z, z'); may have no vertices.
SimplicialComplex open_interval_complex(const Poset& p, int z, int zp);

/// Ranks of reduced rational homology, indexed from dimension -1:
/// result[i] is the rank in dimension i-1.
std::vector<long long> reduced_betti(const SimplicialComplex& complex);

/// Every open interval of length >= 2 has the reduced rational homology of
/// a sphere of the matching dimension. Requires Eulerian of positive rank.
bool is_gorenstein_star(const Poset& p, const RankFunction& r);

/// The semisuspension satisfies the sphere condition. Requires near-Eulerian.
bool is_near_gorenstein_star(const Poset& p, const RankFunction& r);

/// Every interval of positive rank satisfies the sphere condition. Requires
/// a unique minimum.
bool is_lower_gorenstein_star(const Poset& p, const RankFunction& r);

/// First interval violating the sphere condition, as a printable witness.
std::optional<std::string> gorenstein_witness(const Poset& p, const RankFunction& r);

}  // namespace posetcyl
