#include "posetcyl/homology.hpp"

#include <algorithm>
#include <map>

namespace posetcyl {

int SimplicialComplex::max_dimension() const {
  int dim = -1;
  for (const auto& f : faces) dim = std::max(dim, static_cast<int>(f.size()) - 1);
  return dim;
}

namespace {

// Enumerates all chains of the induced subposet on `elements`.
void collect_chains(const Poset& p, const std::vector<int>& elements, std::vector<int>& current,
                    size_t start, std::set<std::vector<int>>& out) {
  out.insert(current);
  for (size_t i = start; i < elements.size(); ++i) {
    if (!current.empty() && !p.less(current.back(), elements[i])) continue;
    current.push_back(elements[i]);
    collect_chains(p, elements, current, i + 1, out);
    current.pop_back();
  }
}

SimplicialComplex chains_complex(const Poset& p, const std::vector<int>& elements) {
  SimplicialComplex out;
  std::vector<int> position(static_cast<size_t>(p.size()), -1);
  for (size_t i = 0; i < elements.size(); ++i) {
    out.vertex_labels.push_back(p.label(elements[i]));
    position[static_cast<size_t>(elements[i])] = static_cast<int>(i);
  }
  std::set<std::vector<int>> raw;
  std::vector<int> current;
  collect_chains(p, elements, current, 0, raw);
  for (const auto& chain : raw) {
    std::vector<int> face;
    face.reserve(chain.size());
    for (int e : chain) face.push_back(position[static_cast<size_t>(e)]);
    std::sort(face.begin(), face.end());
    out.faces.insert(std::move(face));
  }
  return out;
}

// Rank over the rationals of the boundary matrix from dimension d to d-1.
long long boundary_rank(const std::map<std::vector<int>, int>& lower_index,
                        const std::vector<std::vector<int>>& upper_faces) {
  if (upper_faces.empty() || lower_index.empty()) return 0;
  const size_t rows = lower_index.size();
  std::vector<std::vector<Rational>> mat(upper_faces.size(),
                                         std::vector<Rational>(rows, Rational(0)));
  for (size_t col = 0; col < upper_faces.size(); ++col) {
    const auto& face = upper_faces[col];
    for (size_t drop = 0; drop < face.size(); ++drop) {
      std::vector<int> sub;
      sub.reserve(face.size() - 1);
      for (size_t i = 0; i < face.size(); ++i)
        if (i != drop) sub.push_back(face[i]);
      int sign = drop % 2 == 0 ? 1 : -1;
      mat[col][static_cast<size_t>(lower_index.at(sub))] += Rational(sign);
    }
  }
  // Column-style elimination over the transposed layout.
  long long rank = 0;
  size_t pivot_col = 0;
  for (size_t row = 0; row < rows && pivot_col < mat.size(); ++row) {
    size_t sel = mat.size();
    for (size_t c = pivot_col; c < mat.size(); ++c)
      if (mat[c][row] != Rational(0)) {
        sel = c;
        break;
      }
    if (sel == mat.size()) continue;
    std::swap(mat[sel], mat[pivot_col]);
    const Rational pivot = mat[pivot_col][row];
    for (size_t c = pivot_col + 1; c < mat.size(); ++c) {
      if (mat[c][row] == Rational(0)) continue;
      const Rational factor = mat[c][row] / pivot;
      for (size_t r2 = row; r2 < rows; ++r2) mat[c][r2] -= factor * mat[pivot_col][r2];
    }
    ++pivot_col;
    ++rank;
  }
  return rank;
}

}  // namespace

SimplicialComplex order_complex(const Poset& p) {
  std::vector<int> all;
  for (int i = 0; i < p.size(); ++i) all.push_back(i);
  return chains_complex(p, all);
}

SimplicialComplex open_interval_complex(const Poset& p, int z, int zp) {
  if (!p.less(z, zp)) throw Error("open_interval_complex: endpoints not strictly comparable");
  std::vector<int> elements;
  for (int i = 0; i < p.size(); ++i)
    if (p.less(z, i) && p.less(i, zp)) elements.push_back(i);
  return chains_complex(p, elements);
}

std::vector<long long> reduced_betti(const SimplicialComplex& complex) {
  if (!complex.faces.count(std::vector<int>{}))
    throw Error("reduced_betti: complex is missing the empty face");
  const int maxdim = complex.max_dimension();
  // faces_by_dim[k] holds the k-1 dimensional faces (k vertices).
  std::vector<std::vector<std::vector<int>>> faces_by_dim(static_cast<size_t>(maxdim + 2));
  for (const auto& f : complex.faces) faces_by_dim[f.size()].push_back(f);
  std::vector<std::map<std::vector<int>, int>> index_by_dim(faces_by_dim.size());
  for (size_t k = 0; k < faces_by_dim.size(); ++k) {
    std::sort(faces_by_dim[k].begin(), faces_by_dim[k].end());
    for (size_t i = 0; i < faces_by_dim[k].size(); ++i)
      index_by_dim[k][faces_by_dim[k][i]] = static_cast<int>(i);
  }
  // ranks[k] is the rank of the boundary map from k-vertex faces down.
  std::vector<long long> ranks(faces_by_dim.size() + 1, 0);
  for (size_t k = 1; k < faces_by_dim.size(); ++k)
    ranks[k] = boundary_rank(index_by_dim[k - 1], faces_by_dim[k]);
  std::vector<long long> betti;
  for (size_t k = 0; k < faces_by_dim.size(); ++k) {
    long long cycles = static_cast<long long>(faces_by_dim[k].size()) - ranks[k];
    long long boundaries = k + 1 < ranks.size() ? ranks[k + 1] : 0;
    betti.push_back(cycles - boundaries);
  }
  return betti;
}

namespace {

bool interval_is_sphere(const Poset& p, const RankFunction& r, int x, int xp) {
  const int length = r(xp) - r(x);
  auto betti = reduced_betti(open_interval_complex(p, x, xp));
  for (size_t i = 0; i < betti.size(); ++i) {
    long long expected = static_cast<int>(i) - 1 == length - 2 ? 1 : 0;
    if (betti[i] != expected) return false;
  }
  // Dimensions above the largest face are zero; the sphere dimension must
  // have been reachable.
  return length - 2 + 1 < static_cast<int>(betti.size());
}

std::optional<std::string> sphere_condition_witness(const Poset& p, const RankFunction& r) {
  for (int x = 0; x < p.size(); ++x)
    for (int xp = 0; xp < p.size(); ++xp) {
      if (!p.less(x, xp) || r(xp) - r(x) < 2) continue;
      if (!interval_is_sphere(p, r, x, xp))
        return "open interval (" + p.label(x) + "," + p.label(xp) +
               ") is not a rational homology sphere";
    }
  return std::nullopt;
}

}  // namespace

bool is_gorenstein_star(const Poset& p, const RankFunction& r) {
  if (!is_valid_rank(p, r)) throw Error("is_gorenstein_star: invalid rank function");
  if (!is_eulerian(p, r) || rank_of(p) < 1)
    throw Error("is_gorenstein_star: poset is not Eulerian of positive rank");
  return !sphere_condition_witness(p, r).has_value();
}

bool is_near_gorenstein_star(const Poset& p, const RankFunction& r) {
  if (!is_valid_rank(p, r)) throw Error("is_near_gorenstein_star: invalid rank function");
  if (!is_near_eulerian(p, r)) throw Error("is_near_gorenstein_star: poset is not near-Eulerian");
  auto [completion, zhat] = semisuspension(p);
  (void)zhat;
  return is_gorenstein_star(completion, natural_rank(completion));
}

bool is_lower_gorenstein_star(const Poset& p, const RankFunction& r) {
  if (!is_valid_rank(p, r)) throw Error("is_lower_gorenstein_star: invalid rank function");
  if (!p.unique_min()) throw Error("is_lower_gorenstein_star: no unique minimum");
  if (!is_locally_eulerian(p, r)) return false;
  return !sphere_condition_witness(p, r).has_value();
}

std::optional<std::string> gorenstein_witness(const Poset& p, const RankFunction& r) {
  if (!is_valid_rank(p, r)) throw Error("gorenstein_witness: invalid rank function");
  return sphere_condition_witness(p, r);
}

}  // namespace posetcyl
