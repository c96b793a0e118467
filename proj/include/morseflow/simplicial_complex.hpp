#pragma once

// Finite abstract simplicial complexes with a fixed vertex order, their
// integer boundary matrices and simplicial homology via Smith normal form.
// Also triangulations of spheres, products and connected sums, used as an
// independent check on the closed-form homology rules.

#include "morseflow/errors.hpp"
#include "morseflow/graded_group.hpp"
#include "morseflow/integer.hpp"
#include "morseflow/integer_matrix.hpp"
#include "morseflow/manifold_expr.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace morseflow {

/// A simplex as strictly increasing vertex positions.
using Simplex = std::vector<std::size_t>;

class SimplicialComplex {
public:
  SimplicialComplex() = default;

  /// Vertex order is the order of `vertices`. Facets are reduced to the
  /// maximal ones and sorted.
  SimplicialComplex(std::vector<std::string> vertices,
                    const std::vector<std::vector<std::string>>& facets)
      : vertices_(std::move(vertices)) {
    std::unordered_map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (!pos.emplace(vertices_[i], i).second)
        throw ComplexError("duplicate vertex label '" + vertices_[i] + "'");
    std::vector<Simplex> fs;
    fs.reserve(facets.size());
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (facets[f].empty()) throw ComplexError("facet " + std::to_string(f) + " is empty");
      Simplex s;
      for (const auto& label : facets[f]) {
        auto it = pos.find(label);
        if (it == pos.end())
          throw ComplexError("facet " + std::to_string(f) + " uses unknown vertex '" + label + "'");
        s.push_back(it->second);
      }
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw ComplexError("facet " + std::to_string(f) + " repeats a vertex");
      fs.push_back(std::move(s));
    }
    init(std::move(fs));
  }

  SimplicialComplex(std::vector<std::string> vertices, std::vector<Simplex> facets)
      : vertices_(std::move(vertices)) {
    for (auto& f : facets) {
      std::sort(f.begin(), f.end());
      if (f.empty() || std::adjacent_find(f.begin(), f.end()) != f.end() ||
          f.back() >= vertices_.size())
        throw ComplexError("invalid facet");
    }
    init(std::move(facets));
  }

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Simplex>& facets() const noexcept { return facets_; }

  /// -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(simplices_.size()) - 1; }

  /// Lexicographically sorted i-simplices.
  const std::vector<Simplex>& simplices(int i) const {
    static const std::vector<Simplex> none;
    if (i < 0 || i > dimension()) return none;
    return simplices_[static_cast<std::size_t>(i)];
  }

  std::size_t count(int i) const { return simplices(i).size(); }

  std::size_t index_of(const Simplex& s) const {
    const auto& level = simplices(static_cast<int>(s.size()) - 1);
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s) throw ComplexError("simplex not in complex");
    return static_cast<std::size_t>(it - level.begin());
  }

  bool contains(const Simplex& s) const {
    const auto& level = simplices(static_cast<int>(s.size()) - 1);
    return std::binary_search(level.begin(), level.end(), s);
  }

  std::vector<std::string> labels(const Simplex& s) const {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (auto v : s) out.push_back(vertices_[v]);
    return out;
  }

  /// Euler characteristic from face counts.
  Integer euler_characteristic() const {
    Integer chi = 0;
    for (int i = 0; i <= dimension(); ++i) chi += (i % 2 == 0 ? 1 : -1) * Integer(count(i));
    return chi;
  }

private:
  void init(std::vector<Simplex> facets) {
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    std::vector<std::set<Simplex>> levels;
    for (const auto& f : facets) {
      if (levels.size() < f.size()) levels.resize(f.size());
      levels[f.size() - 1].insert(f);
    }
    for (std::size_t d = levels.size(); d-- > 1;)
      for (const auto& s : levels[d])
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
          Simplex face;
          for (std::size_t k = 0; k < s.size(); ++k)
            if (k != skip) face.push_back(s[k]);
          levels[d - 1].insert(std::move(face));
        }
    for (const auto& f : facets)
      if (!is_face_of_larger(f, levels)) facets_.push_back(f);
    simplices_.clear();
    for (auto& level : levels) simplices_.emplace_back(level.begin(), level.end());
  }

  static bool is_face_of_larger(const Simplex& f, const std::vector<std::set<Simplex>>& levels) {
    if (f.size() >= levels.size()) return false;
    return levels[f.size()].end() !=
           std::find_if(levels[f.size()].begin(), levels[f.size()].end(), [&](const Simplex& s) {
             return std::includes(s.begin(), s.end(), f.begin(), f.end());
           });
  }

  std::vector<std::string> vertices_;
  std::vector<Simplex> facets_;
  std::vector<std::vector<Simplex>> simplices_;
};

/// Matrix of the boundary map C_i -> C_{i-1}: rows are (i-1)-simplices,
/// columns i-simplices, both in lexicographic order; removing the j-th
/// vertex contributes (-1)^j.
inline IntegerMatrix boundary_matrix(const SimplicialComplex& k, int i) {
  if (i < 1 || i > k.dimension())
    throw DomainError("boundary degree " + std::to_string(i) + " outside 1.." +
                      std::to_string(k.dimension()));
  const auto& cols = k.simplices(i);
  IntegerMatrix m(k.count(i - 1), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto& s = cols[c];
    for (std::size_t j = 0; j < s.size(); ++j) {
      Simplex face;
      face.reserve(s.size() - 1);
      for (std::size_t x = 0; x < s.size(); ++x)
        if (x != j) face.push_back(s[x]);
      m(k.index_of(face), c) = (j % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

inline GradedGroup simplicial_homology(const SimplicialComplex& k) {
  const int top = k.dimension();
  // factors[i] = invariant factors of the boundary map out of degree i.
  std::vector<std::vector<Integer>> factors(static_cast<std::size_t>(std::max(top, 0) + 2));
  for (int i = 1; i <= top; ++i)
    factors[static_cast<std::size_t>(i)] = smith_invariant_factors(boundary_matrix(k, i));
  GradedGroup h;
  for (int i = 0; i <= top; ++i) {
    const auto& out = factors[static_cast<std::size_t>(i)];
    const auto& in = factors[static_cast<std::size_t>(i + 1)];
    h.set_rank(i, Integer(k.count(i)) - Integer(out.size()) - Integer(in.size()));
    std::vector<Integer> torsion;
    for (const auto& d : in)
      if (d > 1) torsion.push_back(d);
    h.set_torsion(i, std::move(torsion));
  }
  return h;
}

/// Boundary of the standard (k+1)-simplex.
inline SimplicialComplex boundary_sphere_complex(int k) {
  if (k < 1) throw DomainError("sphere complex requires k >= 1, got " + std::to_string(k));
  const auto nv = static_cast<std::size_t>(k) + 2;
  std::vector<std::string> vertices;
  for (std::size_t v = 0; v < nv; ++v) vertices.push_back(std::to_string(v));
  std::vector<Simplex> facets;
  for (std::size_t skip = 0; skip < nv; ++skip) {
    Simplex f;
    for (std::size_t v = 0; v < nv; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex(std::move(vertices), std::move(facets));
}

inline SimplicialComplex circle_complex(int m) {
  if (m < 3) throw DomainError("circle complex requires m >= 3, got " + std::to_string(m));
  std::vector<std::string> vertices;
  std::vector<Simplex> facets;
  const auto mm = static_cast<std::size_t>(m);
  for (std::size_t v = 0; v < mm; ++v) {
    vertices.push_back(std::to_string(v));
    facets.push_back({v, (v + 1) % mm});
  }
  return SimplicialComplex(std::move(vertices), std::move(facets));
}

inline SimplicialComplex point_complex() {
  return SimplicialComplex(std::vector<std::string>{"0"}, std::vector<Simplex>{{0}});
}

/// Staircase triangulation of |K| x |L|. Vertices are pairs ordered
/// lexicographically by (K position, L position); each facet pair sigma x tau
/// contributes one simplex per monotone lattice path through sigma x tau.
inline SimplicialComplex product_complex(const SimplicialComplex& k, const SimplicialComplex& l) {
  const std::size_t nl = l.vertices().size();
  std::vector<std::string> vertices;
  vertices.reserve(k.vertices().size() * nl);
  for (const auto& a : k.vertices())
    for (const auto& b : l.vertices()) vertices.push_back("(" + a + "," + b + ")");
  std::vector<Simplex> facets;
  for (const auto& sigma : k.facets())
    for (const auto& tau : l.facets()) {
      const std::size_t p = sigma.size() - 1;
      const std::size_t q = tau.size() - 1;
      // steps[s] true means "advance in sigma" at step s
      std::vector<bool> steps(p + q, false);
      std::fill(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(p), true);
      std::sort(steps.begin(), steps.end());
      do {
        Simplex path;
        std::size_t i = 0, j = 0;
        path.push_back(sigma[0] * nl + tau[0]);
        for (bool advance_sigma : steps) {
          if (advance_sigma)
            ++i;
          else
            ++j;
          path.push_back(sigma[i] * nl + tau[j]);
        }
        facets.push_back(std::move(path));
      } while (std::next_permutation(steps.begin(), steps.end()));
    }
  return SimplicialComplex(std::move(vertices), std::move(facets));
}

/// Removes the lexicographically first n-facet of each complex and glues the
/// two boundary spheres along the order-preserving vertex bijection. Vertex
/// labels are prefixed "a." and "b." to keep the two sides apart.
inline SimplicialComplex connected_sum_complex(const SimplicialComplex& k,
                                               const SimplicialComplex& l, int n) {
  if (k.dimension() != n || l.dimension() != n)
    throw DimensionError("connected sum of complexes of dimensions " +
                         std::to_string(k.dimension()) + " and " + std::to_string(l.dimension()) +
                         " in dimension " + std::to_string(n));
  if (n < 1) throw DomainError("connected sum requires n >= 1");
  auto removable = [n](const SimplicialComplex& c, const char* side) {
    const auto it = std::find_if(c.facets().begin(), c.facets().end(),
                                 [n](const Simplex& f) { return f.size() == static_cast<std::size_t>(n) + 1; });
    if (it == c.facets().end())
      throw ComplexError(std::string(side) + " complex has no " + std::to_string(n) + "-facet");
    // Each codimension-one face must lie in exactly one other facet, so
    // removing the facet leaves its boundary as an embedded sphere.
    for (std::size_t skip = 0; skip < it->size(); ++skip) {
      Simplex face;
      for (std::size_t x = 0; x < it->size(); ++x)
        if (x != skip) face.push_back((*it)[x]);
      const auto cofaces = std::count_if(c.facets().begin(), c.facets().end(), [&](const Simplex& f) {
        return std::includes(f.begin(), f.end(), face.begin(), face.end());
      });
      if (cofaces != 2)
        throw ComplexError(std::string(side) +
                           " complex: removed facet's boundary is not a standard sphere boundary "
                           "(a codimension-one face lies in " + std::to_string(cofaces) + " facets)");
    }
    return *it;
  };
  const Simplex cut_k = removable(k, "left");
  const Simplex cut_l = removable(l, "right");

  std::vector<std::string> vertices;
  for (const auto& v : k.vertices()) vertices.push_back("a." + v);
  std::vector<std::size_t> l_map(l.vertices().size());
  for (std::size_t v = 0; v < l.vertices().size(); ++v) {
    auto it = std::find(cut_l.begin(), cut_l.end(), v);
    if (it != cut_l.end()) {
      l_map[v] = cut_k[static_cast<std::size_t>(it - cut_l.begin())];
    } else {
      l_map[v] = vertices.size();
      vertices.push_back("b." + l.vertices()[v]);
    }
  }
  std::vector<Simplex> facets;
  for (const auto& f : k.facets())
    if (f != cut_k) facets.push_back(f);
  for (const auto& f : l.facets()) {
    if (f == cut_l) continue;
    Simplex g;
    for (auto v : f) g.push_back(l_map[v]);
    facets.push_back(std::move(g));
  }
  return SimplicialComplex(std::move(vertices), std::move(facets));
}

/// Predicted number of top simplices of triangulate(expr), without building it.
inline Integer triangulation_size(const ManifoldExpr& expr) {
  switch (expr.kind()) {
  case ManifoldExpr::Kind::Sphere:
    return expr.sphere_dimension() == 1 ? Integer(3) : Integer(expr.sphere_dimension() + 2);
  case ManifoldExpr::Kind::Product: {
    const int p = expr.left().dimension();
    const int q = expr.right().dimension();
    Integer paths = 1;
    for (int i = 1; i <= q; ++i) paths = paths * (p + i) / i;
    return triangulation_size(expr.left()) * triangulation_size(expr.right()) * paths;
  }
  case ManifoldExpr::Kind::ConnectedSum: {
    Integer total = 0;
    for (const auto& s : expr.summands()) total += triangulation_size(s);
    return total - 2 * Integer(expr.summands().size() - 1);
  }
  }
  return 0;
}

inline constexpr int kOracleMaxDimension = 6;
inline constexpr int kOracleMaxTopSimplices = 600;

/// Expressions the oracle will triangulate within a few seconds. Covers every
/// sphere S^k (k <= 6), S^k x S^1 (k <= 5), S^n_g for n <= 4, g <= 6, and
/// S^3 x S^3.
inline bool oracle_constructible(const ManifoldExpr& expr) {
  return expr.dimension() <= kOracleMaxDimension &&
         triangulation_size(expr) <= kOracleMaxTopSimplices;
}

/// Triangulates a manifold expression from the constructors above. Spheres
/// of dimension 1 use the triangle, higher spheres the simplex boundary.
inline SimplicialComplex triangulate(const ManifoldExpr& expr) {
  switch (expr.kind()) {
  case ManifoldExpr::Kind::Sphere:
    return expr.sphere_dimension() == 1 ? circle_complex(3)
                                        : boundary_sphere_complex(expr.sphere_dimension());
  case ManifoldExpr::Kind::Product:
    return product_complex(triangulate(expr.left()), triangulate(expr.right()));
  case ManifoldExpr::Kind::ConnectedSum: {
    const auto summands = expr.summands();
    auto acc = triangulate(summands.front());
    for (std::size_t i = 1; i < summands.size(); ++i)
      acc = connected_sum_complex(acc, triangulate(summands[i]), expr.dimension());
    return acc;
  }
  }
  return {};
}

} // namespace morseflow
