#pragma once

// Full-dimensional lattice polytopes: V- and H-representation, dilates and
// their lattice points, edges, and the product / join / union constructions.

#include "polynorm/exactmath.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

namespace polynorm {

/// Lexicographically sorted, duplicate-free list of lattice points.
using PointList = std::vector<IntVector>;

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input does not affinely span its ambient space.
class NotFullDimensional : public GeometryError {
 public:
  NotFullDimensional(Eigen::Index affine_rank, Eigen::Index ambient);
  Eigen::Index affine_rank() const { return affine_rank_; }

 private:
  Eigen::Index affine_rank_;
};

/// normal . x <= offset, with a primitive integer normal.
struct HalfSpace {
  IntVector normal;
  Integer offset;

  Integer evaluate(const IntVector& x) const { return normal.dot(x); }
  bool contains(const IntVector& x, const Integer& scale = 1) const { return evaluate(x) <= scale * offset; }
  bool is_tight(const IntVector& x, const Integer& scale = 1) const { return evaluate(x) == scale * offset; }

  friend bool operator==(const HalfSpace& a, const HalfSpace& b) {
    return a.offset == b.offset && a.normal == b.normal;
  }
};

class Polytope {
 public:
  /// Convex hull of the points. Throws NotFullDimensional if they do not span
  /// the ambient space, GeometryError on empty or ragged input.
  static Polytope from_points(std::span<const IntVector> points);

  Eigen::Index dim() const { return dim_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  const std::vector<HalfSpace>& facets() const { return facets_; }

  /// Is x in k * P.
  bool contains(const IntVector& x, const Integer& k = 1) const;
  /// Is x in the interior of k * P.
  bool contains_interior(const IntVector& x, const Integer& k = 1) const;
  /// Indices of facets tight at x (for x in P).
  std::vector<std::size_t> active_facets(const IntVector& x) const;
  bool is_vertex(const IntVector& x) const;
  /// Index of a vertex in vertices(), or throws GeometryError.
  std::size_t vertex_index(const IntVector& v) const;
  /// For each facet, indices of the vertices lying on it.
  const std::vector<std::vector<std::size_t>>& facet_vertices() const { return facet_vertices_; }

  /// Lattice points of k * P, sorted lexicographically. The result is memoized
  /// per k and shared by all copies of this polytope; the reference stays
  /// valid while any copy is alive. Safe to call concurrently.
  const PointList& lattice_points(int k) const;

 private:
  struct LatticeCache {
    std::mutex mutex;
    std::map<int, std::unique_ptr<const PointList>> levels;
  };

  Polytope() = default;

  Eigen::Index dim_ = 0;
  std::vector<IntVector> vertices_;
  std::vector<HalfSpace> facets_;
  std::vector<std::vector<std::size_t>> facet_vertices_;
  std::shared_ptr<LatticeCache> cache_;
};

/// Facet description of conv(points). Normals primitive, no duplicates,
/// sorted by (normal, offset).
std::vector<HalfSpace> hrep_from_vrep(std::span<const IntVector> points);

/// Convex hull of the points (free-function spelling of Polytope::from_points).
Polytope from_points(std::span<const IntVector> points);

const PointList& lattice_points(const Polytope& p, int k);
PointList interior_lattice_points(const Polytope& p, int k);

/// Lattice points x with normal . x <= rhs for every facet, scanning the box
/// [lower, upper]. The last coordinate is solved for directly from the facet
/// inequalities instead of being scanned.
PointList enumerate_lattice_points(const std::vector<HalfSpace>& facets, const std::vector<Integer>& rhs,
                                   const IntVector& lower, const IntVector& upper);

/// Primitive edge directions at a vertex together with the neighbouring vertices.
struct EdgeFan {
  IntVector vertex;
  std::vector<IntVector> edge_directions;
  std::vector<IntVector> neighbor_vertices;
};

/// Edges at vertex v: u is a neighbour iff the facets tight at both v and u
/// have normals of rank d - 1.
EdgeFan edge_fan(const Polytope& p, const IntVector& v);

Polytope dilate(const Polytope& p, int m);
Polytope translate(const Polytope& p, const IntVector& shift);
Polytope product(const Polytope& p, const Polytope& q);
/// conv(p x {0} x {0}  union  {0} x q x {1}) in dimension dim p + dim q + 1.
Polytope join(const Polytope& p, const Polytope& q);
/// conv of all parts if it equals their union, nullopt otherwise.
std::optional<Polytope> union_if_convex(std::span<const Polytope> parts);

/// Pulling triangulation: simplices as vertex-index lists of length d + 1.
/// The lexicographically least vertex of every face is pulled first.
std::vector<std::vector<std::size_t>> triangulate(const Polytope& p);

/// Normalized volume of the simplex with the given vertex rows (|det| of edges).
Integer simplex_volume(const std::vector<IntVector>& vertices);

/// Checks the structural invariants (vertices feasible, facets tight at d
/// affinely independent vertices, normals primitive). Returns an empty string
/// when they hold, otherwise a description of the first violation.
std::string validate(const Polytope& p);

}  // namespace polynorm
