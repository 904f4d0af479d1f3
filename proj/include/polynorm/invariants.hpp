#pragma once

// k-normality and the invariants built on it: holes, d_P, nu_P, k_P, degree,
// normalized volume, smoothness, and the corner scalings gamma and m'.

#include "polynorm/polytope.hpp"

#include <map>
#include <optional>
#include <unordered_set>

namespace polynorm {

using PointSet = std::unordered_set<IntVector, PointHash, PointEqual>;

/// k_P was requested for a polytope that is not very ample.
class KPUndefined : public std::domain_error {
 public:
  KPUndefined() : std::domain_error("k_P undefined: polytope is not very ample") {}
};

/// The k_P search needed a dilate beyond the configured cap.
class SearchLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iterated Minkowski sums R_k = R_{k-1} + (P cap M), built on demand.
class SumsetTower {
 public:
  explicit SumsetTower(const Polytope& p);
  const PointSet& level(int k);
  int height() const { return static_cast<int>(levels_.size()); }

 private:
  const Polytope* polytope_;
  std::vector<PointSet> levels_;  // levels_[k - 1] == R_k
};

struct KNormality {
  bool is_normal = true;
  PointList holes;  ///< kP cap M minus the k-fold sumset, sorted
};

KNormality is_k_normal(const Polytope& p, int k);
KNormality is_k_normal(const Polytope& p, SumsetTower& tower, int k);

/// Smallest n with P cap M + kP cap M = (k+1)P cap M for all k >= n. Only
/// k <= d - 2 needs checking since surjectivity always holds from k = d - 1 on.
int compute_d_P(const Polytope& p);

/// Smallest n with V + kP cap M = (k+1)P cap M for all k >= n (V the
/// vertices); surjectivity always holds from k = n_vertices - 1 on.
int compute_nu_P(const Polytope& p);

struct NormalityScan {
  std::map<int, KNormality> levels;
  int d_P = 1;
  int nu_P = 1;
  std::optional<int> k_P;
};

/// k-normality of the levels 1..max_level, no k_P inference.
NormalityScan scan_levels(const Polytope& p, int max_level);

/// Finds the first k* >= d_P at which P is k-normal (bounded above by
/// (m_P - d_P) * n + 1), then k_P = 1 + the largest non-normal k below k*.
/// Throws KPUndefined when m_P is empty, SearchLimitExceeded past max_k.
NormalityScan normality_scan(const Polytope& p, int d_P, int nu_P, std::optional<int> m_P, int max_k = 64);
int compute_k_P(const Polytope& p, std::optional<int> m_P, int d_P, int max_k = 64);

struct Decomposition {
  IntVector x;                   ///< in d_P * P
  std::vector<IntVector> units;  ///< k - d_P points of P
};

/// u = x + sum(units) with x in d_P P cap M. Greedy: peel off the
/// lexicographically least unit w with u - w in (j - 1)P, which always exists
/// while j - 1 >= d_P.
Decomposition decompose_point(const Polytope& p, const IntVector& u, int k, int d_P);

/// d if P has interior lattice points, otherwise the smallest i such that kP
/// has no interior lattice points for 1 <= k <= d - i.
int degree(const Polytope& p);

/// d! times the leading coefficient of the Ehrhart polynomial, interpolated
/// from |kP cap M| for k = 0..d.
Integer volume_ehrhart(const Polytope& p);

/// Sum of simplex volumes over the pulling triangulation.
Integer volume_triangulation(const Polytope& p);

/// Every vertex has exactly d edges whose primitive directions form a lattice basis.
bool is_smooth(const Polytope& p);

/// Coefficients of u - v in the edge basis at v (smooth polytopes only).
IntVector edge_coordinates(const EdgeFan& fan, const IntVector& u);

/// Smallest gamma with P inside conv(v, v + gamma (w_i - v)) at every vertex.
Integer corner_gamma(const Polytope& p);

/// Largest single edge coordinate of a lattice point of P at any vertex. Never
/// exceeds gamma, which bounds the coordinate sum.
Integer m_prime(const Polytope& p);

struct SmoothData {
  bool is_smooth = false;
  std::vector<EdgeFan> fans;
  std::optional<Integer> gamma;
  std::optional<Integer> m_prime;
};

SmoothData smooth_data(const Polytope& p);

}  // namespace polynorm
