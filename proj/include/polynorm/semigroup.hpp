#pragma once

// Membership and shortest representations in the vertex semigroups
// N(P cap M - v), searched breadth-first by representation length.

#include "polynorm/polytope.hpp"

#include <optional>
#include <unordered_map>

namespace polynorm {

/// Nonzero elements of P cap M - v, plus the tangent cone at v as
/// {y : a . y <= 0 for every a in cone_normals}.
struct GeneratorSet {
  IntVector vertex;
  std::vector<IntVector> generators;  ///< lexicographically sorted
  std::vector<IntVector> cone_normals;

  bool in_cone(const IntVector& y) const;
};

/// Generators of the semigroup at vertex v of p; the cone comes from the
/// facets of p active at v.
GeneratorSet generator_set(const Polytope& p, const IntVector& v);

/// Generator set for an explicit list of generators; the cone they span is
/// computed by brute force. Throws MathError unless the generators span a
/// full-dimensional pointed cone.
GeneratorSet generator_set(IntVector vertex, std::vector<IntVector> generators);

/// A multiset of generators summing to target. length is the multiset size.
struct ReprCertificate {
  IntVector target;
  std::vector<IntVector> parts;
  int length = 0;
};

/// Breadth-first search over partial sums of generators inside the region
/// {y : lower[f] <= a_f . y <= 0}. The region contains every partial sum of
/// every representation of any target t with a_f . t >= lower[f], so the BFS
/// layer at which t is first reached is its minimal representation length.
class SemigroupSearch {
 public:
  SemigroupSearch(const GeneratorSet& generators, std::vector<Integer> lower);

  /// Search region large enough for every target in the list.
  static SemigroupSearch for_targets(const GeneratorSet& generators, const std::vector<IntVector>& targets);

  std::optional<int> distance(const IntVector& y) const;
  std::optional<ReprCertificate> certificate(const IntVector& target) const;
  std::size_t explored() const { return nodes_.size(); }

 private:
  struct Node {
    int distance;
    int via;  ///< generator index of the last step, -1 at the origin
  };

  const GeneratorSet* generators_;
  std::vector<Integer> lower_;
  std::unordered_map<IntVector, Node, PointHash, PointEqual> nodes_;
};

/// Minimal number of generators summing to target, with a witness.
/// nullopt when the target is not in the semigroup.
std::optional<ReprCertificate> sigma(const GeneratorSet& gs, const IntVector& target);

/// (x, v) with x - d_P v not representable: a witness that S_{P,v} is not
/// saturated.
struct NonSaturationWitness {
  IntVector x;
  IntVector vertex;
  IntVector target;
};

struct SigmaWitness {
  IntVector x;
  IntVector vertex;
  ReprCertificate certificate;
};

struct MPResult {
  std::optional<int> m_P;                  ///< empty when P is not very ample
  std::optional<SigmaWitness> sigma_max;   ///< a pair attaining m_P
  std::optional<NonSaturationWitness> non_saturation;

  bool very_ample() const { return m_P.has_value(); }
};

/// m_P = max sigma(x, d_P v) over x in d_P P cap M and vertices v. Any
/// infeasible pair means P is not very ample and is returned as a witness.
MPResult compute_m_P(const Polytope& p, int d_P);

struct VeryAmpleResult {
  bool very_ample = false;
  std::optional<NonSaturationWitness> witness;
};

/// Very ampleness decided at r = d_P: every x - d_P v must be representable.
VeryAmpleResult very_ample_check(const Polytope& p, int d_P);

}  // namespace polynorm
