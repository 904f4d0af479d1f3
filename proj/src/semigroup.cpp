#include "polynorm/semigroup.hpp"

#include <algorithm>

namespace polynorm {

bool GeneratorSet::in_cone(const IntVector& y) const {
  for (const auto& a : cone_normals) {
    if (a.dot(y) > 0) return false;
  }
  return true;
}

GeneratorSet generator_set(const Polytope& p, const IntVector& v) {
  p.vertex_index(v);
  GeneratorSet gs;
  gs.vertex = v;
  for (std::size_t f : p.active_facets(v)) gs.cone_normals.push_back(p.facets()[f].normal);
  for (const auto& u : p.lattice_points(1)) {
    if (PointEqual{}(u, v)) continue;
    gs.generators.push_back(u - v);
  }
  std::sort(gs.generators.begin(), gs.generators.end(), LexLess{});
  return gs;
}

GeneratorSet generator_set(IntVector vertex, std::vector<IntVector> generators) {
  GeneratorSet gs;
  gs.vertex = std::move(vertex);
  const Eigen::Index d = gs.vertex.size();
  if (d < 1) throw MathError("semigroup of a zero-dimensional lattice");
  for (auto& g : generators) {
    if (g.size() != d) throw MathError("generator of the wrong length");
  }
  generators.erase(std::remove_if(generators.begin(), generators.end(), [](const IntVector& g) { return content(g) == 0; }),
                   generators.end());
  std::sort(generators.begin(), generators.end(), LexLess{});
  generators.erase(std::unique(generators.begin(), generators.end(), PointEqual{}), generators.end());
  gs.generators = std::move(generators);

  // Facets of the cone: hyperplanes through the origin spanned by d - 1
  // generators with every generator on one side.
  const std::size_t n = gs.generators.size();
  const std::size_t k = static_cast<std::size_t>(d - 1);
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  IntMatrix rows(d - 1, d);
  while (k <= n) {
    for (std::size_t i = 0; i < k; ++i) rows.row(static_cast<Eigen::Index>(i)) = gs.generators[idx[i]].transpose();
    IntVector normal = cofactor_normal(rows);
    if (content(normal) != 0) {
      normal = primitive(normal);
      bool pos = false, neg = false;
      for (const auto& g : gs.generators) {
        Integer s = normal.dot(g);
        if (s > 0) pos = true;
        if (s < 0) neg = true;
      }
      if (!(pos && neg)) {
        if (pos) normal = -normal;
        if (std::none_of(gs.cone_normals.begin(), gs.cone_normals.end(),
                         [&](const IntVector& a) { return a == normal; })) {
          gs.cone_normals.push_back(normal);
        }
      }
    }
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(gs.cone_normals.begin(), gs.cone_normals.end(), LexLess{});
  if (gs.cone_normals.empty() || rank(rows_matrix(gs.cone_normals)) < d) {
    throw MathError("generators do not span a full-dimensional pointed cone");
  }
  return gs;
}

SemigroupSearch::SemigroupSearch(const GeneratorSet& generators, std::vector<Integer> lower)
    : generators_(&generators), lower_(std::move(lower)) {
  const auto& normals = generators.cone_normals;
  if (lower_.size() != normals.size()) throw std::invalid_argument("one lower bound per cone normal expected");
  const auto inside = [&](const IntVector& y) {
    for (std::size_t f = 0; f < normals.size(); ++f) {
      const Integer value = normals[f].dot(y);
      if (value > 0 || value < lower_[f]) return false;
    }
    return true;
  };

  const Eigen::Index d = generators.vertex.size();
  std::vector<IntVector> frontier{IntVector::Zero(d)};
  nodes_.emplace(frontier.front(), Node{0, -1});
  for (int layer = 1; !frontier.empty(); ++layer) {
    std::vector<IntVector> next;
    for (const auto& y : frontier) {
      for (std::size_t g = 0; g < generators.generators.size(); ++g) {
        IntVector z = y + generators.generators[g];
        if (nodes_.count(z) || !inside(z)) continue;
        nodes_.emplace(z, Node{layer, static_cast<int>(g)});
        next.push_back(std::move(z));
      }
    }
    frontier = std::move(next);
  }
}

SemigroupSearch SemigroupSearch::for_targets(const GeneratorSet& generators, const std::vector<IntVector>& targets) {
  std::vector<Integer> lower(generators.cone_normals.size(), Integer(0));
  for (std::size_t f = 0; f < lower.size(); ++f) {
    for (const auto& t : targets) lower[f] = std::min(lower[f], Integer(generators.cone_normals[f].dot(t)));
  }
  return SemigroupSearch(generators, std::move(lower));
}

std::optional<int> SemigroupSearch::distance(const IntVector& y) const {
  auto it = nodes_.find(y);
  if (it == nodes_.end()) return std::nullopt;
  return it->second.distance;
}

std::optional<ReprCertificate> SemigroupSearch::certificate(const IntVector& target) const {
  auto it = nodes_.find(target);
  if (it == nodes_.end()) return std::nullopt;
  ReprCertificate cert;
  cert.target = target;
  cert.length = it->second.distance;
  IntVector y = target;
  while (it->second.via >= 0) {
    const IntVector& g = generators_->generators[static_cast<std::size_t>(it->second.via)];
    cert.parts.push_back(g);
    y -= g;
    it = nodes_.find(y);
  }
  std::sort(cert.parts.begin(), cert.parts.end(), LexLess{});
  return cert;
}

std::optional<ReprCertificate> sigma(const GeneratorSet& gs, const IntVector& target) {
  if (!gs.in_cone(target)) return std::nullopt;
  return SemigroupSearch::for_targets(gs, {target}).certificate(target);
}

namespace {

struct PairScan {
  std::optional<SigmaWitness> best;
  std::optional<NonSaturationWitness> failure;
};

PairScan scan_pairs(const Polytope& p, int d_P, bool stop_at_failure) {
  PairScan scan;
  const auto& xs = p.lattice_points(d_P);
  for (const auto& v : p.vertices()) {
    const GeneratorSet gs = generator_set(p, v);
    const IntVector base = v * Integer(d_P);
    std::vector<IntVector> targets;
    targets.reserve(xs.size());
    for (const auto& x : xs) targets.push_back(x - base);
    const SemigroupSearch search = SemigroupSearch::for_targets(gs, targets);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      auto dist = search.distance(targets[i]);
      if (!dist) {
        if (!scan.failure) scan.failure = NonSaturationWitness{xs[i], v, targets[i]};
        if (stop_at_failure) return scan;
        continue;
      }
      if (!scan.best || *dist > scan.best->certificate.length) {
        scan.best = SigmaWitness{xs[i], v, *search.certificate(targets[i])};
      }
    }
  }
  return scan;
}

}  // namespace

MPResult compute_m_P(const Polytope& p, int d_P) {
  if (d_P < 1) throw std::invalid_argument("d_P must be positive");
  PairScan scan = scan_pairs(p, d_P, true);
  MPResult result;
  if (scan.failure) {
    result.non_saturation = std::move(scan.failure);
    return result;
  }
  result.sigma_max = std::move(scan.best);
  result.m_P = result.sigma_max ? result.sigma_max->certificate.length : 0;
  return result;
}

VeryAmpleResult very_ample_check(const Polytope& p, int d_P) {
  if (d_P < 1) throw std::invalid_argument("d_P must be positive");
  PairScan scan = scan_pairs(p, d_P, true);
  return VeryAmpleResult{!scan.failure.has_value(), std::move(scan.failure)};
}

}  // namespace polynorm
