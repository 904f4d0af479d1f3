#include "polynorm/invariants.hpp"

#include <algorithm>

namespace polynorm {

SumsetTower::SumsetTower(const Polytope& p) : polytope_(&p) {
  const auto& base = p.lattice_points(1);
  levels_.emplace_back(base.begin(), base.end());
}

const PointSet& SumsetTower::level(int k) {
  if (k < 1) throw std::invalid_argument("sumset level must be positive");
  const auto& base = polytope_->lattice_points(1);
  while (static_cast<int>(levels_.size()) < k) {
    const PointSet& previous = levels_.back();
    PointSet next;
    next.reserve(previous.size() * 2);
    for (const auto& y : previous) {
      for (const auto& w : base) next.insert(y + w);
    }
    levels_.push_back(std::move(next));
  }
  return levels_[static_cast<std::size_t>(k - 1)];
}

KNormality is_k_normal(const Polytope& p, SumsetTower& tower, int k) {
  const PointSet& sums = tower.level(k);
  KNormality out;
  for (const auto& x : p.lattice_points(k)) {
    if (!sums.count(x)) out.holes.push_back(x);
  }
  out.is_normal = out.holes.empty();
  return out;
}

KNormality is_k_normal(const Polytope& p, int k) {
  SumsetTower tower(p);
  return is_k_normal(p, tower, k);
}

namespace {

// Largest k in [1, last] at which some point of (k+1)P is not s + y with
// s in summands and y in kP; 0 if there is none.
int last_failure(const Polytope& p, const std::vector<IntVector>& summands, int last) {
  int worst = 0;
  for (int k = 1; k <= last; ++k) {
    for (const auto& y : p.lattice_points(k + 1)) {
      const bool covered =
          std::any_of(summands.begin(), summands.end(), [&](const IntVector& s) { return p.contains(y - s, k); });
      if (!covered) {
        worst = k;
        break;
      }
    }
  }
  return worst;
}

}  // namespace

int compute_d_P(const Polytope& p) {
  const int d = static_cast<int>(p.dim());
  if (d <= 2) return 1;
  return last_failure(p, p.lattice_points(1), d - 2) + 1;
}

int compute_nu_P(const Polytope& p) {
  const int n = static_cast<int>(p.num_vertices());
  return last_failure(p, p.vertices(), n - 2) + 1;
}

NormalityScan scan_levels(const Polytope& p, int max_level) {
  NormalityScan scan;
  SumsetTower tower(p);
  for (int k = 1; k <= max_level; ++k) scan.levels.emplace(k, is_k_normal(p, tower, k));
  return scan;
}

NormalityScan normality_scan(const Polytope& p, int d_P, int nu_P, std::optional<int> m_P, int max_k) {
  if (!m_P) throw KPUndefined();
  NormalityScan scan;
  scan.d_P = d_P;
  scan.nu_P = nu_P;
  SumsetTower tower(p);
  const int cap = std::max((*m_P - d_P) * static_cast<int>(p.num_vertices()) + 1, d_P);
  int first_normal = 0;
  for (int k = d_P; k <= cap; ++k) {
    if (k > max_k) {
      throw SearchLimitExceeded("k_P search reached the max-k cap of " + std::to_string(max_k));
    }
    auto level = is_k_normal(p, tower, k);
    const bool normal = level.is_normal;
    scan.levels.emplace(k, std::move(level));
    if (normal) {
      first_normal = k;
      break;
    }
  }
  if (first_normal == 0) {
    throw std::logic_error("no k-normal dilate found below (m_P - d_P) n + 1; m_P is inconsistent");
  }
  int worst = 0;
  for (int k = 1; k < first_normal; ++k) {
    auto it = scan.levels.find(k);
    if (it == scan.levels.end()) it = scan.levels.emplace(k, is_k_normal(p, tower, k)).first;
    if (!it->second.is_normal) worst = k;
  }
  scan.k_P = worst + 1;
  return scan;
}

int compute_k_P(const Polytope& p, std::optional<int> m_P, int d_P, int max_k) {
  return *normality_scan(p, d_P, 0, m_P, max_k).k_P;
}

Decomposition decompose_point(const Polytope& p, const IntVector& u, int k, int d_P) {
  if (d_P < 1 || k < d_P) throw std::invalid_argument("decomposition needs k >= d_P >= 1");
  if (!p.contains(u, k)) throw GeometryError(to_string(u) + " is not in " + std::to_string(k) + "P");
  Decomposition out;
  IntVector rest = u;
  const auto& units = p.lattice_points(1);
  for (int j = k; j > d_P; --j) {
    auto it = std::find_if(units.begin(), units.end(), [&](const IntVector& w) { return p.contains(rest - w, j - 1); });
    if (it == units.end()) {
      throw std::logic_error("no unit splits off " + to_string(rest) + "; d_P is wrong for this polytope");
    }
    out.units.push_back(*it);
    rest -= *it;
  }
  out.x = std::move(rest);
  return out;
}

int degree(const Polytope& p) {
  const int d = static_cast<int>(p.dim());
  if (d == 0) return 0;
  if (!interior_lattice_points(p, 1).empty()) return d;
  // first k in 1..d with interior points; kP interior-free for k < first
  int first = d + 1;
  for (int k = 2; k <= d; ++k) {
    if (!interior_lattice_points(p, k).empty()) {
      first = k;
      break;
    }
  }
  // need d - i < first, i.e. i = max(0, d - first + 1)
  return std::max(0, d - first + 1);
}

Integer volume_ehrhart(const Polytope& p) {
  const Eigen::Index d = p.dim();
  if (d == 0) return 1;
  IntMatrix vandermonde(d + 1, d + 1);
  IntVector counts(d + 1);
  for (Eigen::Index k = 0; k <= d; ++k) {
    Integer power = 1;
    for (Eigen::Index j = 0; j <= d; ++j) {
      vandermonde(k, j) = power;
      power *= k;
    }
    counts(k) = k == 0 ? Integer(1) : Integer(p.lattice_points(static_cast<int>(k)).size());
  }
  const SolveResult fit = solve_rational(vandermonde, counts);
  if (!fit) throw std::logic_error("Ehrhart interpolation system is singular");
  const Rational volume = fit.solution(d) * Rational(factorial(static_cast<unsigned>(d)));
  if (denominator(volume) != 1 || volume <= 0) {
    throw std::logic_error("Ehrhart leading coefficient gives non-integral volume " + volume.str());
  }
  return numerator(volume);
}

Integer volume_triangulation(const Polytope& p) {
  if (p.dim() == 0) return 1;
  Integer total = 0;
  for (const auto& simplex : triangulate(p)) {
    std::vector<IntVector> pts;
    for (std::size_t i : simplex) pts.push_back(p.vertices()[i]);
    total += simplex_volume(pts);
  }
  return total;
}

namespace {

bool fan_is_unimodular(const EdgeFan& fan, Eigen::Index d) {
  if (static_cast<Eigen::Index>(fan.edge_directions.size()) != d) return false;
  IntMatrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) m.col(i) = fan.edge_directions[static_cast<std::size_t>(i)];
  return abs(det_exact(m)) == 1;
}

}  // namespace

bool is_smooth(const Polytope& p) {
  for (const auto& v : p.vertices()) {
    if (!fan_is_unimodular(edge_fan(p, v), p.dim())) return false;
  }
  return true;
}

IntVector edge_coordinates(const EdgeFan& fan, const IntVector& u) {
  const Eigen::Index d = fan.vertex.size();
  if (static_cast<Eigen::Index>(fan.edge_directions.size()) != d) {
    throw GeometryError("edge coordinates need exactly d edges at the vertex");
  }
  IntMatrix basis(d, d);
  for (Eigen::Index i = 0; i < d; ++i) basis.col(i) = fan.edge_directions[static_cast<std::size_t>(i)];
  const SolveResult s = solve_rational(basis, u - fan.vertex);
  if (!s) throw GeometryError("edge directions at " + to_string(fan.vertex) + " are not a basis");
  IntVector out(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (denominator(s.solution(i)) != 1) throw GeometryError("edge directions are not unimodular");
    out(i) = numerator(s.solution(i));
  }
  return out;
}

SmoothData smooth_data(const Polytope& p) {
  SmoothData out;
  for (const auto& v : p.vertices()) out.fans.push_back(edge_fan(p, v));
  out.is_smooth =
      std::all_of(out.fans.begin(), out.fans.end(), [&](const EdgeFan& f) { return fan_is_unimodular(f, p.dim()); });
  if (!out.is_smooth) return out;
  Integer gamma = 0;
  Integer single = 0;
  for (const auto& fan : out.fans) {
    for (const auto& u : p.vertices()) gamma = std::max(gamma, Integer(edge_coordinates(fan, u).sum()));
    for (const auto& u : p.lattice_points(1)) {
      const IntVector a = edge_coordinates(fan, u);
      for (Eigen::Index i = 0; i < a.size(); ++i) single = std::max(single, Integer(a(i)));
    }
  }
  out.gamma = gamma;
  out.m_prime = single;
  return out;
}

Integer corner_gamma(const Polytope& p) {
  SmoothData s = smooth_data(p);
  if (!s.is_smooth) throw GeometryError("gamma requires a smooth polytope");
  return *s.gamma;
}

Integer m_prime(const Polytope& p) {
  SmoothData s = smooth_data(p);
  if (!s.is_smooth) throw GeometryError("m' requires a smooth polytope");
  return *s.m_prime;
}

}  // namespace polynorm
