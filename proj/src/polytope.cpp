#include "polynorm/polytope.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <functional>
#include <set>

namespace polynorm {

namespace {

std::vector<IntVector> sorted_unique(std::span<const IntVector> points) {
  std::vector<IntVector> out(points.begin(), points.end());
  std::sort(out.begin(), out.end(), LexLess{});
  out.erase(std::unique(out.begin(), out.end(), PointEqual{}), out.end());
  return out;
}

bool halfspace_less(const HalfSpace& a, const HalfSpace& b) {
  if (lex_less(a.normal, b.normal)) return true;
  if (lex_less(b.normal, a.normal)) return false;
  return a.offset < b.offset;
}

// Calls visit(indices) for every k-subset of {0, ..., n-1} in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Eigen::Index normal_rank(const std::vector<HalfSpace>& facets, const std::vector<std::size_t>& which, Eigen::Index d) {
  if (which.empty()) return 0;
  IntMatrix m(static_cast<Eigen::Index>(which.size()), d);
  for (std::size_t i = 0; i < which.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = facets[which[i]].normal.transpose();
  return rank(m);
}

std::vector<IntVector> gather(const std::vector<IntVector>& pool, const std::vector<std::size_t>& idx) {
  std::vector<IntVector> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(pool[i]);
  return out;
}

}  // namespace

NotFullDimensional::NotFullDimensional(Eigen::Index affine_rank, Eigen::Index ambient)
    : GeometryError("not full-dimensional: affine rank " + std::to_string(affine_rank) + " in ambient dimension " +
                    std::to_string(ambient)),
      affine_rank_(affine_rank) {}

std::vector<HalfSpace> hrep_from_vrep(std::span<const IntVector> input) {
  const std::vector<IntVector> points = sorted_unique(input);
  if (points.empty()) throw GeometryError("empty point set");
  const Eigen::Index d = points.front().size();
  for (const auto& p : points) {
    if (p.size() != d) throw GeometryError("points of differing dimension");
  }
  if (d == 0) return {};
  const Eigen::Index r = affine_rank(points);
  if (r < d) throw NotFullDimensional(r, d);

  std::vector<HalfSpace> facets;
  IntMatrix rows(d - 1, d);
  for_each_subset(points.size(), static_cast<std::size_t>(d), [&](const std::vector<std::size_t>& idx) {
    const IntVector& base = points[idx[0]];
    for (Eigen::Index i = 1; i < d; ++i) rows.row(i - 1) = (points[idx[static_cast<std::size_t>(i)]] - base).transpose();
    IntVector normal = cofactor_normal(rows);
    if (content(normal) == 0) return;
    normal = primitive(normal);
    Integer offset = normal.dot(base);
    bool any_above = false;
    bool any_below = false;
    for (const auto& p : points) {
      Integer value = normal.dot(p);
      if (value > offset) any_above = true;
      if (value < offset) any_below = true;
      if (any_above && any_below) return;
    }
    if (any_above) {
      normal = -normal;
      offset = -offset;
    }
    HalfSpace h{std::move(normal), std::move(offset)};
    if (std::find(facets.begin(), facets.end(), h) == facets.end()) facets.push_back(std::move(h));
  });
  std::sort(facets.begin(), facets.end(), halfspace_less);
  return facets;
}

Polytope Polytope::from_points(std::span<const IntVector> input) {
  std::vector<IntVector> points = sorted_unique(input);
  if (points.empty()) throw GeometryError("empty point set");
  Polytope p;
  p.dim_ = points.front().size();
  p.facets_ = hrep_from_vrep(points);
  p.cache_ = std::make_shared<LatticeCache>();
  if (p.dim_ == 0) {
    p.vertices_ = std::move(points);
    return p;
  }
  for (const auto& x : points) {
    std::vector<std::size_t> active;
    for (std::size_t f = 0; f < p.facets_.size(); ++f) {
      if (p.facets_[f].is_tight(x)) active.push_back(f);
    }
    if (static_cast<Eigen::Index>(active.size()) >= p.dim_ && normal_rank(p.facets_, active, p.dim_) == p.dim_) {
      p.vertices_.push_back(x);
    }
  }
  p.facet_vertices_.resize(p.facets_.size());
  for (std::size_t f = 0; f < p.facets_.size(); ++f) {
    for (std::size_t v = 0; v < p.vertices_.size(); ++v) {
      if (p.facets_[f].is_tight(p.vertices_[v])) p.facet_vertices_[f].push_back(v);
    }
  }
  return p;
}

Polytope from_points(std::span<const IntVector> points) { return Polytope::from_points(points); }

bool Polytope::contains(const IntVector& x, const Integer& k) const {
  if (x.size() != dim_) return false;
  for (const auto& h : facets_) {
    if (!h.contains(x, k)) return false;
  }
  return true;
}

bool Polytope::contains_interior(const IntVector& x, const Integer& k) const {
  if (x.size() != dim_) return false;
  for (const auto& h : facets_) {
    if (h.evaluate(x) >= k * h.offset) return false;
  }
  return true;
}

std::vector<std::size_t> Polytope::active_facets(const IntVector& x) const {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    if (facets_[f].is_tight(x)) out.push_back(f);
  }
  return out;
}

bool Polytope::is_vertex(const IntVector& x) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), x, LexLess{});
}

std::size_t Polytope::vertex_index(const IntVector& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v, LexLess{});
  if (it == vertices_.end() || !PointEqual{}(*it, v)) throw GeometryError(to_string(v) + " is not a vertex");
  return static_cast<std::size_t>(it - vertices_.begin());
}

PointList enumerate_lattice_points(const std::vector<HalfSpace>& facets, const std::vector<Integer>& rhs,
                                   const IntVector& lower, const IntVector& upper) {
  const Eigen::Index d = lower.size();
  PointList out;
  if (d == 0) {
    for (const auto& r : rhs) {
      if (r < 0) return out;
    }
    out.emplace_back(0);
    return out;
  }
  IntVector x(d);
  std::function<void(Eigen::Index, const std::vector<Integer>&)> scan = [&](Eigen::Index i,
                                                                           const std::vector<Integer>& partial) {
    if (i == d - 1) {
      Integer lo = lower(i);
      Integer hi = upper(i);
      for (std::size_t f = 0; f < facets.size(); ++f) {
        const Integer& a = facets[f].normal(i);
        const Integer slack = rhs[f] - partial[f];
        if (a > 0) {
          hi = std::min(hi, floor_div(slack, a));
        } else if (a < 0) {
          lo = std::max(lo, ceil_div(slack, a));
        } else if (slack < 0) {
          return;
        }
      }
      for (Integer t = lo; t <= hi; ++t) {
        x(i) = t;
        out.push_back(x);
      }
      return;
    }
    std::vector<Integer> next(partial.size());
    for (Integer t = lower(i); t <= upper(i); ++t) {
      x(i) = t;
      for (std::size_t f = 0; f < facets.size(); ++f) next[f] = partial[f] + facets[f].normal(i) * t;
      scan(i + 1, next);
    }
  };
  scan(0, std::vector<Integer>(facets.size(), Integer(0)));
  return out;
}

namespace {

PointList scan_dilate(const Polytope& p, int k, int strict_shift) {
  const Eigen::Index d = p.dim();
  IntVector lower(d), upper(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    Integer lo = p.vertices().front()(i), hi = lo;
    for (const auto& v : p.vertices()) {
      lo = std::min(lo, Integer(v(i)));
      hi = std::max(hi, Integer(v(i)));
    }
    lower(i) = lo * k;
    upper(i) = hi * k;
  }
  std::vector<Integer> rhs;
  rhs.reserve(p.facets().size());
  for (const auto& h : p.facets()) rhs.push_back(h.offset * k - strict_shift);
  return enumerate_lattice_points(p.facets(), rhs, lower, upper);
}

}  // namespace

const PointList& Polytope::lattice_points(int k) const {
  if (k < 1) throw std::invalid_argument("dilation factor must be positive");
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->levels.find(k);
    if (it != cache_->levels.end()) return *it->second;
  }
  auto computed = std::make_unique<const PointList>(scan_dilate(*this, k, 0));
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->levels.try_emplace(k, std::move(computed));
  return *it->second;
}

const PointList& lattice_points(const Polytope& p, int k) { return p.lattice_points(k); }

PointList interior_lattice_points(const Polytope& p, int k) {
  if (k < 1) throw std::invalid_argument("dilation factor must be positive");
  return scan_dilate(p, k, 1);
}

EdgeFan edge_fan(const Polytope& p, const IntVector& v) {
  const std::size_t vi = p.vertex_index(v);
  const Eigen::Index d = p.dim();
  EdgeFan fan;
  fan.vertex = v;
  const auto active_v = p.active_facets(v);
  for (std::size_t ui = 0; ui < p.num_vertices(); ++ui) {
    if (ui == vi) continue;
    const IntVector& u = p.vertices()[ui];
    std::vector<std::size_t> common;
    for (std::size_t f : active_v) {
      if (p.facets()[f].is_tight(u)) common.push_back(f);
    }
    if (normal_rank(p.facets(), common, d) == d - 1) {
      fan.edge_directions.push_back(primitive(IntVector(u - v)));
      fan.neighbor_vertices.push_back(u);
    }
  }
  return fan;
}

Polytope dilate(const Polytope& p, int m) {
  if (m < 1) throw std::invalid_argument("dilation factor must be positive");
  std::vector<IntVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(v * Integer(m));
  return Polytope::from_points(pts);
}

Polytope translate(const Polytope& p, const IntVector& shift) {
  std::vector<IntVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(v + shift);
  return Polytope::from_points(pts);
}

Polytope product(const Polytope& p, const Polytope& q) {
  std::vector<IntVector> pts;
  for (const auto& u : p.vertices()) {
    for (const auto& w : q.vertices()) {
      IntVector x(u.size() + w.size());
      x << u, w;
      pts.push_back(std::move(x));
    }
  }
  return Polytope::from_points(pts);
}

Polytope join(const Polytope& p, const Polytope& q) {
  const Eigen::Index a = p.dim();
  const Eigen::Index b = q.dim();
  std::vector<IntVector> pts;
  for (const auto& u : p.vertices()) {
    IntVector x = IntVector::Zero(a + b + 1);
    x.head(a) = u;
    pts.push_back(std::move(x));
  }
  for (const auto& w : q.vertices()) {
    IntVector x = IntVector::Zero(a + b + 1);
    x.segment(a, b) = w;
    x(a + b) = 1;
    pts.push_back(std::move(x));
  }
  return Polytope::from_points(pts);
}

Integer simplex_volume(const std::vector<IntVector>& vertices) {
  if (vertices.empty()) throw GeometryError("empty simplex");
  const Eigen::Index d = vertices.front().size();
  if (static_cast<Eigen::Index>(vertices.size()) != d + 1) throw GeometryError("simplex needs d + 1 vertices");
  IntMatrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) m.col(i) = vertices[static_cast<std::size_t>(i + 1)] - vertices.front();
  return abs(det_exact(m));
}

std::vector<std::vector<std::size_t>> triangulate(const Polytope& p) {
  std::vector<std::vector<std::size_t>> simplices;
  std::vector<std::size_t> apexes;
  const auto& vertices = p.vertices();

  std::function<void(const std::vector<std::size_t>&, Eigen::Index)> pull = [&](const std::vector<std::size_t>& face,
                                                                               Eigen::Index face_dim) {
    if (face_dim == 0) {
      auto simplex = apexes;
      simplex.push_back(face.front());
      simplices.push_back(std::move(simplex));
      return;
    }
    const std::size_t apex = face.front();
    std::set<std::vector<std::size_t>> subfaces;
    for (const auto& on_facet : p.facet_vertices()) {
      std::vector<std::size_t> sub;
      std::set_intersection(face.begin(), face.end(), on_facet.begin(), on_facet.end(), std::back_inserter(sub));
      if (sub.empty() || sub.front() == apex) continue;
      if (affine_rank(gather(vertices, sub)) == face_dim - 1) subfaces.insert(std::move(sub));
    }
    apexes.push_back(apex);
    for (const auto& sub : subfaces) pull(sub, face_dim - 1);
    apexes.pop_back();
  };

  std::vector<std::size_t> all(vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  pull(all, p.dim());
  return simplices;
}

namespace {

Integer normalized_volume(const Polytope& p) {
  Integer total = 0;
  for (const auto& s : triangulate(p)) total += simplex_volume(gather(p.vertices(), s));
  return total;
}

// Normalized volume of {x : a.x <= b for all given half-spaces}, which may have
// rational vertices or be lower dimensional (volume 0).
Rational intersection_volume(const std::vector<HalfSpace>& halfspaces, Eigen::Index d) {
  std::vector<RationalVector> vertices;
  IntMatrix a(d, d);
  IntVector b(d);
  for_each_subset(halfspaces.size(), static_cast<std::size_t>(d), [&](const std::vector<std::size_t>& idx) {
    for (Eigen::Index i = 0; i < d; ++i) {
      a.row(i) = halfspaces[idx[static_cast<std::size_t>(i)]].normal.transpose();
      b(i) = halfspaces[idx[static_cast<std::size_t>(i)]].offset;
    }
    SolveResult s = solve_rational(a, b);
    if (!s) return;
    for (const auto& h : halfspaces) {
      if (to_rational(h.normal).dot(s.solution) > Rational(h.offset)) return;
    }
    for (const auto& known : vertices) {
      if (known == s.solution) return;
    }
    vertices.push_back(std::move(s.solution));
  });
  if (static_cast<Eigen::Index>(vertices.size()) < d + 1) return 0;
  Integer scale = 1;
  for (const auto& v : vertices) {
    for (Eigen::Index i = 0; i < d; ++i) scale = boost::multiprecision::lcm(scale, denominator(v(i)));
  }
  std::vector<IntVector> scaled;
  for (const auto& v : vertices) {
    IntVector x(d);
    for (Eigen::Index i = 0; i < d; ++i) x(i) = numerator(v(i)) * (scale / denominator(v(i)));
    scaled.push_back(std::move(x));
  }
  if (affine_rank(scaled) < d) return 0;
  Integer denom = 1;
  for (Eigen::Index i = 0; i < d; ++i) denom *= scale;
  return Rational(normalized_volume(Polytope::from_points(scaled)), denom);
}

}  // namespace

std::optional<Polytope> union_if_convex(std::span<const Polytope> parts) {
  if (parts.empty()) throw GeometryError("union of no polytopes");
  const Eigen::Index d = parts.front().dim();
  std::vector<IntVector> all;
  for (const auto& part : parts) {
    if (part.dim() != d) throw GeometryError("union of polytopes of differing dimension");
    all.insert(all.end(), part.vertices().begin(), part.vertices().end());
  }
  Polytope hull = Polytope::from_points(all);
  if (d == 0) return hull;

  // The union is convex iff it fills the hull, i.e. iff the volumes agree.
  // Volume of the union by inclusion-exclusion over the parts.
  if (parts.size() > 16) throw GeometryError("union_if_convex supports at most 16 parts");
  Rational union_volume = 0;
  const std::size_t subsets = std::size_t{1} << parts.size();
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    std::vector<HalfSpace> halfspaces;
    int members = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!(mask & (std::size_t{1} << i))) continue;
      ++members;
      halfspaces.insert(halfspaces.end(), parts[i].facets().begin(), parts[i].facets().end());
    }
    Rational v = intersection_volume(halfspaces, d);
    union_volume += (members % 2 == 1) ? v : Rational(-v);
  }
  if (union_volume != Rational(normalized_volume(hull))) return std::nullopt;
  return hull;
}

std::string validate(const Polytope& p) {
  const Eigen::Index d = p.dim();
  for (const auto& h : p.facets()) {
    if (content(h.normal) != 1) return "facet normal " + to_string(h.normal) + " is not primitive";
  }
  for (const auto& v : p.vertices()) {
    for (const auto& h : p.facets()) {
      if (!h.contains(v)) return "vertex " + to_string(v) + " violates facet " + to_string(h.normal);
    }
  }
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    if (affine_rank(gather(p.vertices(), p.facet_vertices()[f])) != d - 1) {
      return "facet " + to_string(p.facets()[f].normal) + " is not tight at d affinely independent vertices";
    }
  }
  for (std::size_t i = 1; i < p.vertices().size(); ++i) {
    if (!lex_less(p.vertices()[i - 1], p.vertices()[i])) return "vertices are not sorted and unique";
  }
  return {};
}

}  // namespace polynorm
