#include "polynorm/bounds.hpp"

#include <algorithm>
#include <functional>

namespace polynorm {

Integer theorem_bound(int m_P, int d_P, std::size_t n) { return Integer(m_P - d_P) * n + 1; }

Integer refined_bound(int m_P, int d_P, int nu_P, std::size_t n) {
  return Integer(m_P - d_P - 1) * n + nu_P + 1;
}

SmoothBounds smooth_bounds(int d, int d_P, const Integer& gamma, const Integer& volume, std::size_t n) {
  SmoothBounds out;
  out.gamma_branch = Integer(d_P) * (gamma - 1) * n + 1;
  out.volume_branch = (Integer(d) * pow(Integer(d_P), static_cast<unsigned>(d)) * volume - d_P) * n + 1;
  return out;
}

int regularity(std::optional<int> k_P, int deg) {
  if (!k_P) throw KPUndefined();
  return std::max(*k_P, deg) + 1;
}

ClassicalBounds classical_bounds(int d, const Integer& volume, std::size_t lattice_points) {
  ClassicalBounds out;
  out.codim = Integer(lattice_points) - d - 1;
  out.mumford_general = Integer(d + 1) * (volume - 2) + 2;
  out.mumford_table = Integer(d + 1) * (volume - 2) + 1;
  out.sturmfels = Integer(d) * volume * out.codim;
  out.sturmfels_kp = Integer(lattice_points) * volume * out.codim - 1;
  out.sturmfels_table = factorial(static_cast<unsigned>(d)) * volume * out.codim;
  out.eg_rhs = volume - out.codim + 1;
  out.degenerate = out.codim <= 0;
  return out;
}

EGCheck eg_check(int k_P, const Integer& volume, std::size_t lattice_points, int d) {
  EGCheck out;
  out.lhs = k_P;
  out.rhs = volume - lattice_points + d + 1;
  out.holds = out.lhs <= out.rhs;
  return out;
}

DPChecks d_P_bound_checks(int d_P, int deg, const Integer& volume, std::size_t lattice_points, int d,
                          bool unimodular_simplex) {
  DPChecks out;
  if (!unimodular_simplex) out.below_degree = d_P <= deg;
  out.below_volume = Integer(d_P) <= volume + d + 1 - lattice_points;
  return out;
}

const BoundEntry* InvariantReport::bound(std::string_view name) const {
  auto it = std::find_if(bounds.begin(), bounds.end(), [&](const BoundEntry& b) { return b.name == name; });
  return it == bounds.end() ? nullptr : &*it;
}

PipelineError::PipelineError(std::string stage, const std::string& what)
    : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}

namespace {

template <typename F>
auto staged(const char* stage, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const PipelineError&) {
    throw;
  } catch (const std::exception& e) {
    throw PipelineError(stage, e.what());
  }
}

}  // namespace

InvariantReport full_report(const Polytope& p, std::string name, int max_k) {
  InvariantReport r;
  r.name = std::move(name);
  r.vertices = p.vertices();
  r.dim = static_cast<int>(p.dim());
  r.num_vertices = p.num_vertices();

  staged("geometry", [&] {
    if (auto problem = validate(p); !problem.empty()) throw GeometryError(problem);
    r.num_lattice_points = p.lattice_points(1).size();
  });

  staged("d_P", [&] {
    r.d_P = compute_d_P(p);
    r.nu_P = compute_nu_P(p);
  });

  staged("m_P", [&] {
    MPResult mp = compute_m_P(p, r.d_P);
    r.m_P = mp.m_P;
    r.very_ample = mp.very_ample();
    r.sigma_max = std::move(mp.sigma_max);
    r.non_saturation = std::move(mp.non_saturation);
  });

  staged("k_P", [&] {
    if (!r.very_ample) return;
    NormalityScan scan = normality_scan(p, r.d_P, r.nu_P, r.m_P, max_k);
    r.k_P = scan.k_P;
    r.normal = *r.k_P == 1;
    if (*r.k_P > 1) {
      const KNormality& last = scan.levels.at(*r.k_P - 1);
      r.hole = HoleWitness{*r.k_P - 1, last.holes.front()};
    }
  });

  staged("volume", [&] {
    r.volume = volume_triangulation(p);
    r.degree = degree(p);
    SmoothData s = smooth_data(p);
    r.smooth = s.is_smooth;
    r.gamma = s.gamma;
    r.m_prime = s.m_prime;
  });

  staged("bounds", [&] {
    const std::size_t n = r.num_vertices;
    const auto add = [&](std::string name, std::optional<Integer> value, BoundTarget target, bool proven) {
      r.bounds.push_back(BoundEntry{std::move(name), std::move(value), target, proven});
    };
    std::optional<Integer> theorem, refined;
    if (r.m_P) {
      theorem = theorem_bound(*r.m_P, r.d_P, n);
      if (!r.normal) refined = refined_bound(*r.m_P, r.d_P, r.nu_P, n);
    }
    add("theorem", theorem, BoundTarget::k_P, true);
    add("refined", refined, BoundTarget::k_P, true);

    std::optional<Integer> gamma_branch, volume_branch, smooth_min;
    if (r.smooth) {
      const SmoothBounds sb = smooth_bounds(r.dim, r.d_P, *r.gamma, r.volume, n);
      gamma_branch = sb.gamma_branch;
      volume_branch = sb.volume_branch;
      smooth_min = sb.minimum();
    }
    add("smooth_gamma", gamma_branch, BoundTarget::k_P, true);
    add("smooth_volume", volume_branch, BoundTarget::k_P, true);
    add("smooth_min", smooth_min, BoundTarget::k_P, true);

    const ClassicalBounds cb = classical_bounds(r.dim, r.volume, r.num_lattice_points);
    r.classical_degenerate = cb.degenerate;
    const bool usable = !cb.degenerate;
    add("mumford_general", cb.mumford_general, BoundTarget::regularity, usable && r.smooth);
    add("mumford_table", cb.mumford_table, BoundTarget::k_P, usable && r.smooth);
    add("sturmfels", cb.sturmfels, BoundTarget::regularity, usable);
    add("sturmfels_kp", cb.sturmfels_kp, BoundTarget::k_P, usable);
    add("sturmfels_table", cb.sturmfels_table, BoundTarget::none, false);
    r.eg_rhs = cb.eg_rhs;

    if (r.k_P) {
      r.regularity = regularity(r.k_P, r.degree);
      r.eg_holds = eg_check(*r.k_P, r.volume, r.num_lattice_points, r.dim).holds;
    }
    const bool unimodular_simplex = n == static_cast<std::size_t>(r.dim) + 1 && r.volume == 1;
    r.d_P_checks = d_P_bound_checks(r.d_P, r.degree, r.volume, r.num_lattice_points, r.dim, unimodular_simplex);
  });
  return r;
}

namespace {

class VerdictList {
 public:
  void add(std::string name, bool ok, std::string detail = {}, bool proven = true) {
    out_.push_back(PropertyVerdict{std::move(name), ok ? Verdict::pass : Verdict::fail, proven, std::move(detail)});
  }
  void skip(std::string name, std::string detail) {
    out_.push_back(PropertyVerdict{std::move(name), Verdict::skip, true, std::move(detail)});
  }
  std::vector<PropertyVerdict> take() { return std::move(out_); }

 private:
  std::vector<PropertyVerdict> out_;
};

std::string str(const Integer& x) { return x.str(); }

}  // namespace

std::vector<PropertyVerdict> check_properties(const Polytope& p, const InvariantReport& r) {
  VerdictList v;
  const int n = static_cast<int>(r.num_vertices);

  v.add("d_P <= nu_P <= n - 1", r.d_P <= r.nu_P && r.nu_P <= std::max(1, n - 1),
        "d_P=" + std::to_string(r.d_P) + " nu_P=" + std::to_string(r.nu_P));

  const Integer ehrhart = volume_ehrhart(p);
  v.add("volume: Ehrhart = triangulation", ehrhart == r.volume, str(ehrhart) + " vs " + str(r.volume));

  if (r.d_P_checks.below_degree) {
    v.add("d_P <= deg", *r.d_P_checks.below_degree, "deg=" + std::to_string(r.degree));
  } else {
    v.skip("d_P <= deg", "unimodular simplex");
  }
  v.add("d_P <= Vol + d + 1 - |P cap M|", r.d_P_checks.below_volume);

  if (r.dim <= 3) {
    const Polytope scaled = dilate(p, r.d_P);
    bool normal = true;
    for (int k = 2; k < r.dim && normal; ++k) normal = is_k_normal(scaled, k).is_normal;
    v.add("d_P-th dilate is normal", normal);
  } else {
    v.skip("d_P-th dilate is normal", "only checked for d <= 3");
  }

  if (!r.very_ample) {
    v.add("not very ample implies a non-saturation witness", r.non_saturation.has_value());
    for (const char* name : {"d_P <= m_P <= k_P", "normal iff k_P = 1", "bound dominance", "normality equivalences",
                             "Eisenbud-Goto inequality"}) {
      v.skip(name, "not very ample, k_P undefined");
    }
    return v.take();
  }

  const int m_P = *r.m_P;
  const int k_P = *r.k_P;
  v.add("d_P <= m_P <= k_P", r.d_P <= m_P && m_P <= k_P,
        std::to_string(r.d_P) + " <= " + std::to_string(m_P) + " <= " + std::to_string(k_P));
  v.add("normal iff k_P = 1", r.normal == (k_P == 1));
  v.add("regularity = max(k_P, deg) + 1", r.regularity == std::max(k_P, r.degree) + 1);

  const Integer theorem = *r.bound("theorem")->value;
  v.add("theorem bound = k_P iff normal", (theorem == k_P) == r.normal, "bound=" + str(theorem));
  v.add("d_P = k_P iff normal", (r.d_P == k_P) == r.normal);
  v.add("d_P = m_P iff normal", (r.d_P == m_P) == r.normal);
  if (r.normal) v.add("normal implies m_P = k_P", m_P == k_P);

  for (const auto& b : r.bounds) {
    if (!b.value || !b.proven) continue;
    const int target = b.target == BoundTarget::k_P ? k_P : *r.regularity;
    v.add("bound " + b.name + " >= " + to_string(b.target), *b.value >= target,
          str(*b.value) + " vs " + std::to_string(target));
  }
  if (const auto* refined = r.bound("refined"); refined->value) {
    v.add("theorem bound >= refined bound", theorem >= *refined->value);
  }

  if (r.smooth) {
    v.add("smooth: m_P <= d_P gamma", Integer(m_P) <= Integer(r.d_P) * *r.gamma);
    v.add("smooth: m_P <= d d_P^d Vol",
          Integer(m_P) <= Integer(r.dim) * pow(Integer(r.d_P), static_cast<unsigned>(r.dim)) * r.volume);
    v.add("smooth: m' <= gamma", *r.m_prime <= *r.gamma);
  }

  if (k_P <= r.degree && !r.classical_degenerate) {
    v.add("k_P <= deg implies reg <= Vol - codim + 1", Integer(*r.regularity) <= r.eg_rhs);
  }
  v.add("Eisenbud-Goto inequality", *r.eg_holds, "k_P <= Vol - |P cap M| + d + 1", false);
  return v.take();
}

nlohmann::ordered_json json_integer(const Integer& x) {
  static const Integer safe = (Integer(1) << 53) - 1;
  if (abs(x) <= safe) return x.convert_to<long long>();
  return x.str();
}

nlohmann::ordered_json json_point(const IntVector& x) {
  auto out = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) out.push_back(json_integer(x(i)));
  return out;
}

const char* to_string(BoundTarget target) {
  switch (target) {
    case BoundTarget::k_P: return "k_P";
    case BoundTarget::regularity: return "reg";
    case BoundTarget::none: break;
  }
  return "none";
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skip: break;
  }
  return "skip";
}

nlohmann::ordered_json to_json(const InvariantReport& r) {
  using nlohmann::ordered_json;
  const auto opt = [](const auto& x) -> ordered_json {
    if (!x) return nullptr;
    if constexpr (std::is_same_v<std::decay_t<decltype(*x)>, Integer>) {
      return json_integer(*x);
    } else {
      return *x;
    }
  };

  ordered_json j;
  j["name"] = r.name;
  j["dim"] = r.dim;
  j["num_vertices"] = r.num_vertices;
  j["num_lattice_points"] = r.num_lattice_points;
  j["volume_normalized"] = json_integer(r.volume);
  j["degree"] = r.degree;
  j["d_P"] = r.d_P;
  j["nu_P"] = r.nu_P;
  j["m_P"] = opt(r.m_P);
  j["k_P"] = opt(r.k_P);
  j["very_ample"] = r.very_ample;
  j["smooth"] = r.smooth;
  j["normal"] = r.normal;
  j["gamma"] = opt(r.gamma);
  j["m_prime"] = opt(r.m_prime);
  j["regularity"] = opt(r.regularity);

  ordered_json bounds = ordered_json::object(), targets = ordered_json::object();
  for (const auto& b : r.bounds) {
    bounds[b.name] = opt(b.value);
    targets[b.name] = to_string(b.target);
  }
  j["bounds"] = bounds;
  j["eg_rhs"] = json_integer(r.eg_rhs);
  j["eg_holds"] = opt(r.eg_holds);

  ordered_json witnesses;
  witnesses["hole"] = r.hole ? ordered_json{{"k", r.hole->k}, {"point", json_point(r.hole->point)}} : ordered_json();
  if (r.sigma_max) {
    auto parts = ordered_json::array();
    for (const auto& g : r.sigma_max->certificate.parts) parts.push_back(json_point(g));
    witnesses["sigma_max"] = {{"x", json_point(r.sigma_max->x)},
                              {"vertex", json_point(r.sigma_max->vertex)},
                              {"target", json_point(r.sigma_max->certificate.target)},
                              {"length", r.sigma_max->certificate.length},
                              {"parts", parts}};
  } else {
    witnesses["sigma_max"] = nullptr;
  }
  if (r.non_saturation) {
    witnesses["non_saturation"] = {{"x", json_point(r.non_saturation->x)},
                                   {"vertex", json_point(r.non_saturation->vertex)},
                                   {"target", json_point(r.non_saturation->target)}};
  } else {
    witnesses["non_saturation"] = nullptr;
  }
  j["witnesses"] = witnesses;

  j["bound_targets"] = targets;
  j["classical_degenerate"] = r.classical_degenerate;
  j["d_P_checks"] = {{"below_degree", opt(r.d_P_checks.below_degree)},
                     {"below_volume", r.d_P_checks.below_volume}};
  auto vertices = ordered_json::array();
  for (const auto& v : r.vertices) vertices.push_back(json_point(v));
  j["vertices"] = vertices;
  return j;
}

}  // namespace polynorm
