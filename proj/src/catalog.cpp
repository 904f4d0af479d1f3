#include "polynorm/catalog.hpp"

#include <charconv>
#include <random>

namespace polynorm {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

IntVector unit(int d, int i) {
  IntVector e = IntVector::Zero(d);
  e(i) = 1;
  return e;
}

std::vector<IntVector> cube_points(int d) {
  require(d >= 1, "cube needs d >= 1");
  require(d <= 20, "cube dimension too large");
  std::vector<IntVector> pts;
  for (unsigned long mask = 0; mask < (1ul << d); ++mask) {
    IntVector x(d);
    for (int i = 0; i < d; ++i) x(i) = (mask >> (d - 1 - i)) & 1u;
    pts.push_back(std::move(x));
  }
  return pts;
}

std::vector<IntVector> simplex_points(int d) {
  require(d >= 1, "simplex needs d >= 1");
  std::vector<IntVector> pts{IntVector::Zero(d)};
  for (int i = 0; i < d; ++i) pts.push_back(unit(d, i));
  return pts;
}

std::vector<IntVector> bruns_points(int s) {
  require(s >= 4, "bruns needs s >= 4");
  return {make_vector({0, 0, 0}), make_vector({1, 0, 0}), make_vector({0, 1, 0}), make_vector({0, 0, 1}),
          make_vector({1, 0, 1}), make_vector({0, 1, 1}), make_vector({1, 1, s}),  make_vector({1, 1, s + 1})};
}

std::vector<IntVector> higashitani_points(int d, int h) {
  require(d >= 3, "higashitani needs d >= 3");
  require(h >= 1, "higashitani needs h >= 1");
  const IntVector e1 = unit(d, 0);
  const IntVector ed = unit(d, d - 1);
  IntVector middle = IntVector::Zero(d);  // e_2 + ... + e_{d-1}
  for (int i = 1; i < d - 1; ++i) middle(i) = 1;
  const Integer hh = h;
  std::vector<IntVector> pts{
      IntVector::Zero(d),
      ed,
      middle,
      (middle + ed) * hh,
      middle * Integer(h - 1) + ed * hh,
      middle * hh + ed * Integer(h - 1),
      e1 + ed * Integer(4),
      e1 + ed * Integer(5),
      e1 + middle,
      e1 + middle + ed,
  };
  for (int i = 1; i < d - 1; ++i) {
    pts.push_back(unit(d, i));
    pts.push_back(unit(d, i) + ed);
  }
  return pts;
}

std::vector<IntVector> reeve_points() {
  return {make_vector({0, 0, 0}), make_vector({1, 1, 0}), make_vector({1, 0, 1}), make_vector({0, 1, 1})};
}

std::vector<IntVector> random_points(int d, int bound, int count, std::uint64_t seed) {
  require(d >= 1, "random needs d >= 1");
  require(bound >= 1, "random needs bound >= 1");
  require(count >= d + 1, "random needs at least d + 1 points");
  std::mt19937_64 rng(seed);
  const std::uint64_t range = static_cast<std::uint64_t>(bound) + 1;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<IntVector> pts;
    for (int i = 0; i < count; ++i) {
      IntVector x(d);
      for (int j = 0; j < d; ++j) x(j) = static_cast<long long>(rng() % range);
      pts.push_back(std::move(x));
    }
    if (affine_rank(pts) == d) return pts;
  }
  throw std::invalid_argument("random points stayed degenerate after 1000 draws");
}

std::vector<long long> parse_params(std::string_view text, std::string_view spec) {
  std::vector<long long> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view field = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    long long value = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || end != field.data() + field.size() || field.empty()) {
      throw std::invalid_argument("bad parameter '" + std::string(field) + "' in family spec " + std::string(spec));
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

int narrow(long long x) {
  require(x >= -1000000 && x <= 1000000, "family parameter out of range");
  return static_cast<int>(x);
}

struct ParsedSpec {
  std::string_view family;
  std::vector<long long> params;
};

ParsedSpec split(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  ParsedSpec out;
  out.family = spec.substr(0, colon);
  if (colon != std::string_view::npos) out.params = parse_params(spec.substr(colon + 1), spec);
  return out;
}

}  // namespace

Polytope cube(int d) { return Polytope::from_points(cube_points(d)); }
Polytope standard_simplex(int d) { return Polytope::from_points(simplex_points(d)); }
Polytope bruns_gubeladze(int s) { return Polytope::from_points(bruns_points(s)); }
Polytope higashitani(int d, int h) { return Polytope::from_points(higashitani_points(d, h)); }
Polytope reeve_like() { return Polytope::from_points(reeve_points()); }

Polytope random_polytope(int d, int bound, int count, std::uint64_t seed) {
  return Polytope::from_points(random_points(d, bound, count, seed));
}

bool is_family_spec(std::string_view spec) {
  const std::string_view family = spec.substr(0, spec.find(':'));
  return family == "cube" || family == "simplex" || family == "bruns" || family == "higashitani" ||
         family == "reeve" || family == "random";
}

std::vector<IntVector> family_points(std::string_view spec) {
  const ParsedSpec parsed = split(spec);
  const auto& a = parsed.params;
  const auto arity = [&](std::size_t n) {
    require(a.size() == n, "family " + std::string(parsed.family) + " takes " + std::to_string(n) + " parameter(s)");
  };
  if (parsed.family == "cube") {
    arity(1);
    return cube_points(narrow(a[0]));
  }
  if (parsed.family == "simplex") {
    arity(1);
    return simplex_points(narrow(a[0]));
  }
  if (parsed.family == "bruns") {
    arity(1);
    return bruns_points(narrow(a[0]));
  }
  if (parsed.family == "higashitani") {
    arity(2);
    return higashitani_points(narrow(a[0]), narrow(a[1]));
  }
  if (parsed.family == "reeve") {
    arity(0);
    return reeve_points();
  }
  if (parsed.family == "random") {
    arity(4);
    require(a[3] >= 0, "random seed must be non-negative");
    return random_points(narrow(a[0]), narrow(a[1]), narrow(a[2]), static_cast<std::uint64_t>(a[3]));
  }
  throw std::invalid_argument("unknown polytope family '" + std::string(parsed.family) + "'");
}

Polytope from_family(std::string_view spec) { return Polytope::from_points(family_points(spec)); }

}  // namespace polynorm
