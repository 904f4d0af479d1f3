#pragma once

// Independent brute-force references used to cross-check the library. They
// work on plain long long data and share no code with the implementation.

#include "polynorm/exactmath.hpp"

#include <map>
#include <optional>
#include <vector>

namespace oracle {

using Row = std::vector<long long>;
using Grid = std::vector<Row>;

inline Row to_row(const polynorm::IntVector& v) {
  Row out;
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).convert_to<long long>());
  return out;
}

inline std::vector<Row> to_rows(const std::vector<polynorm::IntVector>& pts) {
  std::vector<Row> out;
  for (const auto& p : pts) out.push_back(to_row(p));
  return out;
}

/// Laplace expansion along the first row.
inline long long det_cofactor(const Grid& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Grid minor;
    for (std::size_t r = 1; r < n; ++r) {
      Row row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(m[r][j]);
      }
      minor.push_back(row);
    }
    const long long term = m[0][c] * det_cofactor(minor);
    total += c % 2 ? -term : term;
  }
  return total;
}

inline void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& pick,
                   const auto& visit) {
  if (pick.size() == k) {
    visit(pick);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    pick.push_back(i);
    choose(n, k, i + 1, pick, visit);
    pick.pop_back();
  }
}

/// Largest k with a nonzero k x k minor.
inline std::size_t rank_by_minors(const Grid& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t k = std::min(rows, cols); k > 0; --k) {
    bool found = false;
    std::vector<std::size_t> rs, cs;
    choose(rows, k, 0, rs, [&](const std::vector<std::size_t>& r) {
      if (found) return;
      choose(cols, k, 0, cs, [&](const std::vector<std::size_t>& c) {
        if (found) return;
        Grid sub;
        for (auto i : r) {
          Row row;
          for (auto j : c) row.push_back(m[i][j]);
          sub.push_back(row);
        }
        found = det_cofactor(sub) != 0;
      });
    });
    if (found) return k;
  }
  return 0;
}

/// Is x in the closed simplex spanned by d + 1 affinely independent points
/// (Cramer's rule on barycentric coordinates). Degenerate simplices give false.
inline bool in_simplex(const std::vector<Row>& simplex, const Row& x) {
  const std::size_t d = x.size();
  Grid edges(d, Row(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) edges[j][i] = simplex[i + 1][j] - simplex[0][j];
  }
  const long long det = det_cofactor(edges);
  if (det == 0) return false;
  long long sum = 0;
  for (std::size_t i = 0; i < d; ++i) {
    Grid replaced = edges;
    for (std::size_t j = 0; j < d; ++j) replaced[j][i] = x[j] - simplex[0][j];
    const long long num = det_cofactor(replaced);
    if ((det > 0 && num < 0) || (det < 0 && num > 0)) return false;
    sum += num;
  }
  return det > 0 ? sum <= det : sum >= det;
}

/// x in conv(points) for full-dimensional point sets, by Caratheodory: x lies
/// in some full-dimensional simplex on the points.
inline bool in_hull(const std::vector<Row>& points, const Row& x) {
  const std::size_t d = x.size();
  bool found = false;
  std::vector<std::size_t> pick;
  choose(points.size(), d + 1, 0, pick, [&](const std::vector<std::size_t>& idx) {
    if (found) return;
    std::vector<Row> simplex;
    for (auto i : idx) simplex.push_back(points[i]);
    found = in_simplex(simplex, x);
  });
  return found;
}

/// Extreme points: those not in the hull of the other distinct points. Assumes the others
/// still span (a point whose removal drops the dimension is extreme).
inline std::vector<Row> extreme_points(const std::vector<Row>& points) {
  std::vector<Row> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<Row> others;
    bool duplicate = false;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (points[j] != points[i]) {
        others.push_back(points[j]);
      } else if (j < i) {
        duplicate = true;
      }
    }
    if (duplicate) continue;
    if (!in_hull(others, points[i])) out.push_back(points[i]);
  }
  return out;
}

/// Lattice points of k * conv(points) by scanning the bounding box.
inline std::vector<Row> box_lattice_points(const std::vector<Row>& points, long long k) {
  const std::size_t d = points.front().size();
  std::vector<Row> scaled = points;
  for (auto& p : scaled) {
    for (auto& c : p) c *= k;
  }
  Row lo = scaled.front(), hi = scaled.front();
  for (const auto& p : scaled) {
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  }
  std::vector<Row> out;
  Row x = lo;
  while (true) {
    if (in_hull(scaled, x)) out.push_back(x);
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        for (std::size_t j = i + 1; j < d; ++j) x[j] = lo[j];
        break;
      }
      if (i == 0) return out;
    }
  }
}

/// Minimal multiset size summing to each target reachable with at most
/// max_len generators, by exhaustive enumeration of nondecreasing index tuples.
inline std::map<Row, int> multiset_lengths(const std::vector<Row>& gens, int max_len) {
  std::map<Row, int> best;
  const std::size_t d = gens.empty() ? 0 : gens.front().size();
  std::vector<std::size_t> idx;
  const auto visit = [&](auto&& self, std::size_t start, Row sum) -> void {
    const int len = static_cast<int>(idx.size());
    auto it = best.find(sum);
    if (it == best.end() || it->second > len) best[sum] = len;
    if (len == max_len) return;
    for (std::size_t g = start; g < gens.size(); ++g) {
      Row next = sum;
      for (std::size_t i = 0; i < d; ++i) next[i] += gens[g][i];
      idx.push_back(g);
      self(self, g, next);
      idx.pop_back();
    }
  };
  visit(visit, 0, Row(d, 0));
  return best;
}

/// Shoelace formula: twice the Euclidean area of a polygon given in cyclic order.
inline long long twice_area(const std::vector<Row>& cyclic) {
  long long s = 0;
  for (std::size_t i = 0; i < cyclic.size(); ++i) {
    const auto& a = cyclic[i];
    const auto& b = cyclic[(i + 1) % cyclic.size()];
    s += a[0] * b[1] - a[1] * b[0];
  }
  return s < 0 ? -s : s;
}

}  // namespace oracle
