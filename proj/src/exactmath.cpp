#include "polynorm/exactmath.hpp"

#include <boost/multiprecision/integer.hpp>

#include <limits>
#include <sstream>

namespace polynorm {

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw MathError("division by zero");
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  if (b == 0) throw MathError("division by zero");
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

long long to_long(const Integer& x) {
  if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("integer " + x.str() + " does not fit in 64 bits");
  }
  return static_cast<long long>(x);
}

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, abs(Integer(v(i))));
  return g;
}

IntVector primitive(const IntVector& v) {
  const Integer g = content(v);
  if (g == 0) throw MathError("no primitive direction for the zero vector");
  IntVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i) / g;
  return out;
}

IntVector make_vector(std::initializer_list<long long> coords) {
  IntVector v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (long long c : coords) v(i++) = c;
  return v;
}

IntMatrix make_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = r == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  IntMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != c) throw MathError("ragged matrix literal");
    Eigen::Index j = 0;
    for (long long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

IntMatrix rows_matrix(const std::vector<IntVector>& rows) {
  if (rows.empty()) return IntMatrix(0, 0);
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw MathError("rows of differing length");
    m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  }
  return m;
}

bool lex_less(const IntVector& a, const IntVector& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return a.size() < b.size();
}

std::size_t PointHash::operator()(const IntVector& v) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::size_t>(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    std::size_t c;
    if (v(i) >= std::numeric_limits<long long>::min() && v(i) <= std::numeric_limits<long long>::max()) {
      c = std::hash<long long>{}(static_cast<long long>(v(i)));
    } else {
      c = std::hash<std::string>{}(v(i).str());
    }
    h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v(i);
  }
  os << ')';
  return os.str();
}

Eigen::Index affine_rank(const std::vector<IntVector>& points) {
  if (points.empty()) return -1;
  if (points.size() == 1) return 0;
  IntMatrix diffs(static_cast<Eigen::Index>(points.size() - 1), points.front().size());
  for (std::size_t i = 1; i < points.size(); ++i) {
    diffs.row(static_cast<Eigen::Index>(i - 1)) = (points[i] - points.front()).transpose();
  }
  return rank(diffs);
}

IntVector cofactor_normal(const IntMatrix& rows) {
  const Eigen::Index n = rows.cols();
  if (rows.rows() + 1 != n) throw MathError("cofactor normal needs an (n-1) x n matrix");
  IntVector normal(n);
  IntMatrix minor(n - 1, n - 1);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index c = 0, k = 0; c < n; ++c) {
      if (c == j) continue;
      minor.col(k++) = rows.col(c);
    }
    Integer m = det_exact(minor);
    normal(j) = (j % 2 == 0) ? m : Integer(-m);
  }
  return normal;
}

RationalVector to_rational(const IntVector& v) {
  RationalVector r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = Rational(v(i));
  return r;
}

SolveResult solve_rational(const IntMatrix& a, const IntVector& b) {
  if (a.rows() != b.size()) throw MathError("right-hand side length does not match the matrix");
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();

  // Gauss-Jordan on the augmented matrix over the rationals.
  RationalMatrix m(rows, cols + 1);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Rational(a(i, j));
    m(i, cols) = Rational(b(i));
  }
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = r;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) m.row(r).swap(m.row(pivot));
    const Rational inv = Rational(1) / m(r, c);
    for (Eigen::Index j = c; j <= cols; ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (Eigen::Index j = c; j <= cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  SolveResult result;
  for (Eigen::Index i = r; i < rows; ++i) {
    if (m(i, cols) != 0) {
      result.status = SolveStatus::no_solution;
      return result;
    }
  }
  if (r < cols) {
    result.status = SolveStatus::underdetermined;
    return result;
  }
  result.status = SolveStatus::unique;
  result.solution = RationalVector(cols);
  for (Eigen::Index i = 0; i < r; ++i) result.solution(pivot_cols[static_cast<std::size_t>(i)]) = m(i, cols);
  return result;
}

}  // namespace polynorm
