#pragma once

// Exact integer and rational linear algebra on Eigen dense types.
//
// Every routine here is templated on the scalar only where it makes sense to
// run it over both integers and rationals; geometry code above this layer
// always works with arbitrary-precision integers.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polynorm {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<Integer>;
using IntMatrix = Matrix<Integer>;
using RationalVector = Vector<Rational>;
using RationalMatrix = Matrix<Rational>;

/// Raised for arithmetic preconditions that cannot be met (zero vector has no
/// primitive direction, non-square determinant, ...).
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// ---------------------------------------------------------------------------
// Scalars

/// Floor division for integers (rounds toward negative infinity).
Integer floor_div(const Integer& a, const Integer& b);
/// Ceiling division for integers (rounds toward positive infinity).
Integer ceil_div(const Integer& a, const Integer& b);

/// Narrowing conversion that throws instead of wrapping.
long long to_long(const Integer& x);

/// n! as an arbitrary-precision integer.
Integer factorial(unsigned n);

// ---------------------------------------------------------------------------
// Vectors

/// gcd of the absolute values of the coordinates; 0 for the zero vector.
Integer content(const IntVector& v);

/// v divided by the gcd of its coordinates. Throws MathError on the zero vector.
IntVector primitive(const IntVector& v);

IntVector make_vector(std::initializer_list<long long> coords);
IntMatrix make_matrix(std::initializer_list<std::initializer_list<long long>> rows);

/// Matrix whose rows are the given points.
IntMatrix rows_matrix(const std::vector<IntVector>& rows);

/// Strict lexicographic order on coordinate sequences of equal length.
bool lex_less(const IntVector& a, const IntVector& b);

struct LexLess {
  bool operator()(const IntVector& a, const IntVector& b) const { return lex_less(a, b); }
};

struct PointHash {
  std::size_t operator()(const IntVector& v) const;
};

struct PointEqual {
  bool operator()(const IntVector& a, const IntVector& b) const {
    return a.size() == b.size() && a == b;
  }
};

std::string to_string(const IntVector& v);

// ---------------------------------------------------------------------------
// Fraction-free elimination

/// Exact determinant by Bareiss elimination. Works for any integral scalar
/// (division at each step is exact).
template <typename Derived>
typename Derived::Scalar det_exact(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) {
    throw MathError("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + " matrix");
  }
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> a = m;
  Scalar previous(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return Scalar(0);
      a.row(k).swap(a.row(pivot));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return negate ? Scalar(-a(n - 1, n - 1)) : Scalar(a(n - 1, n - 1));
}

/// Rank over the rationals by fraction-free row echelon reduction.
template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> a = m;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Scalar previous(1);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = r;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) a.row(r).swap(a.row(pivot));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / previous;
      }
      a(i, c) = 0;
    }
    previous = a(r, c);
    ++r;
  }
  return r;
}

/// Rank of the affine hull of a point set (dimension of its span), -1 if empty.
Eigen::Index affine_rank(const std::vector<IntVector>& points);

/// Normal vector of the hyperplane spanned by the rows of an (n-1) x n matrix,
/// given by signed maximal minors. Zero iff the rows are linearly dependent.
IntVector cofactor_normal(const IntMatrix& rows);

// ---------------------------------------------------------------------------
// Linear systems

enum class SolveStatus { unique, no_solution, underdetermined };

struct SolveResult {
  SolveStatus status = SolveStatus::no_solution;
  RationalVector solution;  ///< populated only when status == unique

  explicit operator bool() const { return status == SolveStatus::unique; }
};

/// Exact solution of a * x = b over the rationals.
SolveResult solve_rational(const IntMatrix& a, const IntVector& b);

RationalVector to_rational(const IntVector& v);

}  // namespace polynorm
